#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace ionflux {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid inputs: rejected before any computation runs.
struct ConfigError : Error {
  using Error::Error;
};

struct NonPositiveProfile : ConfigError {
  using ConfigError::ConfigError;
};

struct OutOfDomain : ConfigError {
  using ConfigError::ConfigError;
};

// |ln L - ln R| below threshold; the expansion divides by it.
struct DegenerateBoundary : Error {
  using Error::Error;
};

// alpha == beta: A = 0 and B is undefined.
struct DegenerateGeometryB : Error {
  using Error::Error;
};

// |B - 1| below threshold; critical voltages blow up.
struct BEqualsOne : Error {
  using Error::Error;
};

struct SingularSecondOrderSystem : Error {
  using Error::Error;
};

struct NonPositiveConcentration : Error {
  using Error::Error;
};

struct NonFinite : Error {
  using Error::Error;
};

struct NegativePredictedConcentration : Error {
  using Error::Error;
};

struct SingularJacobian : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  NoConvergence(const std::string& what, std::array<double, 11> best,
                double norm, int iters, int continuation_step = 0)
      : Error(what), best_state(best), residual_norm(norm),
        iterations(iters), failed_continuation_step(continuation_step) {}

  std::array<double, 11> best_state{};
  double residual_norm{0};
  int iterations{0};
  int failed_continuation_step{0};
};

}  // namespace ionflux
