#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ionflux/errors.hpp"

namespace ionflux {

/// Two ion species with z1 > 0 > z2 and positive diffusion coefficients.
template <typename Scalar = double>
struct IonPair {
  Scalar z1{1};
  Scalar z2{-1};
  Scalar D1{1};
  Scalar D2{1};

  void validate() const {
    if (!(z1 > Scalar(0)) || !(z2 < Scalar(0)))
      throw ConfigError("IonPair: requires z1 > 0 > z2");
    if (!(D1 > Scalar(0)) || !(D2 > Scalar(0)))
      throw ConfigError("IonPair: requires D1 > 0 and D2 > 0");
  }
};

/// Transmembrane voltage and electroneutral bath concentrations,
/// z1 c1 = -z2 c2 = L on the left, = R on the right.
template <typename Scalar = double>
struct BathState {
  Scalar V{0};
  Scalar L{1};
  Scalar R{1};

  void validate() const {
    if (!(L > Scalar(0)) || !(R > Scalar(0)))
      throw ConfigError("BathState: requires L > 0 and R > 0");
  }
};

namespace detail {

// Adaptive Simpson on [lo, hi] to absolute tolerance tol.
template <typename Scalar, typename F>
Scalar adaptive_simpson(const F& f, Scalar lo, Scalar hi, Scalar f_lo,
                        Scalar f_mid, Scalar f_hi, Scalar whole, Scalar tol,
                        int depth) {
  const Scalar mid = (lo + hi) / 2;
  const Scalar lm = (lo + mid) / 2;
  const Scalar rm = (mid + hi) / 2;
  const Scalar f_lm = f(lm);
  const Scalar f_rm = f(rm);
  const Scalar left = (mid - lo) / 6 * (f_lo + 4 * f_lm + f_mid);
  const Scalar right = (hi - mid) / 6 * (f_mid + 4 * f_rm + f_hi);
  const Scalar delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol)
    return left + right + delta / 15;
  return adaptive_simpson(f, lo, mid, f_lo, f_lm, f_mid, left, tol / 2,
                          depth - 1) +
         adaptive_simpson(f, mid, hi, f_mid, f_rm, f_hi, right, tol / 2,
                          depth - 1);
}

template <typename Scalar, typename F>
Scalar integrate(const F& f, Scalar lo, Scalar hi, Scalar tol) {
  if (hi <= lo) return Scalar(0);
  const Scalar mid = (lo + hi) / 2;
  const Scalar f_lo = f(lo), f_mid = f(mid), f_hi = f(hi);
  const Scalar whole = (hi - lo) / 6 * (f_lo + 4 * f_mid + f_hi);
  return adaptive_simpson(f, lo, hi, f_lo, f_mid, f_hi, whole, tol, 48);
}

}  // namespace detail

/// Channel cross-section profile h on [0,1] with charge-region junctions
/// a <= b. Profiles: uniform h==1, a strictly positive smooth callable, or a
/// tabulated (x, h) table covering [0,1] with strictly increasing knots.
template <typename Scalar = double>
class ChannelGeometry {
 public:
  static ChannelGeometry uniform(Scalar a, Scalar b) {
    ChannelGeometry g;
    g.kind_ = Kind::Uniform;
    g.set_junctions(a, b);
    return g;
  }

  static ChannelGeometry smooth(std::function<Scalar(Scalar)> h, Scalar a,
                                Scalar b) {
    ChannelGeometry g;
    g.kind_ = Kind::Smooth;
    g.h_ = std::move(h);
    for (int i = 0; i <= 64; ++i) {
      const Scalar x = Scalar(i) / 64;
      if (!(g.h_(x) > Scalar(0)))
        throw NonPositiveProfile("ChannelGeometry: h(x) must be positive");
    }
    g.set_junctions(a, b);
    return g;
  }

  static ChannelGeometry tabulated(std::vector<Scalar> x, std::vector<Scalar> h,
                                   Scalar a, Scalar b) {
    ChannelGeometry g;
    g.kind_ = Kind::Tabulated;
    if (x.size() < 2 || x.size() != h.size())
      throw ConfigError("ChannelGeometry: profile needs matching x,h columns "
                        "with at least two rows");
    if (x.front() != Scalar(0) || x.back() != Scalar(1))
      throw ConfigError("ChannelGeometry: profile must cover x=0 .. x=1");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(h[i] > Scalar(0)))
        throw NonPositiveProfile("ChannelGeometry: h samples must be positive");
      if (i > 0 && !(x[i] > x[i - 1]))
        throw ConfigError("ChannelGeometry: profile x must be strictly "
                          "increasing");
    }
    g.knots_ = std::move(x);
    g.values_ = std::move(h);
    // cumulative trapezoid sums of 1/h at the knots
    g.cumulative_.assign(g.knots_.size(), Scalar(0));
    for (std::size_t i = 1; i < g.knots_.size(); ++i) {
      const Scalar dx = g.knots_[i] - g.knots_[i - 1];
      g.cumulative_[i] = g.cumulative_[i - 1] +
                         dx * (1 / g.values_[i - 1] + 1 / g.values_[i]) / 2;
    }
    g.set_junctions(a, b);
    return g;
  }

  Scalar a() const { return a_; }
  Scalar b() const { return b_; }
  bool is_uniform() const { return kind_ == Kind::Uniform; }

  /// Mirror image: h(1-x) with junctions 1-b, 1-a.
  ChannelGeometry mirrored() const {
    switch (kind_) {
      case Kind::Uniform:
        return uniform(1 - b_, 1 - a_);
      case Kind::Smooth: {
        auto h = h_;
        return smooth([h](Scalar x) { return h(1 - x); }, 1 - b_, 1 - a_);
      }
      case Kind::Tabulated: {
        std::vector<Scalar> x(knots_.size()), v(values_.size());
        for (std::size_t i = 0; i < knots_.size(); ++i) {
          x[i] = 1 - knots_[knots_.size() - 1 - i];
          v[i] = values_[values_.size() - 1 - i];
        }
        x.front() = 0;
        x.back() = 1;
        return tabulated(std::move(x), std::move(v), 1 - b_, 1 - a_);
      }
    }
    throw Error("ChannelGeometry: bad kind");
  }

  Scalar profile_at(Scalar x) const {
    switch (kind_) {
      case Kind::Uniform:
        return Scalar(1);
      case Kind::Smooth:
        return h_(x);
      case Kind::Tabulated: {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
        std::size_t i = std::min<std::size_t>(
            knots_.size() - 1,
            std::max<std::size_t>(1, std::size_t(it - knots_.begin())));
        const Scalar t = (x - knots_[i - 1]) / (knots_[i] - knots_[i - 1]);
        return values_[i - 1] + t * (values_[i] - values_[i - 1]);
      }
    }
    throw Error("ChannelGeometry: bad kind");
  }

  friend Scalar cumulative_resistance(const ChannelGeometry& g, Scalar x) {
    if (!(x >= Scalar(0)) || !(x <= Scalar(1)))
      throw OutOfDomain("cumulative_resistance: x must lie in [0,1]");
    switch (g.kind_) {
      case Kind::Uniform:
        return x;
      case Kind::Smooth: {
        const auto& h = g.h_;
        return detail::integrate<Scalar>(
            [&h](Scalar s) { return 1 / h(s); }, Scalar(0), x, Scalar(1e-12));
      }
      case Kind::Tabulated: {
        const auto& k = g.knots_;
        auto it = std::upper_bound(k.begin(), k.end(), x);
        std::size_t i = std::min<std::size_t>(
            k.size() - 1,
            std::max<std::size_t>(1, std::size_t(it - k.begin())));
        const Scalar t = (x - k[i - 1]) / (k[i] - k[i - 1]);
        return g.cumulative_[i - 1] +
               t * (g.cumulative_[i] - g.cumulative_[i - 1]);
      }
    }
    throw Error("ChannelGeometry: bad kind");
  }

 private:
  enum class Kind { Uniform, Smooth, Tabulated };

  void set_junctions(Scalar a, Scalar b) {
    if (!(a > Scalar(0)) || !(b < Scalar(1)) || !(a <= b))
      throw ConfigError("ChannelGeometry: requires 0 < a <= b < 1");
    // Widths below 1e-9 collapse the middle segment; only exact a == b is
    // accepted, as the explicit zero-width request.
    if (a != b && !(b - a >= Scalar(1e-9)))
      throw ConfigError("ChannelGeometry: requires b - a >= 1e-9 (or a == b)");
    a_ = a;
    b_ = b;
  }

  Kind kind_{Kind::Uniform};
  Scalar a_{0};
  Scalar b_{0};
  std::function<Scalar(Scalar)> h_;
  std::vector<Scalar> knots_;
  std::vector<Scalar> values_;
  std::vector<Scalar> cumulative_;
};

/// Geometry reduced to the three numbers the rest of the model consumes:
/// total resistance H(1) and the normalized junction resistances.
template <typename Scalar = double>
struct GeometryMoments {
  Scalar H1{1};
  Scalar alpha{0};
  Scalar beta{0};

  void validate() const {
    if (!(H1 > Scalar(0)))
      throw ConfigError("GeometryMoments: requires H1 > 0");
    if (!(alpha > Scalar(0)) || !(beta < Scalar(1)) || !(alpha <= beta))
      throw ConfigError("GeometryMoments: requires 0 < alpha <= beta < 1");
  }
};

template <typename Scalar>
GeometryMoments<Scalar> moments(const ChannelGeometry<Scalar>& g) {
  GeometryMoments<Scalar> m;
  m.H1 = cumulative_resistance(g, Scalar(1));
  m.alpha = cumulative_resistance(g, g.a()) / m.H1;
  m.beta = cumulative_resistance(g, g.b()) / m.H1;
  m.validate();
  return m;
}

/// Parse a tabulated profile: CSV with header "x,h", strictly increasing x,
/// first row x=0, last row x=1.
template <typename Scalar = double>
ChannelGeometry<Scalar> load_profile_csv(std::istream& in, Scalar a, Scalar b) {
  std::string line;
  if (!std::getline(in, line))
    throw ConfigError("profile: empty file");
  auto strip = [](std::string s) {
    s.erase(s.find_last_not_of(" \t\r\n") + 1);
    s.erase(0, s.find_first_not_of(" \t\r\n"));
    return s;
  };
  if (strip(line) != "x,h")
    throw ConfigError("profile: expected header 'x,h'");
  std::vector<Scalar> xs, hs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string fx, fh;
    if (!std::getline(row, fx, ',') || !std::getline(row, fh))
      throw ConfigError("profile: bad row at line " + std::to_string(lineno));
    try {
      xs.push_back(static_cast<Scalar>(std::stod(fx)));
      hs.push_back(static_cast<Scalar>(std::stod(fh)));
    } catch (const std::exception&) {
      throw ConfigError("profile: non-numeric value at line " +
                        std::to_string(lineno));
    }
  }
  return ChannelGeometry<Scalar>::tabulated(std::move(xs), std::move(hs), a, b);
}

template <typename Scalar = double>
ChannelGeometry<Scalar> load_profile_csv(const std::string& path, Scalar a,
                                         Scalar b) {
  std::ifstream in(path);
  if (!in) throw ConfigError("profile: cannot open " + path);
  return load_profile_csv<Scalar>(in, a, b);
}

}  // namespace ionflux
