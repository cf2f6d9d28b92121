#pragma once

#include <cmath>

namespace ionflux {

/// Truncated power series a0 + a1 q + a2 q^2 in the charge parameter.
/// Arithmetic propagates exact Taylor coefficients through order 2, which is
/// how the second-order flux intercepts are assembled in closed form.
template <typename Scalar = double>
struct Series2 {
  Scalar a0{0}, a1{0}, a2{0};

  Series2() = default;
  Series2(Scalar c0) : a0(c0) {}
  Series2(Scalar c0, Scalar c1, Scalar c2) : a0(c0), a1(c1), a2(c2) {}

  friend Series2 operator+(const Series2& x, const Series2& y) {
    return {x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2};
  }
  friend Series2 operator-(const Series2& x, const Series2& y) {
    return {x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2};
  }
  friend Series2 operator-(const Series2& x) { return {-x.a0, -x.a1, -x.a2}; }
  friend Series2 operator*(const Series2& x, const Series2& y) {
    return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0,
            x.a0 * y.a2 + x.a1 * y.a1 + x.a2 * y.a0};
  }
  friend Series2 operator/(const Series2& x, const Series2& y) {
    return x * inverse(y);
  }

  friend Series2 inverse(const Series2& x) {
    const Scalar i0 = Scalar(1) / x.a0;
    return {i0, -x.a1 * i0 * i0, (x.a1 * x.a1 * i0 - x.a2) * i0 * i0};
  }

  friend Series2 exp(const Series2& x) {
    const Scalar e = std::exp(x.a0);
    return {e, e * x.a1, e * (x.a2 + x.a1 * x.a1 / 2)};
  }

  friend Series2 log(const Series2& x) {
    return {std::log(x.a0), x.a1 / x.a0,
            x.a2 / x.a0 - x.a1 * x.a1 / (2 * x.a0 * x.a0)};
  }

  /// x^p for constant exponent p; x.a0 must be positive.
  friend Series2 pow(const Series2& x, Scalar p) {
    return exp(Series2(p) * log(x));
  }
};

template <typename Scalar>
Series2<Scalar> operator+(Scalar c, const Series2<Scalar>& x) {
  return Series2<Scalar>(c) + x;
}
template <typename Scalar>
Series2<Scalar> operator-(Scalar c, const Series2<Scalar>& x) {
  return Series2<Scalar>(c) - x;
}
template <typename Scalar>
Series2<Scalar> operator*(Scalar c, const Series2<Scalar>& x) {
  return Series2<Scalar>(c) * x;
}
template <typename Scalar>
Series2<Scalar> operator/(Scalar c, const Series2<Scalar>& x) {
  return Series2<Scalar>(c) / x;
}

}  // namespace ionflux
