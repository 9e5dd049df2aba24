#pragma once

#include <cmath>
#include <numbers>

namespace riesz::detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// acosh(1 + e) without forming 1 + e.
inline double acosh1p(double e) {
  if (e <= 0.0) return 0.0;
  return std::log1p(e + std::sqrt(e * (2.0 + e)));
}

/// cosh(x0) - cosh(x0 - gap) for gap >= 0, accurate when gap is small.
inline double cosh_gap(double x0, double gap) {
  return 2.0 * std::sinh(x0 - 0.5 * gap) * std::sinh(0.5 * gap);
}

/// s*cosh(s) - sinh(s) = integral_1^{cosh s} acosh(t) dt, for s >= 0.
inline double acosh_primitive(double s) {
  if (s < 1.0) {
    // sum_{n>=1} 2n s^{2n+1} / (2n+1)!
    const double s2 = s * s;
    double term = s * s2 / 6.0;  // s^3 / 3!
    double sum = 0.0;
    for (int n = 1; n <= 12; ++n) {
      sum += 2.0 * n * term;
      term *= s2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    }
    return sum;
  }
  return s * std::cosh(s) - std::sinh(s);
}

/// u*acosh(u) - sqrt(u^2 - 1) for u = 1 + e.
inline double acosh_primitive_excess(double e) {
  if (e <= 0.0) return 0.0;
  const double s = acosh1p(e);
  if (s < 1.0) return acosh_primitive(s);
  return (1.0 + e) * s - std::sqrt(e * (2.0 + e));
}

}  // namespace riesz::detail
