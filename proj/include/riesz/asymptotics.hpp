#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace riesz {

/// (1/(pi b)^2) lambda log^2 lambda. Requires lambda > 1.
double leading_term(double lambda, double b);

/// The Theorem 1 bracket times 1/(pi b)^2:
///   lambda log^2 lambda - (lambda - L) log^2(lambda - L) - 2 lambda log lambda
///   + 2 (lambda - L) log(lambda - L) + log^2 lambda + L,
/// with L = log2(lambda) = ln(lambda)/ln 2. Requires lambda >= 2.
double theorem1_expression(double lambda, double b);

/// lim N(lambda) / log^2 lambda = 1/(pi b)^2.
double weyl_constant_zeta(double b);

struct Rational {
  std::int64_t num;
  std::int64_t den;  // > 0, gcd(num, den) = 1

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

/// (m + n + 1)^2 / (2 m n) in lowest terms. m, n >= 1.
Rational c_mn(int m, int n);

struct CountingSandwich {
  double low;        // kappa(lambda) / lambda
  double mid_bound;  // kappa((1 + tau) lambda) / (tau lambda)
  double high;       // (1/(pi b)^2) (1 + 1/tau) log^2((1 + tau) lambda)
};

CountingSandwich counting_sandwich(const std::function<double(double)>& kappa, double lambda,
                                   double tau, double b);

struct AsymptoticsReport {
  double lambda;
  double leading;
  double theorem1;  // NaN below lambda = 2
  std::optional<double> weyl_ratio;  // kappa / leading, when kappa is given
  std::optional<CountingSandwich> sandwich;
};

AsymptoticsReport asymptotics_report(double lambda, double b,
                                     const std::function<double(double)>& kappa = {},
                                     double tau = 1.0);

}  // namespace riesz
