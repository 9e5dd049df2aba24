#include "riesz/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "riesz/errors.hpp"

namespace riesz {
namespace {

double prefactor(double b) {
  if (!(b > 0.0)) throw DomainError("b must be positive");
  return 1.0 / (std::numbers::pi * std::numbers::pi * b * b);
}

}  // namespace

double leading_term(double lambda, double b) {
  const double p = prefactor(b);
  if (!(lambda > 1.0)) throw DomainError("leading_term needs lambda > 1");
  const double l = std::log(lambda);
  return p * lambda * l * l;
}

double theorem1_expression(double lambda, double b) {
  const double p = prefactor(b);
  if (!(lambda >= 2.0)) throw DomainError("theorem1_expression needs lambda >= 2");
  const double l = std::log(lambda);
  const double l2 = std::log2(lambda);
  const double r = lambda - l2;
  const double lr = std::log(r);
  return p * (lambda * l * l - r * lr * lr - 2.0 * lambda * l + 2.0 * r * lr + l * l + l2);
}

double weyl_constant_zeta(double b) { return prefactor(b); }

Rational c_mn(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("c_mn needs m >= 1 and n >= 1");
  const std::int64_t s = static_cast<std::int64_t>(m) + n + 1;
  std::int64_t num = s * s;
  std::int64_t den = 2 * static_cast<std::int64_t>(m) * n;
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

CountingSandwich counting_sandwich(const std::function<double(double)>& kappa, double lambda,
                                   double tau, double b) {
  if (!(tau > 0.0)) throw DomainError("counting_sandwich needs tau > 0");
  if (!(lambda > 0.0)) throw DomainError("counting_sandwich needs lambda > 0");
  const double p = prefactor(b);
  const double grown = (1.0 + tau) * lambda;
  const double lg = std::log(grown);
  return {kappa(lambda) / lambda, kappa(grown) / (tau * lambda), p * (1.0 + 1.0 / tau) * lg * lg};
}

AsymptoticsReport asymptotics_report(double lambda, double b,
                                     const std::function<double(double)>& kappa, double tau) {
  AsymptoticsReport rep{};
  rep.lambda = lambda;
  rep.leading = leading_term(lambda, b);
  rep.theorem1 = lambda >= 2.0 ? theorem1_expression(lambda, b)
                               : std::numeric_limits<double>::quiet_NaN();
  if (kappa) {
    rep.weyl_ratio = kappa(lambda) / rep.leading;
    rep.sandwich = counting_sandwich(kappa, lambda, tau, b);
  }
  return rep;
}

}  // namespace riesz
