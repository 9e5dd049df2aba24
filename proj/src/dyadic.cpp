#include "riesz/dyadic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "numeric_detail.hpp"
#include "riesz/errors.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {
namespace {

using detail::acosh1p;
using detail::cosh_gap;

// acosh(1 + ey) - acosh(1 + ex) with ey - ex = delta > 0 known exactly.
double acosh_diff(double ex, double ey, double delta) {
  const double sx = std::sqrt(ex * (2.0 + ex));
  const double sy = std::sqrt(ey * (2.0 + ey));
  const double gap = delta + delta * (2.0 + ex + ey) / (sx + sy);
  return std::log1p(gap / (1.0 + ex + sx));
}

double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  const QuadResult r = integrate_adaptive(f, lo, hi, {rel_tol, 0.0, 4000});
  if (!r.converged) throw AccuracyError("strip quadrature did not converge", r.error);
  return r.value;
}

// Area of the strip with the width passed separately, so thin strips keep
// their relative accuracy when A and B are close.
double strip_area(double A, double B, double delta, double rel_tol) {
  if (!(B > 2.0)) return 0.0;
  const double sB = acosh1p(B - 2.0);
  // s = s_B - w^2 near the outer boundary, where t_B(s) has a square-root edge.
  auto outer = [&](double w) { return 2.0 * w * acosh1p(cosh_gap(sB, w * w)); };
  if (A <= 2.0) return integrate(outer, 0.0, std::sqrt(sB), rel_tol);

  const double sA = acosh1p(A - 2.0);
  const double span = acosh_diff(A - 2.0, B - 2.0, delta);  // sB - sA
  const double tail = integrate(outer, 0.0, std::sqrt(span), rel_tol);
  auto inner = [&](double w) {
    const double ex = cosh_gap(sA, w * w);
    return 2.0 * w * acosh_diff(ex, ex + delta, delta);
  };
  return integrate(inner, 0.0, std::sqrt(sA), rel_tol) + tail;
}

void require_log_args(std::initializer_list<double> args, const char* who) {
  for (double x : args) {
    if (!(x > 1.0))
      throw DomainError(std::string(who) + ": logarithm argument " + std::to_string(x) +
                        " is not above 1");
  }
}

}  // namespace

DyadicShell shell(int j, double lambda, double c) {
  const double A = (lambda - std::ldexp(1.0, j)) / (2.0 * c);
  const double B = (lambda - std::ldexp(1.0, j - 1)) / (2.0 * c);
  return {j, A, B, B < 2.0};
}

std::optional<int> shell_index_max(double lambda, double c) {
  if (!(c > 0.0)) throw DomainError("shell_index_max needs c > 0");
  if (!(lambda > 4.0 * c)) return std::nullopt;
  int j = static_cast<int>(std::floor(std::log2(lambda - 4.0 * c) + 1.0));
  while (!shell(j + 1, lambda, c).empty) ++j;
  while (shell(j, lambda, c).empty) --j;
  return j;
}

double strip_integral(double A, double B, double rel_tol) {
  if (!(B >= A)) throw DomainError("strip_integral needs A <= B");
  return strip_area(A, B, B - A, rel_tol);
}

ClosedBounds shell_closed_bounds(double B) {
  if (!(B >= 2.0)) throw DomainError("shell_closed_bounds needs B >= 2");
  const double lo = std::log(B / 2.0);
  const double hi = std::log(2.0 * B);
  return {lo * lo, hi * hi};
}

DyadicSums dyadic_sums(double lambda, double c, double b, double tail_tol) {
  if (!(c > 0.0) || !(b > 0.0)) throw DomainError("dyadic_sums needs c > 0 and b > 0");
  if (!(tail_tol > 0.0)) throw DomainError("dyadic_sums needs tail_tol > 0");
  const std::optional<int> top = shell_index_max(lambda, c);
  if (!top) throw DomainError("dyadic_sums needs lambda > 4c");

  DyadicSums out;
  out.j_max = *top;
  double partial = 0.0;
  for (int j = *top; j > -1000; --j) {
    const DyadicShell s = shell(j, lambda, c);
    const double width = std::ldexp(1.0, j - 1) / (2.0 * c);
    const double r = strip_area(s.A, s.B, width, 1e-12);
    const double term = std::ldexp(r, j);
    out.terms.push_back({j, r, term});
    partial += term;
    out.j_min_used = j;
    if (term < tail_tol * partial) break;
  }
  const double pb = std::numbers::pi * b;
  out.upper = partial / (pb * pb);
  out.lower = 0.5 * out.upper;
  return out;
}

double log_square_antiderivative(double t) {
  if (!(t > 0.0)) throw DomainError("log_square_antiderivative needs t > 0");
  const double l = std::log(t);
  return t * l * l - 2.0 * t * l + 2.0 * t;
}

double proof_chain_upper(double lambda, double b, double d) {
  if (!(b > 0.0) || !(d > 0.0)) throw DomainError("proof_chain_upper needs b, d > 0");
  if (!(lambda > 4.0 * d + 1.0)) throw DomainError("proof_chain_upper needs lambda > 4d + 1");
  const double m = std::log(lambda - 4.0 * d) / std::numbers::ln2;
  const double x1 = (lambda - 1.0) / d;
  const double xm = (lambda - m - 1.0) / d;
  require_log_args({lambda / d, x1, xm}, "proof_chain_upper");
  const double p = 1.0 / (std::numbers::pi * std::numbers::pi * b * b);
  const double l0 = std::log(lambda / d);
  const double l1 = std::log(x1);
  const double lm = std::log(xm);
  return 2.0 * p * l0 * l0 +
         4.0 * p * ((lambda - 1.0) * l1 * l1 - 2.0 * (lambda - 1.0) * l1) -
         4.0 * p * (lambda - m - 1.0) * lm * lm +
         8.0 * p * ((lambda - m - 1.0) * lm + m);
}

double proof_chain_lower(double lambda, double b, double d_prime) {
  if (!(b > 0.0) || !(d_prime > 0.0)) throw DomainError("proof_chain_lower needs b, d' > 0");
  if (!(lambda > 4.0 * d_prime + 1.0))
    throw DomainError("proof_chain_lower needs lambda > 4d' + 1");
  const double m = std::log(lambda - 4.0 * d_prime) / std::numbers::ln2;
  const double q1 = (lambda - 1.0) / (4.0 * d_prime);
  const double qm = (lambda - m - 1.0) / (4.0 * d_prime);
  require_log_args({q1, qm}, "proof_chain_lower");
  const double p = 1.0 / (std::numbers::pi * std::numbers::pi * b * b);
  const double l1 = std::log(q1);
  const double lm = std::log(qm);
  return p * l1 * l1 +
         p * ((lambda - 1.0) * l1 * l1 - 2.0 * (lambda - 1.0) * l1) -
         p * (lambda - m - 1.0) * lm * lm +
         2.0 * p * ((lambda - m - 1.0) * lm + m);
}

}  // namespace riesz
