#include "riesz/phase_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "numeric_detail.hpp"
#include "riesz/errors.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {
namespace {

using detail::kTwoPi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// u(k) - 1 where u(k) = (lambda - 2 c1 cosh(2 pi b k)) / (2 c2), written
// through the gap k0 - k so that it stays accurate next to the cutoff.
double u_excess(double k0, double gap, const PhaseSymbol& sym) {
  const double w = kTwoPi * sym.b;
  return (sym.c1 / sym.c2) * detail::cosh_gap(w * k0, w * gap);
}

double inner_from_gap(double k0, double gap, const PhaseSymbol& sym) {
  const double e = u_excess(k0, gap, sym);
  return sym.c2 / (std::numbers::pi * sym.b) * detail::acosh_primitive_excess(e);
}

// Largest x in [0, hi] with f(x) >= 0, for f decreasing with f(0) >= 0.
template <class F>
double bisect_boundary(F&& f, double hi) {
  double lo = 0.0;
  while (f(hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) >= 0.0) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace

void ModelParams::validate() const {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("b must be positive, got " + fmt(b));
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("a must be positive, got " + fmt(a));
  if (!(zeta >= 0.0) || !std::isfinite(zeta))
    throw DomainError("zeta must be non-negative, got " + fmt(zeta));
}

void PhaseSymbol::validate() const {
  if (!(c1 > 0.0) || !(c2 > 0.0) || !(b > 0.0))
    throw DomainError("phase symbol weights and b must be positive");
}

CoherentConstants coherent_constants(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("coherent constants need a > 0 and b > 0");
  const double pi = std::numbers::pi;
  return {std::exp(-a * b * b / 4.0), std::exp(-pi * pi * b * b / a)};
}

double optimal_window(double b) {
  if (!(b > 0.0)) throw DomainError("b must be positive");
  // a b^2 / 4 = pi^2 b^2 / a  =>  a = 2 pi for every b
  return kTwoPi;
}

SymbolValue symbol_value(double k, double y, const PhaseSymbol& sym) {
  const double w = kTwoPi * sym.b;
  // cosh overflows past ~710; anything that large is far above any lambda.
  constexpr double kArgLimit = 690.0;
  if (w * std::abs(k) > kArgLimit || w * std::abs(y) > kArgLimit)
    return {kSymbolSaturation, true};
  const double v = 2.0 * sym.c1 * std::cosh(w * k) + 2.0 * sym.c2 * std::cosh(w * y);
  if (!(v <= kSymbolSaturation)) return {kSymbolSaturation, true};
  return {v, false};
}

double k_cutoff(double lambda, const PhaseSymbol& sym) {
  sym.validate();
  if (!(lambda > sym.minimum()))
    throw EmptyRegionError("lambda " + fmt(lambda) + " is at or below the symbol minimum " +
                           fmt(sym.minimum()));
  const double excess = (lambda - sym.minimum()) / (2.0 * sym.c1);  // arg - 1
  return detail::acosh1p(excess) / (kTwoPi * sym.b);
}

double y_max(double k, double lambda, const PhaseSymbol& sym) {
  const double k0 = k_cutoff(lambda, sym);
  if (!(k >= 0.0) || k > k0)
    throw DomainError("k = " + fmt(k) + " outside [0, k0 = " + fmt(k0) + "]");
  return detail::acosh1p(u_excess(k0, k0 - k, sym)) / (kTwoPi * sym.b);
}

double inner_integral(double k, double lambda, const PhaseSymbol& sym) {
  const double k0 = k_cutoff(lambda, sym);
  if (!(k >= 0.0) || k > k0)
    throw DomainError("k = " + fmt(k) + " outside [0, k0 = " + fmt(k0) + "]");
  return inner_from_gap(k0, k0 - k, sym);
}

double phase_volume_reduced(double lambda, const PhaseSymbol& sym, double rel_tol) {
  sym.validate();
  if (!(lambda > sym.minimum())) return 0.0;
  const double k0 = k_cutoff(lambda, sym);
  // k = k0 - t^2 absorbs the (k0 - k)^{3/2} behaviour at the cutoff.
  auto integrand = [&](double t) { return 2.0 * t * inner_from_gap(k0, t * t, sym); };
  const QuadResult r = integrate_adaptive(integrand, 0.0, std::sqrt(k0), {rel_tol, 0.0, 4000});
  if (!r.converged)
    throw AccuracyError("phase_volume_reduced did not reach rel_tol " + fmt(rel_tol), r.error);
  return 4.0 * r.value;
}

double phase_volume_quad2d(double lambda, const PhaseSymbol& sym, double rel_tol) {
  sym.validate();
  if (!(lambda > sym.minimum())) return 0.0;
  auto excess = [&](double k, double y) { return lambda - symbol_value(k, y, sym).value; };
  const double scale = 1.0 / (kTwoPi * sym.b);
  const double k_edge = bisect_boundary([&](double k) { return excess(k, 0.0); }, scale);

  double inner_error = 0.0;
  bool inner_ok = true;
  auto column = [&](double k) {
    if (excess(k, 0.0) <= 0.0) return 0.0;
    const double y_edge = bisect_boundary([&](double y) { return excess(k, y); }, scale);
    const QuadResult r = integrate_adaptive([&](double y) { return std::max(excess(k, y), 0.0); },
                                            0.0, y_edge, {0.05 * rel_tol, 0.0, 4000});
    inner_ok = inner_ok && r.converged;
    inner_error = std::max(inner_error, r.error);
    return r.value;
  };
  const QuadResult r = integrate_adaptive(column, 0.0, k_edge, {rel_tol, 0.0, 4000});
  if (!r.converged || !inner_ok)
    throw AccuracyError("phase_volume_quad2d did not reach rel_tol " + fmt(rel_tol),
                        std::max(r.error, inner_error));
  return 4.0 * r.value;
}

BoundIntegrals bound_integrals(double lambda, const ModelParams& params, double rel_tol) {
  params.validate();
  const CoherentConstants d = coherent_constants(params.a, params.b);
  const PhaseSymbol upper{d.d1, d.d2, params.b};
  const PhaseSymbol lower{1.0 / d.d1, 1.0 / d.d2, params.b};
  return {phase_volume_reduced(lambda, upper, rel_tol), phase_volume_reduced(lambda, lower, rel_tol)};
}

double simple_upper_bound(double lambda, const ModelParams& params) {
  params.validate();
  const CoherentConstants d = coherent_constants(params.a, params.b);
  if (!(lambda > std::max(2.0 * d.d2 + d.d1, d.d2)))
    throw DomainError("simple_upper_bound needs lambda > max(2 d2 + d1, d2)");
  const double pb = std::numbers::pi * params.b;
  return std::log((lambda - 2.0 * d.d2) / d.d1) * lambda * std::log(lambda / d.d2) / (pb * pb);
}

}  // namespace riesz
