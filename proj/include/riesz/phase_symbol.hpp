#pragma once

#include <numbers>

namespace riesz {

/// Physical inputs of H(zeta) = U + U^-1 + V + zeta V^-1 and the width `a`
/// of the Gaussian window used by the coherent-state transform.
struct ModelParams {
  double b = 1.0;
  double zeta = 1.0;
  double a = 2.0 * std::numbers::pi;

  /// Throws DomainError unless b > 0, a > 0 and zeta >= 0.
  void validate() const;
};

struct CoherentConstants {
  double d1;  // exp(-a b^2 / 4), momentum weight
  double d2;  // exp(-pi^2 b^2 / a), position weight
};

/// sigma(k, y) = 2 c1 cosh(2 pi b k) + 2 c2 cosh(2 pi b y).
struct PhaseSymbol {
  double c1;
  double c2;
  double b;

  void validate() const;
  /// Smallest value of sigma, attained at the origin.
  double minimum() const { return 2.0 * c1 + 2.0 * c2; }
};

inline constexpr double kSymbolSaturation = 1e300;

struct SymbolValue {
  double value;
  bool saturated;  // value clipped to kSymbolSaturation
};

CoherentConstants coherent_constants(double a, double b);

/// The window width equalizing d1 and d2, which maximizes min(d1, d2).
double optimal_window(double b);

SymbolValue symbol_value(double k, double y, const PhaseSymbol& sym);

/// k0 with {k >= 0 : lambda > sigma(k, 0)} = [0, k0). Throws
/// EmptyRegionError when lambda <= sym.minimum().
double k_cutoff(double lambda, const PhaseSymbol& sym);

/// Positive root in y of sigma(k, y) = lambda, for 0 <= k <= k0.
double y_max(double k, double lambda, const PhaseSymbol& sym);

/// integral_0^{y_max(k)} (lambda - sigma(k, y)) dy, in closed form.
double inner_integral(double k, double lambda, const PhaseSymbol& sym);

/// Full-plane volume integral of (lambda - sigma)_+, reduced to one adaptive
/// quadrature over k of the closed-form inner integral. Zero at and below the
/// threshold sym.minimum(). Throws AccuracyError if rel_tol is not reached.
double phase_volume_reduced(double lambda, const PhaseSymbol& sym, double rel_tol = 1e-10);

/// Same integral by nested adaptive quadrature of (lambda - sigma)_+ with
/// the positivity boundary located by bisection; no closed forms involved.
double phase_volume_quad2d(double lambda, const PhaseSymbol& sym, double rel_tol = 1e-9);

struct BoundIntegrals {
  double i1;  // volume with weights (d1, d2): upper bound for the Riesz mean
  double i2;  // volume with weights (1/d1, 1/d2): lower bound
};

BoundIntegrals bound_integrals(double lambda, const ModelParams& params,
                               double rel_tol = 1e-10);

/// (1/(pi b)^2) log((lambda - 2 d2)/d1) * lambda log(lambda/d2).
double simple_upper_bound(double lambda, const ModelParams& params);

}  // namespace riesz
