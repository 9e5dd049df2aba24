#pragma once

#include <optional>
#include <vector>

namespace riesz {

/// Omega_j = {2^{j-1} <= lambda - sigma <= 2^j} for the symmetric symbol
/// with c1 = c2 = c, written as the strip A <= cosh(2 pi b k) + cosh(2 pi b y) <= B.
struct DyadicShell {
  int j;
  double A;  // (lambda - 2^j) / (2c)
  double B;  // (lambda - 2^{j-1}) / (2c)
  bool empty;  // B < 2
};

DyadicShell shell(int j, double lambda, double c);

/// Largest j with a non-empty shell, floor(log2(lambda - 4c) + 1);
/// nullopt when lambda <= 4c.
std::optional<int> shell_index_max(double lambda, double c);

/// Area of {s, t >= 0 : A <= cosh s + cosh t <= B}, which equals
/// the integral of du dv / sqrt((u^2-1)(v^2-1)) over u + v in [A, B], u, v >= 1.
double strip_integral(double A, double B, double rel_tol = 1e-12);

struct ClosedBounds {
  double lower;  // log^2(B/2)
  double upper;  // log^2(2B)
};

ClosedBounds shell_closed_bounds(double B);

struct DyadicTerm {
  int j;
  double strip;     // R_j
  double weighted;  // 2^j R_j
};

struct DyadicSums {
  double lower = 0.0;  // sum 2^{j-1} |Omega_j| over the whole plane
  double upper = 0.0;  // sum 2^j |Omega_j|
  int j_min_used = 0;
  int j_max = 0;
  std::vector<DyadicTerm> terms;  // descending j
};

/// Sums over j <= j_max, descending, stopping once a term drops below
/// tail_tol times the running sum. Requires lambda > 4c.
DyadicSums dyadic_sums(double lambda, double c, double b, double tail_tol = 1e-12);

/// G(t) = t log^2 t - 2 t log t + 2 t, so G'(t) = log^2 t.
double log_square_antiderivative(double t);

/// Closed-form estimate for I1 from the dyadic Riemann-sum argument, as
/// printed: with m = log(lambda - 4d)/log 2 and p = 1/(pi b)^2,
///   2p log^2(lambda/d)
///   + 4p [(lambda-1) log^2((lambda-1)/d) - 2(lambda-1) log((lambda-1)/d)]
///   - 4p (lambda-m-1) log^2((lambda-m-1)/d)
///   + 8p [(lambda-m-1) log((lambda-m-1)/d) + m].
double proof_chain_upper(double lambda, double b, double d);

/// Lower counterpart with q(x) = x/(4 d'):
///   p log^2 q(lambda-1)
///   + p [(lambda-1) log^2 q(lambda-1) - 2(lambda-1) log q(lambda-1)]
///   - p (lambda-m-1) log^2 q(lambda-m-1)
///   + 2p [(lambda-m-1) log q(lambda-m-1) + m],   m = log(lambda - 4d')/log 2.
double proof_chain_lower(double lambda, double b, double d_prime);

}  // namespace riesz
