#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "riesz/phase_symbol.hpp"

namespace riesz {

inline constexpr double kKineticCap = 1e15;

/// Periodic grid x_n = center - L/2 + n L/N, n = 0..N-1, with frequencies
/// k_m = m/L for m = -N/2..N/2-1.
struct Grid {
  double L = 0.0;
  int N = 0;
  double center = 0.0;

  double spacing() const { return L / N; }
  double node(int n) const { return center - 0.5 * L + n * spacing(); }
  double freq(int idx) const { return (idx - N / 2) / L; }
  std::vector<double> nodes() const;
  std::vector<double> freqs() const;
};

/// Grid whose x- and k-extent both cover 2cosh(2 pi b .) <= safety * lambda_cut.
/// Throws DomainError for lambda_cut <= 2 + 2 sqrt(zeta), safety < 10 or
/// zeta = 0, and InfeasibleGridError when safety * lambda_cut exceeds `cap`.
Grid design_grid(double lambda_cut, const ModelParams& params, double safety,
                 double cap = kKineticCap);

struct HamiltonianOptions {
  bool kinetic = true;
  bool potential = true;
  bool reflect = false;  // evaluate the potential at 2 center - x
  double cap = kKineticCap;
};

/// T + diag(V) in the node basis, where T is the circulant with symbol
/// min(2cosh(2 pi b k_m), cap) and V = e^{2 pi b x} + zeta e^{-2 pi b x}.
Eigen::MatrixXd build_hamiltonian(const ModelParams& params, const Grid& grid,
                                  const HamiltonianOptions& opts = {});

/// All eigenvalues of a symmetric matrix, ascending.
std::vector<double> eigen_spectrum(const Eigen::MatrixXd& H);

/// Eigenvalues of the same operator as build_hamiltonian, from the singular
/// values of the 2N x N factor [sqrt(K) Hartley; sqrt(V)] in extended
/// precision. Small eigenvalues keep their relative accuracy even when the
/// kinetic cap makes ||H|| huge.
std::vector<double> factored_spectrum(const ModelParams& params, const Grid& grid,
                                      double cap = kKineticCap);

struct RefinementLevel {
  int N;
  double L;
  double safety;
  double cap;
  double drift;  // against the previous level; +inf for the first
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  Grid grid;
  ModelParams params;
  double converged_below = 0.0;
  double drift = 0.0;      // max relative change at the last refinement step
  double cap_drift = 0.0;  // change under doubling the kinetic cap
  std::vector<RefinementLevel> trace;
};

struct RefineOptions {
  double safety = 0.0;  // 0 picks a starting safety from tol and b
  double safety_step = 10.0;
  int max_levels = 6;
  double cap = kKineticCap;
};

/// Alternates N-doubling and L-widening until both kinds of step move every
/// eigenvalue <= lambda_cut by less than tol (relative), then checks that
/// doubling the kinetic cap is inert. Throws ConvergenceError otherwise.
Spectrum refine_until_converged(const ModelParams& params, double lambda_cut, double tol = 1e-8,
                                const RefineOptions& opts = {});

/// Spectrum from an explicit eigenvalue list (tests, files read back).
Spectrum spectrum_from_values(std::vector<double> eigenvalues, double converged_below,
                              const ModelParams& params = {});

/// sum_j (lambda - lambda_j)_+. Throws RangeError beyond converged_below.
double riesz_mean(const Spectrum& spec, double lambda);

/// #{j : lambda_j <= lambda}. Throws RangeError beyond converged_below.
int counting(const Spectrum& spec, double lambda);

struct StateVector {
  Grid grid;
  std::vector<std::complex<double>> values;

  /// (sum |psi_n|^2 Delta)^{1/2}
  double norm() const;
};

StateVector sample_state(const Grid& grid,
                         const std::function<std::complex<double>(double)>& psi);

/// psi~(k, y) = sum_n e^{-2 pi i k x_n} g(x_n - y) psi_n Delta with
/// g(x) = (a/pi)^{1/4} e^{-a x^2 / 2}. Rows follow kgrid, columns ygrid.
/// Throws ResolutionError when Delta > 0.25/sqrt(a).
Eigen::MatrixXcd coherent_transform(const StateVector& psi, double a,
                                    const std::vector<double>& kgrid,
                                    const std::vector<double>& ygrid);

struct QuadraticFormCheck {
  double lhs;  // <H psi, psi>
  double rhs;  // integral of 2(d1 cosh(2 pi b k) + d2 cosh(2 pi b y)) |psi~|^2
  double rel_err;
};

/// Requires zeta = 1 (UnsupportedError otherwise). Throws ResolutionError
/// when the phase-space integrand has not decayed to 1e-14 of its peak at
/// the edge of the integration box.
QuadraticFormCheck quadratic_form_check(const ModelParams& params, const StateVector& psi);

}  // namespace riesz
