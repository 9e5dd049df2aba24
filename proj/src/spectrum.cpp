#include "riesz/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

#include "numeric_detail.hpp"
#include "riesz/errors.hpp"

namespace riesz {
namespace {

using detail::kTwoPi;
using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_grid(const Grid& grid) {
  if (!is_power_of_two(grid.N) || grid.N < 4) throw DomainError("grid N must be a power of two >= 4");
  if (!(grid.L > 0.0)) throw DomainError("grid L must be positive");
}

// cos(2 pi r / N) for r = 0..N-1, with the quarter-period symmetries exact.
template <class T>
std::vector<T> cos_table(int N) {
  std::vector<T> c(N);
  const int q = N / 4;
  const long double step = 2.0L * std::numbers::pi_v<long double> / N;
  for (int r = 0; r <= q; ++r) c[r] = static_cast<T>(std::cos(step * r));
  c[q] = 0;
  for (int r = 0; r <= q; ++r) c[N / 2 - r] = -c[r];
  for (int r = 1; r < N / 2; ++r) c[N - r] = c[r];
  return c;
}

// Kinetic symbol on the frequency index idx = m + N/2.
double kinetic_symbol(const ModelParams& p, const Grid& g, int idx, double cap) {
  const double arg = kTwoPi * p.b * std::abs(g.freq(idx));
  if (arg > 700.0) return cap;
  return std::min(2.0 * std::cosh(arg), cap);
}

double potential(const ModelParams& p, double x) {
  if (p.zeta > 0.0) {
    const double center = std::log(p.zeta) / (2.0 * kTwoPi * p.b);
    return 2.0 * std::sqrt(p.zeta) * std::cosh(kTwoPi * p.b * (x - center));
  }
  return std::exp(kTwoPi * p.b * x);
}

std::vector<double> potential_diagonal(const ModelParams& p, const Grid& g, bool reflect) {
  std::vector<double> v(g.N);
  for (int n = 0; n < g.N; ++n) {
    const double x = reflect ? 2.0 * g.center - g.node(n) : g.node(n);
    v[n] = potential(p, x);
    if (!std::isfinite(v[n]) || v[n] > 1e200)
      throw InfeasibleGridError("potential overflows at the grid edge; grid too wide");
  }
  return v;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Largest relative change by index over the eigenvalues of `prev` at or
// below lambda_cut. A count change is tolerated only for an eigenvalue
// sitting within tol of the cut.
double drift_between(const std::vector<double>& prev, const std::vector<double>& next,
                     double lambda_cut, double tol) {
  auto below = [&](const std::vector<double>& v) {
    return static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), lambda_cut) - v.begin());
  };
  const std::size_t np = below(prev);
  const std::size_t nn = below(next);
  const std::size_t n = std::min(np, nn);
  double drift = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    drift = std::max(drift, std::abs(next[i] - prev[i]) / std::abs(prev[i]));
  if (np != nn) {
    const std::size_t extra = std::max(np, nn) - 1;
    const std::vector<double>& longer = np > nn ? prev : next;
    const std::vector<double>& shorter = np > nn ? next : prev;
    if (np > nn + 1 || nn > np + 1 || extra >= shorter.size())
      return std::numeric_limits<double>::infinity();
    drift = std::max(drift, std::abs(longer[extra] - shorter[extra]) / std::abs(longer[extra]));
    if (std::abs(longer[extra] - lambda_cut) > tol * lambda_cut)
      return std::numeric_limits<double>::infinity();
  }
  return drift;
}

}  // namespace

std::vector<double> Grid::nodes() const {
  std::vector<double> x(N);
  for (int n = 0; n < N; ++n) x[n] = node(n);
  return x;
}

std::vector<double> Grid::freqs() const {
  std::vector<double> k(N);
  for (int i = 0; i < N; ++i) k[i] = freq(i);
  return k;
}

Grid design_grid(double lambda_cut, const ModelParams& params, double safety, double cap) {
  params.validate();
  if (params.zeta == 0.0)
    throw DomainError("zeta = 0 has continuous spectrum; no discrete grid is designed for it");
  const double floor_value = 2.0 + 2.0 * std::sqrt(params.zeta);
  if (!(lambda_cut > floor_value))
    throw DomainError("lambda_cut " + fmt(lambda_cut) + " is not above 2 + 2 sqrt(zeta) = " +
                      fmt(floor_value));
  if (!(safety >= 10.0)) throw DomainError("safety must be at least 10");
  const double top = safety * lambda_cut;
  if (top > cap)
    throw InfeasibleGridError("safety * lambda_cut = " + fmt(top) + " exceeds the kinetic cap " +
                              fmt(cap));
  const double w = kTwoPi * params.b;
  const double hk = std::acosh(top / 2.0) / w;
  const double hx = std::acosh(top / (2.0 * std::min(1.0, std::sqrt(params.zeta)))) / w;

  Grid g;
  g.L = 2.0 * hx;
  g.center = std::log(params.zeta) / (2.0 * w);
  const double needed = 2.0 * g.L * hk * 2.0;
  g.N = 16;
  while (g.N < needed) {
    if (g.N > (1 << 20)) throw InfeasibleGridError("grid would need more than 2^21 points");
    g.N *= 2;
  }
  return g;
}

Eigen::MatrixXd build_hamiltonian(const ModelParams& params, const Grid& grid,
                                  const HamiltonianOptions& opts) {
  params.validate();
  check_grid(grid);
  const int N = grid.N;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(N, N);
  if (opts.kinetic) {
    // Circulant kernel t(r) = (1/N) sum_m K_m cos(2 pi m r / N); K is even in m.
    const std::vector<long double> c = cos_table<long double>(N);
    std::vector<long double> K(N);
    for (int idx = 0; idx < N; ++idx) K[idx] = kinetic_symbol(params, grid, idx, opts.cap);
    std::vector<double> t(N);
    for (int r = 0; r < N; ++r) {
      long double s = 0.0L;
      for (int idx = 0; idx < N; ++idx) {
        const long long m = idx - N / 2;
        const int phase = static_cast<int>(((m * r) % N + N) % N);
        s += K[idx] * c[phase];
      }
      t[r] = static_cast<double>(s / N);
    }
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j) H(i, j) = H(j, i) = t[(j - i) % N];
  }
  if (opts.potential) {
    const std::vector<double> v = potential_diagonal(params, grid, opts.reflect);
    for (int n = 0; n < N; ++n) H(n, n) += v[n];
  }
  return H;
}

std::vector<double> eigen_spectrum(const Eigen::MatrixXd& H) {
  if (H.rows() != H.cols()) throw DomainError("eigen_spectrum needs a square matrix");
  const double scale = H.cwiseAbs().maxCoeff();
  if ((H - H.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("eigen_spectrum needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw SolverError("self-adjoint eigensolver did not converge (n = " +
                      std::to_string(H.rows()) + ")");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> factored_spectrum(const ModelParams& params, const Grid& grid, double cap) {
  params.validate();
  check_grid(grid);
  const int N = grid.N;
  const std::vector<long double> c = cos_table<long double>(N);
  const std::vector<double> v = potential_diagonal(params, grid, false);
  const long double inv_sqrt_n = 1.0L / std::sqrt(static_cast<long double>(N));

  // H = G^T G with G = [diag(sqrt K) Hartley; diag(sqrt V)].
  LMatrix G = LMatrix::Zero(2 * N, N);
  for (int idx = 0; idx < N; ++idx) {
    const long double sk = std::sqrt(static_cast<long double>(kinetic_symbol(params, grid, idx, cap)));
    const long long m = idx - N / 2;
    for (int n = 0; n < N; ++n) {
      const int phase = static_cast<int>(((m * n) % N + N) % N);
      const int shifted = (phase + 3 * N / 4) % N;  // sin(t) = cos(t - pi/2)
      G(idx, n) = sk * (c[phase] + c[shifted]) * inv_sqrt_n;
    }
  }
  for (int n = 0; n < N; ++n) G(N + n, n) = std::sqrt(static_cast<long double>(v[n]));

  Eigen::BDCSVD<LMatrix> svd(G);
  if (svd.info() != Eigen::Success)
    throw SolverError("singular value decomposition failed (N = " + std::to_string(N) + ")");
  const auto& s = svd.singularValues();
  std::vector<double> ev(N);
  for (int i = 0; i < N; ++i) ev[i] = static_cast<double>(s[i] * s[i]);
  std::sort(ev.begin(), ev.end());
  return ev;
}

Spectrum refine_until_converged(const ModelParams& params, double lambda_cut, double tol,
                                const RefineOptions& opts) {
  params.validate();
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (!(opts.safety_step > 1.0)) throw DomainError("safety_step must exceed 1");

  double safety = opts.safety;
  if (safety == 0.0) {
    // Truncation error falls roughly like safety^{-1/b^2}; start near 10/tol
    // on that scale, but leave room for one widening step below the cap.
    safety = std::max(1e4, std::pow(10.0 / tol, params.b * params.b));
    safety = std::min(safety, opts.cap / (opts.safety_step * lambda_cut));
  }
  Grid grid = design_grid(lambda_cut, params, safety, opts.cap);

  Spectrum out;
  out.params = params;
  std::vector<double> prev = factored_spectrum(params, grid, opts.cap);
  out.trace.push_back({grid.N, grid.L, safety, opts.cap, std::numeric_limits<double>::infinity()});

  double last_n_drift = std::numeric_limits<double>::infinity();
  double last_l_drift = std::numeric_limits<double>::infinity();
  bool widen = false;
  bool converged = false;
  for (int level = 1; level < opts.max_levels; ++level) {
    Grid next = grid;
    double next_safety = safety;
    if (widen) {
      next_safety = safety * opts.safety_step;
      if (next_safety * lambda_cut > opts.cap) {
        widen = false;
      } else {
        next = design_grid(lambda_cut, params, next_safety, opts.cap);
        next.N = std::max(next.N, grid.N);
      }
    }
    if (!widen) next.N = grid.N * 2;

    std::vector<double> ev = factored_spectrum(params, next, opts.cap);
    const double d = drift_between(prev, ev, lambda_cut, tol);
    (widen ? last_l_drift : last_n_drift) = d;
    out.trace.push_back({next.N, next.L, next_safety, opts.cap, d});
    grid = next;
    safety = next_safety;
    prev = std::move(ev);
    if (last_n_drift < tol && last_l_drift < tol) {
      converged = true;
      break;
    }
    widen = !widen;
  }

  std::vector<double> trace;
  for (const RefinementLevel& l : out.trace) trace.push_back(l.drift);
  if (!converged)
    throw ConvergenceError("eigenvalues below " + fmt(lambda_cut) + " did not settle to " +
                               fmt(tol) + " within " + std::to_string(opts.max_levels) + " levels",
                           trace);

  const std::vector<double> capped = factored_spectrum(params, grid, 2.0 * opts.cap);
  out.cap_drift = drift_between(prev, capped, lambda_cut, tol);
  if (!(out.cap_drift < tol)) {
    trace.push_back(out.cap_drift);
    throw ConvergenceError("kinetic cap is not inert: doubling it moved eigenvalues by " +
                               fmt(out.cap_drift),
                           trace);
  }

  out.eigenvalues = std::move(prev);
  out.grid = grid;
  out.converged_below = lambda_cut;
  out.drift = std::max(last_n_drift, last_l_drift);
  return out;
}

Spectrum spectrum_from_values(std::vector<double> eigenvalues, double converged_below,
                              const ModelParams& params) {
  std::sort(eigenvalues.begin(), eigenvalues.end());
  Spectrum s;
  s.eigenvalues = std::move(eigenvalues);
  s.params = params;
  s.converged_below = converged_below;
  return s;
}

double riesz_mean(const Spectrum& spec, double lambda) {
  if (lambda > spec.converged_below)
    throw RangeError("lambda " + fmt(lambda) + " beyond converged range " +
                     fmt(spec.converged_below));
  double sum = 0.0;
  for (double e : spec.eigenvalues) {
    if (e >= lambda) break;
    sum += lambda - e;
  }
  return sum;
}

int counting(const Spectrum& spec, double lambda) {
  if (lambda > spec.converged_below)
    throw RangeError("lambda " + fmt(lambda) + " beyond converged range " +
                     fmt(spec.converged_below));
  return static_cast<int>(
      std::upper_bound(spec.eigenvalues.begin(), spec.eigenvalues.end(), lambda) -
      spec.eigenvalues.begin());
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * grid.spacing());
}

StateVector sample_state(const Grid& grid,
                         const std::function<std::complex<double>(double)>& psi) {
  check_grid(grid);
  StateVector out{grid, {}};
  out.values.reserve(grid.N);
  for (int n = 0; n < grid.N; ++n) out.values.push_back(psi(grid.node(n)));
  return out;
}

Eigen::MatrixXcd coherent_transform(const StateVector& psi, double a,
                                    const std::vector<double>& kgrid,
                                    const std::vector<double>& ygrid) {
  if (!(a > 0.0)) throw DomainError("window width a must be positive");
  const Grid& g = psi.grid;
  const double dx = g.spacing();
  if (dx > 0.25 / std::sqrt(a))
    throw ResolutionError("grid spacing " + fmt(dx) + " does not resolve the window (needs <= " +
                          fmt(0.25 / std::sqrt(a)) + ")");
  const int N = g.N;
  const double gnorm = std::pow(a / std::numbers::pi, 0.25);
  Eigen::MatrixXcd E(kgrid.size(), N);
  for (std::size_t i = 0; i < kgrid.size(); ++i)
    for (int n = 0; n < N; ++n) E(i, n) = std::polar(1.0, -kTwoPi * kgrid[i] * g.node(n));
  Eigen::MatrixXcd W(N, ygrid.size());
  for (int n = 0; n < N; ++n)
    for (std::size_t j = 0; j < ygrid.size(); ++j) {
      const double r = g.node(n) - ygrid[j];
      W(n, j) = psi.values[n] * (gnorm * std::exp(-0.5 * a * r * r) * dx);
    }
  return E * W;
}

QuadraticFormCheck quadratic_form_check(const ModelParams& params, const StateVector& psi) {
  params.validate();
  if (params.zeta != 1.0)
    throw UnsupportedError("the coherent-state identity is only checked for zeta = 1");
  const Grid& g = psi.grid;
  const int N = g.N;

  // <H psi, psi> in the Fourier basis: the dense circulant rounds its entries
  // at the size of the largest kinetic symbol, which swamps a smooth state.
  const std::vector<long double> c = cos_table<long double>(N);
  const std::vector<double> v = potential_diagonal(params, g, false);
  long double form = 0.0L;
  for (int idx = 0; idx < N; ++idx) {
    const long long m = idx - N / 2;
    std::complex<long double> s = 0.0L;
    for (int n = 0; n < N; ++n) {
      const int phase = static_cast<int>(((m * n) % N + N) % N);
      const std::complex<long double> e(c[phase], -c[(phase + 3 * N / 4) % N]);
      s += e * std::complex<long double>(psi.values[n]);
    }
    form += kinetic_symbol(params, g, idx, kKineticCap) * std::norm(s) / N;
  }
  for (int n = 0; n < N; ++n) form += v[n] * std::norm(psi.values[n]);
  const double lhs = static_cast<double>(form) * g.spacing();

  // Twice the grid's resolution in both variables over the grid's own box.
  const double dk = 1.0 / (2.0 * g.L);
  const double dy = 0.5 * g.spacing();
  std::vector<double> ks(2 * N), ys(2 * N);
  for (int i = 0; i < 2 * N; ++i) {
    ks[i] = (i - N) * dk;
    ys[i] = g.center - 0.5 * g.L + i * dy;
  }
  const Eigen::MatrixXcd T = coherent_transform(psi, params.a, ks, ys);
  const CoherentConstants d = coherent_constants(params.a, params.b);
  const double w = kTwoPi * params.b;

  double rhs = 0.0;
  double peak = 0.0;
  double edge = 0.0;
  for (int j = 0; j < 2 * N; ++j) {
    for (int i = 0; i < 2 * N; ++i) {
      const double f =
          2.0 * (d.d1 * std::cosh(w * ks[i]) + d.d2 * std::cosh(w * ys[j])) * std::norm(T(i, j));
      rhs += f;
      peak = std::max(peak, f);
      if (i == 0 || j == 0 || i == 2 * N - 1 || j == 2 * N - 1) edge = std::max(edge, f);
    }
  }
  if (edge > 1e-14 * peak)
    throw ResolutionError("phase-space integrand at the box edge is " + fmt(edge / peak) +
                          " of its peak");
  rhs *= dk * dy;
  return {lhs, rhs, std::abs(lhs - rhs) / std::abs(lhs)};
}

}  // namespace riesz
