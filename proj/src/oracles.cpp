#include "riesz/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace riesz::oracle {

Tridiagonal householder_tridiagonalize(const Eigen::MatrixXd& input) {
  const int n = static_cast<int>(input.rows());
  Eigen::MatrixXd A = input;
  for (int k = 0; k + 2 < n; ++k) {
    Eigen::VectorXd x = A.col(k).tail(n - k - 1);
    const double alpha = x.norm();
    if (alpha == 0.0) continue;
    Eigen::VectorXd v = x;
    v[0] += (x[0] >= 0.0 ? alpha : -alpha);
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v /= vnorm;
    // A <- P A P on the trailing block, P = I - 2 v v^T
    auto block = A.bottomRightCorner(n - k - 1, n - k - 1);
    const Eigen::VectorXd p = 2.0 * (block * v);
    const Eigen::VectorXd w = p - v * v.dot(p);
    block -= v * w.transpose() + w * v.transpose();
    const double beta = x[0] >= 0.0 ? -alpha : alpha;
    A.col(k).tail(n - k - 1).setZero();
    A.row(k).tail(n - k - 1).setZero();
    A(k + 1, k) = A(k, k + 1) = beta;
  }
  Tridiagonal T;
  for (int i = 0; i < n; ++i) T.diag.push_back(A(i, i));
  for (int i = 0; i + 1 < n; ++i) T.off.push_back(A(i + 1, i));
  return T;
}

int sturm_count(const Tridiagonal& T, double x) {
  int count = 0;
  double q = 1.0;
  const double tiny = 1e-300;
  for (std::size_t i = 0; i < T.diag.size(); ++i) {
    const double e2 = i == 0 ? 0.0 : T.off[i - 1] * T.off[i - 1];
    q = T.diag[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> bisection_eigenvalues(const Tridiagonal& T, double abs_tol) {
  const std::size_t n = T.diag.size();
  // Gershgorin interval
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(T.off[i - 1]);
    if (i + 1 < n) r += std::abs(T.off[i]);
    lo = std::min(lo, T.diag[i] - r);
    hi = std::max(hi, T.diag[i] + r);
  }
  std::vector<double> ev(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    while (b - a > abs_tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(T, mid) > static_cast<int>(k)) b = mid; else a = mid;
    }
    ev[k] = 0.5 * (a + b);
  }
  return ev;
}

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) A(i, j) = A(j, i) = dist(gen);
  return A;
}

namespace {

long double height(long double X, long double s) {
  const long double arg = X - std::cosh(s);
  return arg > 1.0L ? std::acosh(arg) : 0.0L;
}

// Midpoint rule for the integral over s in [lo, top] of f(s) with s = top - w^2.
template <class F>
long double midpoint_closing(F&& f, long double lo, long double top, int cells) {
  const long double wmax = std::sqrt(top - lo);
  const long double h = wmax / cells;
  long double sum = 0.0L;
  for (int i = 0; i < cells; ++i) {
    const long double w = (i + 0.5L) * h;
    sum += 2.0L * w * f(top - w * w);
  }
  return sum * h;
}

}  // namespace

double strip_riemann(double A, double B, int cells) {
  if (B <= 2.0) return 0.0;
  const long double lB = B, lA = A;
  const long double sB = std::acosh(lB - 1.0L);
  auto tB = [&](long double s) { return height(lB, s); };
  if (A <= 2.0) return static_cast<double>(midpoint_closing(tB, 0.0L, sB, cells));
  const long double sA = std::acosh(lA - 1.0L);
  auto diff = [&](long double s) { return height(lB, s) - height(lA, s); };
  return static_cast<double>(midpoint_closing(diff, 0.0L, sA, cells) +
                             midpoint_closing(tB, sA, sB, cells));
}

double strip_cell_count(double A, double B, int cells_per_axis) {
  if (B <= 2.0) return 0.0;
  const double sB = std::acosh(B - 1.0);
  const double h = sB / cells_per_axis;
  double count = 0.0;
  for (int i = 0; i < cells_per_axis; ++i) {
    const double cs = std::cosh((i + 0.5) * h);
    for (int j = 0; j < cells_per_axis; ++j) {
      const double v = cs + std::cosh((j + 0.5) * h);
      if (v >= A && v <= B) count += 1.0;
    }
  }
  return count * h * h;
}

}  // namespace riesz::oracle
