#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

// Reference computations kept deliberately independent of riesz_core's
// solvers: they share no code paths with the functions they check.
namespace riesz::oracle {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size n - 1
};

/// Householder reduction of a symmetric matrix to tridiagonal form.
Tridiagonal householder_tridiagonalize(const Eigen::MatrixXd& A);

/// Number of eigenvalues of T strictly below x (Sturm sequence count).
int sturm_count(const Tridiagonal& T, double x);

/// All eigenvalues of T, ascending, by bisection on the Sturm count.
std::vector<double> bisection_eigenvalues(const Tridiagonal& T, double abs_tol);

/// Symmetric matrix with entries uniform in [-1, 1], from std::mt19937_64.
Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed);

/// Area of {s, t >= 0 : A <= cosh s + cosh t <= B} by a midpoint rule in w
/// after s = s_B - w^2 (and s = s_A - w^2), with column heights from plain
/// long double acosh. `cells` midpoints per piece.
double strip_riemann(double A, double B, int cells);

/// Cell count of the same area on a uniform (s, t) lattice: a coarse check
/// that involves no substitution at all.
double strip_cell_count(double A, double B, int cells_per_axis);

}  // namespace riesz::oracle
