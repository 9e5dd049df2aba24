#pragma once

#include <functional>

namespace riesz {

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 4000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // sum of per-panel |K15 - G7|
  int panels = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). The returned value is
/// summed in ascending panel order, so repeated calls are bit-identical.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const QuadOptions& opts = {});

}  // namespace riesz
