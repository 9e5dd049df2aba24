#include "riesz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace riesz {
namespace {

// Kronrod abscissae (descending) and weights; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool splittable;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double abs_sum = std::abs(kronrod);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[i] * (f1 + f2);
    abs_sum += kWgk[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::abs(half);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double err = std::abs(kronrod - gauss);
  err = std::max(err, 50.0 * eps * abs_sum);
  const bool splittable =
      center > a && center < b && std::abs(half) > 64.0 * eps * std::max(std::abs(a), std::abs(b));
  return {a, b, kronrod, err, splittable};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const QuadOptions& opts) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  auto worse = [](const Panel& x, const Panel& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);
  std::vector<Panel> frozen;

  Panel first = gauss_kronrod(f, a, b);
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int panels = 1;

  auto done = [&] {
    return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  };
  while (!done() && panels < opts.max_panels && !heap.empty()) {
    Panel worst = heap.top();
    heap.pop();
    if (!worst.splittable) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  std::vector<Panel> all = std::move(frozen);
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  out.value = 0.0;
  out.error = 0.0;
  for (const Panel& p : all) {
    out.value += p.value;
    out.error += p.error;
  }
  out.panels = panels;
  out.converged = out.error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(out.value));
  return out;
}

}  // namespace riesz
