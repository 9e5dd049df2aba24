#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "riesz/errors.hpp"
#include "riesz/phase_symbol.hpp"
#include "riesz/quadrature.hpp"

using namespace riesz;

namespace {

constexpr double kPi = std::numbers::pi;
const double kD = std::exp(-kPi / 2.0);  // d1 = d2 at a = 2 pi, b = 1

bool close(double x, double ref, double rel) { return std::abs(x - ref) <= rel * std::abs(ref); }

}  // namespace

TEST_CASE("coherent constants") {
  const auto d = coherent_constants(2.0 * kPi, 1.0);
  CHECK(close(d.d1, 0.20787957635076190855, 1e-15));
  CHECK(d.d1 == doctest::Approx(d.d2).epsilon(1e-15));

  const auto d4 = coherent_constants(4.0, 1.0);
  CHECK(close(d4.d1, 0.3678794411714423216, 1e-15));
  CHECK(close(d4.d2, 0.084804972471113777302, 1e-14));

  const auto small = coherent_constants(1.0, 1e-9);
  CHECK(small.d1 == doctest::Approx(1.0));
  CHECK(small.d2 == doctest::Approx(1.0));

  CHECK_THROWS_AS(coherent_constants(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(coherent_constants(1.0, -1.0), DomainError);
}

TEST_CASE("constants stay inside (0, 1)") {
  for (double a : {0.1, 1.0, 2.0 * kPi, 50.0})
    for (double b : {0.05, 0.5, 1.0, 3.0}) {
      if (kPi * kPi * b * b / a > 700.0) continue;  // d2 underflows
      const auto d = coherent_constants(a, b);
      CHECK(d.d1 > 0.0);
      CHECK(d.d1 < 1.0);
      CHECK(d.d2 > 0.0);
      CHECK(d.d2 < 1.0);
    }
}

TEST_CASE("optimal window") {
  CHECK(optimal_window(1.0) == doctest::Approx(2.0 * kPi));
  CHECK(optimal_window(0.5) == doctest::Approx(2.0 * kPi));
  const auto best = coherent_constants(optimal_window(1.0), 1.0);
  const auto other = coherent_constants(4.0, 1.0);
  CHECK(std::min(best.d1, best.d2) > std::min(other.d1, other.d2));
  CHECK_THROWS_AS(optimal_window(0.0), DomainError);
}

TEST_CASE("symbol values") {
  const PhaseSymbol s{0.3, 0.7, 0.8};
  CHECK(symbol_value(0, 0, s).value == doctest::Approx(2.0 * 0.3 + 2.0 * 0.7));
  const PhaseSymbol unit{0.5, 0.5, 1.0 / (2.0 * kPi)};
  CHECK(close(symbol_value(1.0, 0.0, unit).value, 2.5430806348152437785, 1e-15));

  const auto big = symbol_value(1e4, 0.0, s);
  CHECK(big.saturated);
  CHECK(big.value == kSymbolSaturation);
  CHECK_FALSE(symbol_value(1.0, 1.0, s).saturated);
}

TEST_CASE("symbol is even in each variable and bounded below") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const PhaseSymbol s{0.4, 1.3, 0.7};
  for (int i = 0; i < 200; ++i) {
    const double k = u(gen), y = u(gen);
    const double v = symbol_value(k, y, s).value;
    CHECK(v == symbol_value(-k, y, s).value);
    CHECK(v == symbol_value(k, -y, s).value);
    CHECK(v == symbol_value(std::abs(k), std::abs(y), s).value);
    CHECK(v >= s.minimum());
  }
}

TEST_CASE("k cutoff") {
  const PhaseSymbol unit{0.5, 0.5, 1.0 / (2.0 * kPi)};
  CHECK(close(k_cutoff(3.0, unit), 1.3169578969248167086, 1e-15));
  CHECK(k_cutoff(2.0 + 1e-12, unit) < 1e-5);
  CHECK_THROWS_AS(k_cutoff(2.0, unit), EmptyRegionError);

  const PhaseSymbol s1{kD, kD, 1.0}, s2{kD, kD, 2.0};
  CHECK(k_cutoff(100.0, s2) == doctest::Approx(0.5 * k_cutoff(100.0, s1)).epsilon(1e-14));
}

TEST_CASE("y_max") {
  const PhaseSymbol unit{0.5, 0.5, 1.0 / (2.0 * kPi)};
  CHECK(close(y_max(0.0, 3.0, unit), 1.3169578969248167086, 1e-15));
  CHECK(y_max(k_cutoff(3.0, unit), 3.0, unit) == 0.0);

  // u(0) = cosh(1) when lambda = 2 c1 + 2 c2 cosh(1)
  const PhaseSymbol s{0.3, 0.7, 0.8};
  const double lam = 2.0 * 0.3 + 2.0 * 0.7 * std::cosh(1.0);
  CHECK(y_max(0.0, lam, s) == doctest::Approx(1.0 / (2.0 * kPi * 0.8)).epsilon(1e-14));
  CHECK_THROWS_AS(y_max(-0.1, lam, s), DomainError);
  CHECK_THROWS_AS(y_max(10.0, lam, s), DomainError);
}

TEST_CASE("inner integral matches a direct quadrature of the positive part") {
  const PhaseSymbol s{kD, kD, 1.0};
  for (double lam : {10.0, 1e3, 1e6}) {
    const double k0 = k_cutoff(lam, s);
    double prev = inner_integral(0.0, lam, s);
    for (double frac : {0.0, 0.2, 0.5, 0.9, 0.999}) {
      const double k = frac * k0;
      const double ym = y_max(k, lam, s);
      const auto r = integrate_adaptive(
          [&](double y) { return std::max(lam - symbol_value(k, y, s).value, 0.0); }, 0.0, ym,
          {1e-13});
      const double v = inner_integral(k, lam, s);
      CHECK(close(v, r.value, 1e-10));
      CHECK(v <= prev);
      CHECK(v >= 0.0);
      prev = v;
    }
    CHECK(inner_integral(k0, lam, s) == 0.0);
  }
}

TEST_CASE("phase volume against high-precision references") {
  const PhaseSymbol unit{0.5, 0.5, 1.0 / (2.0 * kPi)};
  CHECK(close(phase_volume_reduced(3.0, unit), 2.9137990458650611648, 1e-10));
  const PhaseSymbol s{kD, kD, 1.0};
  CHECK(close(phase_volume_reduced(10.0, s), 7.719610369247852197, 1e-10));
  CHECK(close(phase_volume_reduced(100.0, s), 264.91244846867362902, 1e-10));
  CHECK(close(phase_volume_reduced(1e4, s), 96281.165091287544417, 1e-10));
  CHECK(close(phase_volume_reduced(1e6, s), 20904676.958769588074, 1e-10));
  const PhaseSymbol skew{0.3, 0.7, 0.8};
  CHECK(close(phase_volume_reduced(50.0, skew), 101.41160108382887407, 1e-10));
}

TEST_CASE("phase volume vanishes exactly at and below the threshold") {
  const PhaseSymbol s{kD, kD, 1.0};
  CHECK(phase_volume_reduced(s.minimum(), s) == 0.0);
  CHECK(phase_volume_reduced(0.5, s) == 0.0);
  CHECK(phase_volume_quad2d(s.minimum(), s) == 0.0);
  CHECK(phase_volume_reduced(s.minimum() * (1.0 + 1e-9), s) > 0.0);
}

TEST_CASE("reduced and two-dimensional quadratures agree") {
  const PhaseSymbol s{kD, kD, 1.0};
  for (double lam : {10.0, 1e2, 1e4, 1e6}) {
    const double r = phase_volume_reduced(lam, s);
    const double q = phase_volume_quad2d(lam, s);
    CHECK(std::abs(r - q) <= (1e-10 + 1e-9) * r);
  }
  const PhaseSymbol skew{0.3, 0.7, 0.8};
  CHECK(std::abs(phase_volume_reduced(50.0, skew) - phase_volume_quad2d(50.0, skew)) <=
        2e-9 * phase_volume_reduced(50.0, skew));
}

TEST_CASE("volume times b^2 does not depend on b") {
  for (double lam : {10.0, 1e3, 1e5}) {
    const double ref = phase_volume_reduced(lam, PhaseSymbol{kD, kD, 1.0});
    for (double b : {0.5, 2.0}) {
      const double v = phase_volume_reduced(lam, PhaseSymbol{kD, kD, b}) * b * b;
      CHECK(close(v, ref, 1e-10));
    }
  }
}

TEST_CASE("volume is monotone in lambda") {
  const PhaseSymbol s{kD, kD, 1.0};
  double prev = 0.0;
  for (double lam = 1.0; lam < 1e7; lam *= 1.7) {
    const double v = phase_volume_quad2d(lam, s);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("bound integrals") {
  const ModelParams p;
  const auto z = bound_integrals(4.0 * kD, p);
  CHECK(z.i1 == 0.0);
  CHECK(z.i2 == 0.0);
  CHECK(close(bound_integrals(1e4, p).i1, 96281.165091287544417, 1e-10));
  CHECK(close(bound_integrals(1e4, p).i2, 44012.522518581648295, 1e-10));
  double p1 = 0.0, p2 = 0.0;
  for (double lam = 2.0; lam < 1e8; lam *= 3.0) {
    const auto bi = bound_integrals(lam, p);
    CHECK(bi.i2 <= bi.i1);
    CHECK(bi.i1 >= p1);
    CHECK(bi.i2 >= p2);
    p1 = bi.i1;
    p2 = bi.i2;
  }
}

TEST_CASE("I1 follows the derived large-lambda expansion") {
  // (1/pi^2) lambda [(log lambda + pi/2 - 1)^2 + 1 - pi^2/6] over the leading term
  const double lam = 1e6;
  const double l = std::log(lam);
  const double ratio = bound_integrals(lam, ModelParams{}).i1 / (lam * l * l / (kPi * kPi));
  CHECK(close(ratio, 1.0809592643175892071, 1e-9));
  const double expansion = ((l + kPi / 2.0 - 1.0) * (l + kPi / 2.0 - 1.0) + 1.0 - kPi * kPi / 6.0) / (l * l);
  CHECK(close(ratio, expansion, 1e-9));
}

TEST_CASE("simple upper bound") {
  const ModelParams p;
  CHECK(close(simple_upper_bound(1e3, p), 7283.2008905516518509, 1e-13));
  CHECK_THROWS_AS(simple_upper_bound(0.5, p), DomainError);
  // grows without bound as d1 -> 0 (large window a)
  ModelParams wide = p;
  wide.a = 200.0;
  CHECK(simple_upper_bound(1e3, wide) > simple_upper_bound(1e3, p));
}

TEST_CASE("simple bound dominates I1 from a small threshold on") {
  const ModelParams p;
  double lambda0 = 0.0;
  bool holding = true;
  for (double lam = 1e8; lam >= 10.0; lam /= std::pow(10.0, 1.0 / 25.0)) {
    const bool ok = bound_integrals(lam, p).i1 <= simple_upper_bound(lam, p);
    if (!ok) holding = false;
    if (holding) lambda0 = lam;
  }
  MESSAGE("lambda0 = " << lambda0);
  CHECK(lambda0 > 0.0);
  CHECK(lambda0 <= 50.0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ModelParams{0.0, 1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((ModelParams{1.0, -1.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((ModelParams{1.0, 1.0, 0.0}.validate()), DomainError);
  CHECK_NOTHROW((ModelParams{1.0, 0.0, 1.0}.validate()));
  CHECK_THROWS_AS(phase_volume_reduced(10.0, PhaseSymbol{0.0, 1.0, 1.0}), DomainError);
}
