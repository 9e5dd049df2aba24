#include <doctest.h>

#include <cmath>
#include <numbers>

#include "riesz/dyadic.hpp"
#include "riesz/errors.hpp"
#include "riesz/oracles.hpp"
#include "riesz/phase_symbol.hpp"

using namespace riesz;

namespace {

const double kD = std::exp(-std::numbers::pi / 2.0);

bool close(double x, double ref, double rel) { return std::abs(x - ref) <= rel * std::abs(ref); }

}  // namespace

TEST_CASE("shell geometry") {
  const DyadicShell s4 = shell(4, 10.0, 1.0);
  CHECK(s4.B == 1.0);
  CHECK(s4.empty);

  const DyadicShell s1 = shell(1, 6.0, 1.0);
  CHECK(s1.B == 2.5);
  CHECK_FALSE(s1.empty);

  for (int j = -5; j < 12; ++j) {
    CHECK(shell(j, 1e3, kD).A < shell(j, 1e3, kD).B);
    CHECK(shell(j, 1e3, kD).A == shell(j + 1, 1e3, kD).B);
  }
}

TEST_CASE("largest non-empty shell") {
  CHECK(shell_index_max(10.0, 1.0) == 3);
  CHECK(shell_index_max(5.0, 1.0) == 1);
  CHECK(shell_index_max(4.0 * kD + 1.0, kD) == 1);
  CHECK_FALSE(shell_index_max(4.0, 1.0).has_value());
  CHECK_FALSE(shell_index_max(1.0, 1.0).has_value());
}

TEST_CASE("emptiness law holds across a window of j") {
  for (double lam : {5.5, 10.0, 37.0, 1e3, 1e6})
    for (double c : {kD, 0.5, 1.0, 1.0 / kD}) {
      const auto top = shell_index_max(lam, c);
      if (!top) continue;
      for (int j = *top - 30; j <= *top + 5; ++j) CHECK(shell(j, lam, c).empty == (j > *top));
    }
}

TEST_CASE("strip integral references") {
  CHECK(strip_integral(0.0, 2.0) == 0.0);
  CHECK(close(strip_integral(0.0, 4.0), 2.5747220165852186708, 1e-11));
  CHECK(close(strip_integral(2.0, 4.0), 2.5747220165852186708, 1e-11));
  CHECK(close(strip_integral(3.0, 4.0), 1.1676625270882295694, 1e-11));
  CHECK(close(strip_integral(4.0, 10.0), 4.7295604439689861731, 1e-11));
  CHECK(close(strip_integral(2.0, 1e4), 96.434131542354924581, 1e-11));
  CHECK(strip_integral(2.0, 4.0) <= std::log(8.0) * std::log(8.0));
  CHECK_THROWS_AS(strip_integral(4.0, 3.0), DomainError);
}

TEST_CASE("strip integral agrees with the Riemann oracles") {
  for (auto [A, B] : {std::pair{2.0, 4.0}, {3.0, 4.0}, {4.0, 10.0}, {-5.0, 50.0}, {900.0, 1000.0}}) {
    CHECK(close(strip_integral(A, B), oracle::strip_riemann(A, B, 40000), 1e-6));
  }
  CHECK(close(strip_integral(3.0, 4.0), oracle::strip_cell_count(3.0, 4.0, 2000), 1e-2));
}

TEST_CASE("strip integral is additive") {
  for (auto [A, B, C] : {std::tuple{2.5, 3.0, 7.0}, {0.0, 5.0, 6.0}, {10.0, 10.001, 40.0}}) {
    CHECK(close(strip_integral(A, B) + strip_integral(B, C), strip_integral(A, C), 1e-11));
  }
}

TEST_CASE("thin strips keep their relative accuracy") {
  const double B = 2.4e6;
  const double A = B - 1e-6;
  const double w = B - A;  // the representable width, not 1e-6
  const double r = strip_integral(A, B);
  // d/dB of the full area is the level-set integral of 1/|grad|; compare slopes
  const double slope = (strip_integral(2.0, B + 1.0) - strip_integral(2.0, B - 1.0)) / 2.0;
  CHECK(close(r / w, slope, 1e-5));
}

TEST_CASE("closed-form bounds") {
  const auto b2 = shell_closed_bounds(2.0);
  CHECK(b2.lower == 0.0);
  CHECK(close(b2.upper, 1.9218120556728056987, 1e-15));
  const auto b4 = shell_closed_bounds(4.0);
  CHECK(close(b4.lower, 0.48045301391820142467, 1e-15));
  CHECK(close(b4.upper, 4.324077125263812822, 1e-15));
  CHECK(b4.lower <= strip_integral(0.0, 4.0));
  CHECK(strip_integral(0.0, 4.0) <= b4.upper);
  CHECK(shell_closed_bounds(9.0).lower > b4.lower);
  CHECK(shell_closed_bounds(9.0).upper > b4.upper);
  CHECK_THROWS_AS(shell_closed_bounds(1.9), DomainError);
}

TEST_CASE("closed-form bracket on every shell") {
  for (double lam : {1e2, 1e3, 1e5})
    for (const DyadicTerm& t : dyadic_sums(lam, kD, 1.0).terms) {
      const DyadicShell s = shell(t.j, lam, kD);
      const auto cb = shell_closed_bounds(s.B);
      CHECK(t.strip <= cb.upper);
      if (s.A <= 2.0) CHECK(cb.lower <= t.strip);
    }
}

TEST_CASE("dyadic sums sandwich the phase volume") {
  for (double lam : {10.0, 1e3, 1e6})
    for (double c : {kD, 0.5, 1.0 / kD})
      for (double b : {0.5, 1.0}) {
        if (!(lam > 4.0 * c)) continue;
        const DyadicSums s = dyadic_sums(lam, c, b);
        const double v = phase_volume_reduced(lam, PhaseSymbol{c, c, b});
        CHECK(s.lower <= v);
        CHECK(v <= s.upper);
        CHECK(s.upper == 2.0 * s.lower);
        CHECK(s.j_max == *shell_index_max(lam, c));
      }
}

TEST_CASE("top shells carry the sum for large lambda") {
  for (double lam : {1e3, 1e6}) {
    const DyadicSums s = dyadic_sums(lam, kD, 1.0);
    const double total = s.upper * std::numbers::pi * std::numbers::pi;
    CHECK(s.terms.front().j == s.j_max);
    double top_two = s.terms[0].weighted + s.terms[1].weighted;
    MESSAGE("lambda " << lam << ": top term share " << s.terms[0].weighted / total
                      << ", top two " << top_two / total);
    CHECK(top_two > 0.5 * total);
  }
}

TEST_CASE("consecutive shells tile their union") {
  const double lam = 1e3;
  const DyadicSums s = dyadic_sums(lam, kD, 1.0);
  double sum = 0.0;
  int lo = s.j_max - 6, hi = s.j_max - 1;
  for (int j = lo; j <= hi; ++j) sum += strip_integral(shell(j, lam, kD).A, shell(j, lam, kD).B);
  CHECK(close(sum, strip_integral(shell(hi, lam, kD).A, shell(lo, lam, kD).B), 1e-10));
}

TEST_CASE("log-square antiderivative") {
  CHECK(log_square_antiderivative(1.0) == 2.0);
  CHECK(close(log_square_antiderivative(std::exp(1.0)) - 2.0, 0.71828182845904523536, 1e-14));
  for (double t : {0.5, 2.0, 10.0}) {
    const double h = 1e-5 * t;
    const double fd = (log_square_antiderivative(t + h) - log_square_antiderivative(t - h)) / (2 * h);
    CHECK(close(fd, std::log(t) * std::log(t), 1e-6));
  }
  CHECK_THROWS_AS(log_square_antiderivative(0.0), DomainError);
}

TEST_CASE("proof-chain expressions") {
  CHECK(close(proof_chain_upper(1e4, 1.0, kD), 649.4091573681783418, 1e-12));
  CHECK(close(proof_chain_lower(1e4, 1.0, 1.0 / kD), 56.58356094119435483, 1e-12));
  CHECK(proof_chain_lower(1e4, 1.0, 1.0 / kD) <= proof_chain_upper(1e4, 1.0, kD));
  CHECK_THROWS_AS(proof_chain_upper(4.0 * kD + 0.5, 1.0, kD), DomainError);
  CHECK_THROWS_AS(proof_chain_lower(10.0, 1.0, 1.0 / kD), DomainError);
  CHECK(close(proof_chain_upper(1e4, 2.0, kD), proof_chain_upper(1e4, 1.0, kD) / 4.0, 1e-14));

  for (double lam : {10.0, 1e3, 1e6}) {
    const double m = std::log(lam - 4.0 * kD) / std::log(2.0);
    CHECK(std::abs(m + 1.0 - *shell_index_max(lam, kD)) < 1.0);
    const double v = proof_chain_upper(lam, 1.0, kD);
    CHECK(std::abs(proof_chain_upper(lam * (1 + 1e-9), 1.0, kD) - v) < 1e-6 * std::abs(v));
  }
}
