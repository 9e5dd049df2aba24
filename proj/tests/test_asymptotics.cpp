#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "riesz/asymptotics.hpp"
#include "riesz/errors.hpp"

using namespace riesz;

namespace {
constexpr double kPi = std::numbers::pi;
bool close(double x, double ref, double rel) { return std::abs(x - ref) <= rel * std::abs(ref); }

double kappa_of(const std::vector<double>& ev, double l) {
  double s = 0.0;
  for (double e : ev) s += std::max(l - e, 0.0);
  return s;
}
}  // namespace

TEST_CASE("leading term") {
  CHECK(close(leading_term(std::exp(1.0), 1.0), 0.27541953233292862215, 1e-14));
  CHECK(leading_term(1.0 + 1e-12, 1.0) < 1e-20);
  CHECK_THROWS_AS(leading_term(1.0, 1.0), DomainError);
  CHECK(close(leading_term(50.0, 3.0), leading_term(50.0, 1.0) / 9.0, 1e-15));
}

TEST_CASE("Theorem 1 expression") {
  CHECK(close(theorem1_expression(2.0, 1.0), -0.033560583284231478722, 1e-13));
  CHECK(close(theorem1_expression(2.0, 1.0 / kPi), -0.33122968048517696367, 1e-13));
  CHECK_THROWS_AS(theorem1_expression(1.99, 1.0), DomainError);
  for (double lam : {2.0, 20.1, 97.0, 1e4})
    CHECK(close(theorem1_expression(lam, 10.0), theorem1_expression(lam, 1.0) / 100.0, 1e-14));
}

TEST_CASE("Theorem 1 expression grows much slower than the leading term") {
  // the bracket's lambda log^2 lambda pieces cancel
  const double r4 = theorem1_expression(1e4, 1.0) / leading_term(1e4, 1.0);
  const double r8 = theorem1_expression(1e8, 1.0) / leading_term(1e8, 1.0);
  CHECK(r8 < r4);
  CHECK(r8 < 1e-3);
}

TEST_CASE("Weyl constant") {
  CHECK(close(weyl_constant_zeta(1.0), 0.10132118364233777144, 1e-15));
  CHECK(close(weyl_constant_zeta(1.0 / kPi), 1.0, 1e-15));
  CHECK(close(weyl_constant_zeta(2.0), 1.0 / (4.0 * kPi * kPi), 1e-15));
}

TEST_CASE("c_mn is an exact rational") {
  CHECK(c_mn(1, 1) == Rational{9, 2});
  CHECK(c_mn(2, 3) == Rational{3, 1});
  for (int m = 1; m < 8; ++m)
    for (int n = 1; n < 8; ++n) {
      CHECK(c_mn(m, n) == c_mn(n, m));
      const double direct = (m + n + 1.0) * (m + n + 1.0) / (2.0 * m * n);
      CHECK(close(c_mn(m, n).value(), direct, 1e-15));
    }
  CHECK_THROWS_AS(c_mn(0, 1), DomainError);
  CHECK_THROWS_AS(c_mn(2, 0), DomainError);
}

TEST_CASE("counting sandwich on a two-level spectrum") {
  const std::vector<double> ev = {5.0, 7.0};
  auto kappa = [&](double l) { return kappa_of(ev, l); };
  const auto cs = counting_sandwich(kappa, 8.0, 1.0, 1.0);
  CHECK(cs.low == 0.5);
  CHECK(cs.mid_bound == 2.5);
  const double l16 = std::log(16.0);
  CHECK(close(cs.high, 2.0 * l16 * l16 / (kPi * kPi), 1e-15));
  CHECK(cs.low <= 2.0);
  CHECK(2.0 <= cs.mid_bound);

  const auto far = counting_sandwich(kappa, 8.0, 1e9, 1.0);
  CHECK(far.mid_bound == doctest::Approx(2.0).epsilon(1e-8));
  CHECK_THROWS_AS(counting_sandwich(kappa, 8.0, 0.0, 1.0), DomainError);
}

TEST_CASE("report bundles the pieces") {
  const std::vector<double> ev = {5.0, 7.0};
  const auto rep = asymptotics_report(8.0, 1.0, [&](double l) { return kappa_of(ev, l); });
  CHECK(rep.leading == leading_term(8.0, 1.0));
  CHECK(rep.theorem1 == theorem1_expression(8.0, 1.0));
  REQUIRE(rep.weyl_ratio.has_value());
  CHECK(*rep.weyl_ratio == doctest::Approx(4.0 / rep.leading));
  CHECK(rep.sandwich->low == 0.5);
  const auto bare = asymptotics_report(1.5, 1.0);
  CHECK(std::isnan(bare.theorem1));
  CHECK_FALSE(bare.weyl_ratio.has_value());
}
