#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dlarg/bounds.hpp"
#include "dlarg/error.hpp"

using namespace dlarg;

namespace {
constexpr double pi = std::numbers::pi;

void check_recombination(const BoundReport& r) {
  CHECK(std::abs(r.value - r.recombined()) <= 1e-12);
  for (const auto& c : r.components) CHECK((c.label == "exact" || c.label == "fitted"));
}
}  // namespace

TEST_CASE("thm1: mean bound") {
  const BoundReport r = thm1_bound(1000003, 1.0);
  check_recombination(r);
  const double lead = 0.5 + std::log(2.0) / (2 * std::log(1000003 * std::log(4.0)));
  CHECK(r.components[0].value + r.components[1].value == doctest::Approx(lead));
  CHECK_THROWS_AS(thm1_bound(101, 0.0), DomainError);
  // the fitted envelope covers the unit-constant intermediate bound on its grid
  for (double T : {0.01, 1.0, 100.0}) {
    const BoundReport b = thm1_bound(997, T);
    CHECK(b.value >= b.diagnostic("intermediate") - 1e-12);
  }
}

TEST_CASE("thm2: mean-square bound") {
  const BoundReport r = thm2_bound(101, 0.3, std::log(101.0) / (2 * pi), 0.1, 0.05);
  check_recombination(r);
  CHECK(r.components[0].value == doctest::Approx(2 * std::pow(std::log(101 * 1.3) / std::log(101.0), 2)));
  CHECK(r.components[1].value == doctest::Approx(2 * 1 * 0.15));
  const BoundReport s = thm2_simplified(997, 0.01);
  check_recombination(s);
  CHECK(s.components[0].value == doctest::Approx(2 / (pi * pi) * std::log(0.01 * std::log(997.0) + 1)));
}

TEST_CASE("cor2: proportion lower bound") {
  CHECK(cor2_lower_bound(0.5).value > 0.10);
  CHECK(cor2_lower_bound(0.25 + 1e-9).value < 1e-6);
  CHECK_THROWS_AS(cor2_lower_bound(0.25), DomainError);
  for (double b : {0.3, 0.5, 0.8, 2.0}) {
    const BoundReport c = cor2_lower_bound(b);
    check_recombination(c);
    CHECK(shifted_cor_bound(b).value >= c.value);
    const LambdaRatio m = min_lambda_ratio(b, 2.0 + 2.0 * c.diagnostic("integral"));
    CHECK(m.at_minus_half == doctest::Approx(c.value).epsilon(1e-14));
  }
  // large beta: 1 - value shrinks like log(beta)/beta^2
  const double big = 1.0 - cor2_lower_bound(20.0).value;
  CHECK(big < 3.0 * std::log(20.0) / 400.0);
  double prev = 0.0;
  for (double b = 0.26; b <= 3.0; b += 0.1) {
    const double v = cor2_lower_bound(b).value;
    CHECK(v >= prev - 1e-9);
    prev = v;
  }
}

TEST_CASE("lambda minimisation") {
  const LambdaRatio r = min_lambda_ratio(0.5, 2.0);
  CHECK(r.value == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(r.argmin == -0.5);
  for (int i = 0; i < 20; ++i)
    for (int k = 0; k < 20; ++k) {
      const double beta = 0.26 + 0.24 * i / 19.0, m = 0.5 + 4.5 * k / 19.0;
      const LambdaRatio x = min_lambda_ratio(beta, m);
      CHECK(std::abs(x.argmin + 0.5) < 1e-9);
      CHECK(x.value == doctest::Approx(x.at_minus_half).epsilon(1e-12));
      CHECK(x.endpoint_is_min);
    }
  // mean square below beta: the stationary point is interior
  const LambdaRatio y = min_lambda_ratio(3.0, 1.0);
  CHECK(!y.endpoint_is_min);
  CHECK(y.exact_min == doctest::Approx(1.0 - 1.0 / 36.0));
  CHECK(y.value == doctest::Approx(y.exact_min).epsilon(1e-12));
  CHECK(y.argmin == doctest::Approx(-1.0 / 6.0).epsilon(1e-6));
}

TEST_CASE("hr and zhao comparison bounds") {
  CHECK(crossing_finder("hr", "zero", 0.51, 0.9) == doctest::Approx(0.633).epsilon(0.001 / 0.633));
  CHECK(hr_bound(1e4) == doctest::Approx(0.891).epsilon(0.001 / 0.891));
  CHECK_THROWS_AS(hr_bound(0.5), PoleError);
  CHECK(hr_bound(0.5 + 1e-6) < -1e6);
  const ZhaoConstants& z = zhao_constants();
  CHECK(std::abs(z.switch_beta - 0.909) < 0.001);
  CHECK(std::abs(z.c - 0.193) < 0.001);
  CHECK(std::abs(1.0 - zhao_bound(1e3)) < 1e-3);
  CHECK(std::abs(1.0 / (1.0 + hr_complement(z.switch_beta)) - 1.0 / (1.0 + z.c / (z.switch_beta * z.switch_beta))) < 1e-2);
  for (double b = 0.55; b < z.switch_beta; b += 0.05)
    CHECK(zhao_bound(b) == doctest::Approx(1.0 / (1.0 + (1.0 - hr_bound(b)))));
  CHECK_THROWS_AS(zhao_bound(0.5), DomainError);
}

TEST_CASE("crossings") {
  const double x = crossing_finder("zhao", "cor2", 0.51, 0.9);
  CHECK(x > 0.53);
  CHECK(x < 0.58);
  CHECK(std::abs(evaluate_bound("zhao", x) - evaluate_bound("cor2", x)) < 1e-5);
  CHECK_THROWS_AS(crossing_finder("cor2", "cor2", 0.51, 0.9), NotFoundError);
  CHECK_THROWS_AS(evaluate_bound("nope", 1.0), DomainError);
}

TEST_CASE("rough estimate") {
  CHECK(rough_integral_estimate(1e-6).quadrature < 1e-9);
  // \int_0^1 sin^2(2 pi u)/u du = (gamma + log(4 pi) - Ci(4 pi))/2
  const double ci4pi = -0.0061166391319196;  // Ci(4 pi)
  const double expect = 2 / (pi * pi) * 0.5 * (0.57721566490153286 + std::log(4 * pi) - ci4pi);
  CHECK(rough_integral_estimate(1.0).quadrature == doctest::Approx(expect).epsilon(1e-11));
  double lo = 1e9, hi = -1e9;
  for (double b = 1.0; b <= 100.0; b += 1.0) {
    const double d = rough_integral_estimate(b).offset;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  CHECK(hi - lo < 1.0);
}
