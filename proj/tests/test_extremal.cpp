#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dlarg/error.hpp"
#include "dlarg/extremal.hpp"

using namespace dlarg;

namespace {
constexpr double pi = std::numbers::pi;

// \int R(x) cos(2 pi u (x - T0)) dx by per-period Gauss-Kronrod; R is even about T0.
double transform_by_quadrature(const ExtremalParams& p, double u, double X) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double sum = 0.0;
  const double step = 0.5 / p.delta;
  for (double a = 0.0; a < X; a += step) {
    double b = std::min(X, a + step);
    auto f = [&](double y) { return selberg_r(p, p.center_T0 + y) * std::cos(2 * pi * u * y); };
    if (a < p.half_length && p.half_length < b) {
      sum += GK::integrate(f, a, p.half_length, 0, 0) + GK::integrate(f, p.half_length, b, 0, 0);
    } else {
      sum += GK::integrate(f, a, b, 0, 0);
    }
  }
  return 2.0 * sum;
}
}  // namespace

TEST_CASE("B is a majorant and minorant of sgn") {
  for (double x = -20.0; x <= 20.0; x += 0.0137) {
    const double sgn = x > 0 ? 1.0 : x < 0 ? -1.0 : 0.0;
    CHECK(beurling_b(Sign::plus, x) >= sgn - 1e-12);
    CHECK(beurling_b(Sign::minus, x) <= sgn + 1e-12);
  }
  // B^+ - B^- = 2 sinc^2
  for (double x : {-3.3, 0.2, 7.9})
    CHECK(beurling_b(Sign::plus, x) - beurling_b(Sign::minus, x) ==
          doctest::Approx(2 * std::pow(sinc(x), 2)).epsilon(1e-13));
  // interpolation at the integers
  for (int n = 1; n < 6; ++n) {
    CHECK(beurling_b(Sign::plus, double(n)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beurling_b(Sign::minus, double(-n)) == doctest::Approx(-1.0).epsilon(1e-13));
  }
}

TEST_CASE("sinc near zero") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1e-6) == doctest::Approx(1.0 - (pi * 1e-6) * (pi * 1e-6) / 6).epsilon(1e-15));
  CHECK(std::abs(sinc(cplx(0.0, 1e-5)) - 1.0) < 1e-9);
}

TEST_CASE("R sandwiches the indicator") {
  for (double d : {0.3, 1.0, 1.6})
    for (double h : {0.1, 1.0}) {
      const ExtremalParams pp{d, 5.0, h, Sign::plus}, pm{d, 5.0, h, Sign::minus};
      for (double x = -10.0; x <= 20.0; x += 0.01) {
        const double ind = interval_indicator(pp, x);
        CHECK(selberg_r(pp, x) >= ind - 1e-12);
        CHECK(selberg_r(pm, x) <= ind + 1e-12);
      }
    }
}

TEST_CASE("transform at zero and beyond the support") {
  for (double d : {0.4, 1.0, 1.5})
    for (double h : {0.2, 1.3})
      for (Sign s : {Sign::plus, Sign::minus}) {
        const ExtremalParams p{d, 0.0, h, s};
        CHECK(fourier_r(p, 0.0).value.real() == doctest::Approx(2 * h + sign_value(s) / d).epsilon(1e-9));
        CHECK(std::abs(fourier_r(p, 1.25 * d).value) < 1e-9);
        CHECK(std::abs(fourier_r(p, d).value) < 1e-7);
      }
}

TEST_CASE("transform against direct quadrature") {
  for (Sign s : {Sign::plus, Sign::minus}) {
    const ExtremalParams p{1.0, 0.0, 0.5, s};
    for (double u : {0.1, 0.45, 0.8}) {
      // tail beyond X = 400 contributes O(1/X^2) after oscillation
      const double ref = transform_by_quadrature(p, u, 400.0);
      CHECK(fourier_r(p, u).value.real() == doctest::Approx(ref).epsilon(1e-5));
    }
  }
}

TEST_CASE("shifted transform picks up the phase") {
  const ExtremalParams a{1.0, 0.0, 0.7, Sign::plus}, b{1.0, 3.0, 0.7, Sign::plus};
  for (double u : {0.2, 0.6}) {
    const cplx expected = fourier_r(a, u).value * std::exp(cplx(0, -2 * pi * 3.0 * u));
    CHECK(std::abs(fourier_r(b, u).value - expected) < 1e-10);
  }
}

TEST_CASE("square integral against quadrature of the transform") {
  using GL = boost::math::quadrature::gauss<double, 20>;
  for (Sign s : {Sign::plus, Sign::minus}) {
    const ExtremalParams p{1.0, 0.0, 0.5, s};
    auto f = [&](double u) {
      const double v = transform_by_quadrature(p, u, 400.0);
      return u * v * v;
    };
    CHECK(transform_square_integral(p, 0.0, 1.0) == doctest::Approx(GL::integrate(f, 0.0, 1.0)).epsilon(1e-5));
  }
}

TEST_CASE("constants") {
  const ExtremalConstants k = extremal_constants(ExtremalParams{1.0, 5.0, 0.7, Sign::plus});
  CHECK(k.growth > 0.0);
  CHECK(k.decay > 0.0);
  CHECK(derivative_decay_constant(2.0) > 0.0);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(ExtremalParams{0.0, 0.0, 1.0, Sign::plus}), DomainError);
  CHECK_THROWS_AS(validate(ExtremalParams{1.0, 0.0, -1.0, Sign::plus}), DomainError);
  CHECK_THROWS_AS(validate_prime_range(ExtremalParams{2.0, 0.0, 1.0, Sign::plus}), DomainError);
  CHECK_THROWS_AS(transform_square_integral(ExtremalParams{1.0, 0.0, 1.0, Sign::plus}, 0.0, 2.0),
                  DomainError);
}
