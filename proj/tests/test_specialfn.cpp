#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dlarg/specialfn.hpp"

using namespace dlarg;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = 0.57721566490153286061;

// zeta(s, a) by direct summation with an Euler-Maclaurin tail of three terms.
cplx hurwitz_direct(cplx s, double a) {
  const int N = 200000;
  cplx sum = 0.0;
  for (int n = N - 1; n >= 0; --n) sum += std::pow(n + a, -s);
  const double x = N + a;
  return sum + std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s) +
         s * std::pow(x, -s - 1.0) / 12.0;
}
}  // namespace

TEST_CASE("golden values") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - pi * pi / 2.0) < 1e-12);
  CHECK(std::abs(digamma(1.0) + euler_gamma) < 1e-12);
  CHECK(std::abs(log_gamma(cplx(0.5)) - 0.5 * std::log(pi)) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(4.0, 1.0) - std::pow(pi, 4) / 90.0) < 1e-12);
}

TEST_CASE("Bernoulli numbers") {
  const auto& b = bernoulli_even();
  CHECK(b[0] == 1.0L);
  CHECK(static_cast<double>(b[1]) == doctest::Approx(1.0 / 6.0));
  CHECK(static_cast<double>(b[2]) == doctest::Approx(-1.0 / 30.0));
  CHECK(static_cast<double>(b[6]) == doctest::Approx(691.0 / 2730.0 * -1.0));
}

TEST_CASE("Hurwitz zeta against direct summation") {
  for (cplx s : {cplx(3.0, 0.0), cplx(2.5, 7.0), cplx(1.5, -20.0)})
    for (double a : {0.1, 0.37, 1.0}) {
      const cplx ref = hurwitz_direct(s, a);
      CHECK(std::abs(hurwitz_zeta(s, a) - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("Hurwitz recurrence on the critical line") {
  for (double t : {0.0, 5.0, 30.0, 200.0}) {
    const cplx s(0.5, t);
    for (double a : {0.2, 0.75}) {
      const cplx lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0);
      CHECK(std::abs(lhs - std::pow(a, -s)) < 1e-10);
    }
  }
}

TEST_CASE("Hurwitz tail bound is honoured") {
  const HurwitzResult r = hurwitz_zeta_ex(cplx(0.5, 100.0), 0.3);
  CHECK(r.tail_bound < 1e-12);
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
}

TEST_CASE("log Gamma recurrence and reflection") {
  for (cplx z : {cplx(0.3, 0.2), cplx(2.5, -7.0), cplx(0.25, 40.0), cplx(-3.5, 1.0)}) {
    const cplx d = log_gamma(z + 1.0) - log_gamma(z) - std::log(z);
    // equal modulo 2 pi i
    CHECK(std::abs(d.real()) < 1e-12);
    CHECK(std::abs(std::remainder(d.imag(), 2 * pi)) < 1e-11);
    const cplx refl = log_gamma(z) + log_gamma(1.0 - z) - std::log(pi / std::sin(pi * z));
    CHECK(std::abs(refl.real()) < 1e-10);
  }
  CHECK_THROWS_AS(log_gamma(cplx(-2.0)), PoleError);
}

TEST_CASE("digamma and trigamma") {
  CHECK(digamma(0.5) == doctest::Approx(-euler_gamma - 2 * std::log(2.0)).epsilon(1e-14));
  CHECK(trigamma(1.0) == doctest::Approx(pi * pi / 6).epsilon(1e-14));
  CHECK(trigamma(0.5) == doctest::Approx(pi * pi / 2).epsilon(1e-14));
  // psi(1/2 + it) real part is the derivative of log|Gamma|: compare with a central difference
  for (double t : {0.0, 3.0, 25.0}) {
    const double h = 1e-5;
    const double fd = (log_gamma(cplx(0.5 + h, t)).real() - log_gamma(cplx(0.5 - h, t)).real()) / (2 * h);
    CHECK(digamma(cplx(0.5, t)).real() == doctest::Approx(fd).epsilon(1e-8));
  }
  CHECK_THROWS_AS(digamma(0.0), PoleError);
}

TEST_CASE("integral of Re psi over a window") {
  for (int a : {0, 1})
    for (auto [t1, t2] : {std::pair{-1.0, 1.0}, std::pair{0.0, 15.0}, std::pair{-3.0, 40.0}}) {
      const double c = 0.25 + 0.5 * a;
      const double ref = 2.0 * (log_gamma(cplx(c, t2 / 2)).imag() - log_gamma(cplx(c, t1 / 2)).imag());
      CHECK(gamma_integral(a, t1, t2) == doctest::Approx(ref).epsilon(1e-11));
    }
}
