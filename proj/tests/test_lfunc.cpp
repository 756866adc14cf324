#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dlarg/error.hpp"
#include "dlarg/lfunc.hpp"
#include "dlarg/specialfn.hpp"

using namespace dlarg;

namespace {
constexpr double pi = std::numbers::pi;

// Dirichlet series, absolutely convergent for Re s = 3.
cplx l_direct(cplx s, const DirichletCharacter& chi) {
  cplx sum = 0.0;
  for (int n = 200000; n >= 1; --n) sum += chi(n) * std::pow(static_cast<double>(n), -s);
  return sum;
}
}  // namespace

TEST_CASE("L(1, chi mod 3) = pi / (3 sqrt 3)") {
  const auto chars = enumerate_characters(3);
  CHECK(std::abs(l_value(1.0, chars[1]) - pi / (3 * std::sqrt(3.0))) < 1e-10);
}

TEST_CASE("L(1, chi) for the quadratic character mod 5 is 2 log(phi) / sqrt 5") {
  const auto chars = enumerate_characters(5);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(l_value(1.0, chars[2]) - 2 * std::log(phi) / std::sqrt(5.0)) < 1e-10);
}

TEST_CASE("L agrees with the Dirichlet series") {
  for (std::uint32_t q : {5u, 11u}) {
    const auto chars = enumerate_characters(q);
    for (std::size_t j = 1; j < chars.size(); ++j)
      for (cplx s : {cplx(3.0, 0.0), cplx(3.0, 12.5)})
        CHECK(std::abs(l_value(s, chars[j]) - l_direct(s, chars[j])) < 1e-10);
  }
}

TEST_CASE("functional equation") {
  // Lambda(s, chi) = eps Lambda(1 - s, conj chi)
  for (std::uint32_t q : {5u, 13u}) {
    const auto chars = enumerate_characters(q);
    for (std::size_t j = 1; j < chars.size(); ++j) {
      const cplx eps = root_number(chars[j]).epsilon;
      for (cplx s : {cplx(0.3, 4.0), cplx(0.8, -11.0), cplx(2.0, 1.0)}) {
        const cplx lhs = completed_lambda(s, chars[j]);
        const cplx rhs = eps * completed_lambda(1.0 - s, chars[j].conj());
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("Hardy Z is real") {
  const auto chars = enumerate_characters(7);
  for (std::size_t j = 1; j < chars.size(); ++j)
    for (double t : {0.5, 3.0, 17.0}) {
      const HardyZValue z = hardy_z_ex(t, chars[j]);
      CHECK(std::abs(z.rotated_imag) < 1e-10);
    }
}

TEST_CASE("first zero of the character mod 3") {
  const auto chars = enumerate_characters(3);
  const auto zs = find_zeros(chars[1], 0.0, 10.0);
  REQUIRE(zs.size() == 1);
  CHECK(zs[0].gamma == doctest::Approx(8.039737155681).epsilon(1e-10));
  const ZeroCount n = count_zeros(10.0, chars[1]);
  CHECK(n.from_zeros == 2.0);
  CHECK(n.from_formula == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("zeros come in conjugate pairs across the family") {
  const LFamily fam(11);
  const FamilyZeros fz = find_zeros_family(fam, -12.0, 12.0);
  for (std::uint32_t j = 1; j < 10; ++j) {
    const auto& a = fz.zeros[j];
    const auto& b = fz.zeros[10 - j];  // conj chi_j = chi_{q-1-j}
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
      CHECK(a[k].gamma == doctest::Approx(-b[a.size() - 1 - k].gamma).epsilon(1e-8));
  }
}

TEST_CASE("zero counting identity, per character") {
  for (std::uint32_t q : {5u, 7u}) {
    const auto chars = enumerate_characters(q);
    for (std::size_t j = 1; j < chars.size(); ++j)
      for (double T : {0.7, 6.0, 14.0}) {
        const ZeroCount n = count_zeros(T, chars[j]);
        CHECK(std::abs(n.from_zeros - n.from_formula) < 1e-6);
      }
  }
}

TEST_CASE("S is odd under conjugation") {
  const auto chars = enumerate_characters(13);
  for (std::size_t j = 1; j < chars.size(); ++j) {
    const double a = s_arg(4.2, chars[j]).s_value;
    const double b = s_arg(-4.2, chars[j].conj()).s_value;
    CHECK(a == doctest::Approx(-b).epsilon(1e-9));
  }
}

TEST_CASE("zeros off the critical line in small rectangles") {
  const auto chars = enumerate_characters(5);
  for (std::size_t j = 1; j < chars.size(); ++j) {
    CHECK(rectangle_zero_count(chars[j], 0.55, 2.0, 20.0) == 0);
    // only the trivial zero at s = 0 of an even character
    CHECK(rectangle_zero_count(chars[j], -0.5, 0.45, 20.0) == (chars[j].is_even() ? 1 : 0));
    // a box around the critical line sees the nontrivial zeros
    const auto zs = find_zeros(chars[j], -20.0, 20.0);
    CHECK(rectangle_zero_count(chars[j], 0.4, 0.6, 20.0) == static_cast<int>(zs.size()));
  }
}

TEST_CASE("domain checks") {
  const auto chars = enumerate_characters(5);
  CHECK_THROWS_AS(l_value(cplx(20.0, 0.0), chars[1]), DomainError);
  CHECK_THROWS_AS(LFamily(15), DomainError);
}
