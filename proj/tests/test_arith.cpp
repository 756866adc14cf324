#include <doctest.h>

#include <cmath>

#include "dlarg/arith.hpp"
#include "dlarg/error.hpp"

using namespace dlarg;

namespace {
bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

TEST_CASE("sieve agrees with trial division") {
  const PrimeTable t = sieve_primes(5000);
  std::size_t k = 0;
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    CHECK(is_prime(n) == trial_division(n));
    if (trial_division(n)) {
      REQUIRE(k < t.primes.size());
      CHECK(t.primes[k++] == n);
    }
  }
  CHECK(k == t.primes.size());
  CHECK(t.primes.size() == 669);
}

TEST_CASE("sieve limits") {
  CHECK_THROWS_AS(sieve_primes(1), DomainError);
  CHECK_THROWS_AS(sieve_primes(kSieveCap + 1), DomainError);
}

TEST_CASE("von Mangoldt") {
  CHECK(von_mangoldt(1) == 0.0);
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(von_mangoldt(81) == doctest::Approx(std::log(3.0)));
  CHECK(von_mangoldt(97) == doctest::Approx(std::log(97.0)));
  CHECK_THROWS_AS(von_mangoldt(0), DomainError);
}

TEST_CASE("prime powers up to 100") {
  const auto pp = prime_powers(100);
  // 25 primes plus 4 8 16 32 64 9 27 81 25 49
  CHECK(pp.size() == 35);
  for (std::size_t i = 1; i < pp.size(); ++i) CHECK(pp[i - 1].n < pp[i].n);
  for (const auto& x : pp) CHECK(std::log(static_cast<double>(x.p)) == doctest::Approx(x.log_p));
  CHECK(prime_powers(1).empty());
}

TEST_CASE("primitive roots generate the unit group") {
  for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u, 31u, 101u, 997u}) {
    const std::uint64_t g = least_primitive_root(q);
    std::uint64_t x = 1, order = 0;
    do {
      x = x * g % q;
      ++order;
    } while (x != 1);
    CHECK(order == q - 1);
  }
  CHECK(least_primitive_root(7) == 3);
  CHECK(least_primitive_root(41) == 6);
}

TEST_CASE("modular inverse") {
  for (std::uint64_t a = 1; a < 101; ++a) CHECK(a * inverse_mod(a, 101) % 101 == 1);
  CHECK(pow_mod(2, 10, 1000) == 24);
}

TEST_CASE("primes in a residue class") {
  // primes below 100 that are 1 mod 4: 5 13 17 29 37 41 53 61 73 89 97
  CHECK(prime_count_residue(100, 4, 1) == 11);
}
