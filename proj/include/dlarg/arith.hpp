#pragma once

#include <cstdint>
#include <vector>

namespace dlarg {

// Sieve limits are capped so prime sums stay desk-sized.
inline constexpr std::uint64_t kSieveCap = 100'000'000;

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;  // ascending, every prime <= limit
};

// Plain sieve of Eratosthenes. Throws DomainError for limit < 2 or above kSieveCap.
PrimeTable sieve_primes(std::uint64_t limit);

bool is_prime(std::uint64_t n);

// Lambda(n): log p if n = p^m, else 0. Throws DomainError for n = 0.
double von_mangoldt(std::uint64_t n);

// Smallest generator of (Z/qZ)^x for an odd prime q.
std::uint64_t least_primitive_root(std::uint64_t q);

// #{p <= x : p = a mod q}. Requires gcd(a, q) = 1.
std::uint64_t prime_count_residue(double x, std::uint64_t q, std::int64_t a);

// A prime power n = p^m with its von Mangoldt weight log p.
struct PrimePower {
  std::uint64_t n;
  std::uint64_t p;
  double log_p;
};

// All prime powers n <= limit in increasing order of n.
std::vector<PrimePower> prime_powers(std::uint64_t limit);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q);

}  // namespace dlarg
