#include "dlarg/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <string>

#include "dlarg/error.hpp"

namespace dlarg {

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve_primes: limit < 2 gives an empty table");
  if (limit > kSieveCap)
    throw DomainError("sieve_primes: limit " + std::to_string(limit) + " exceeds cap " +
                      std::to_string(kSieveCap));
  std::vector<bool> composite(limit + 1, false);
  PrimeTable table;
  table.limit = limit;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    table.primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return table;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

double von_mangoldt(std::uint64_t n) {
  if (n == 0) throw DomainError("von_mangoldt: n must be positive");
  if (n == 1) return 0.0;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::log(static_cast<double>(n));
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(a % q);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw DomainError("inverse_mod: argument not invertible");
  if (t < 0) t += static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t least_primitive_root(std::uint64_t q) {
  if (q < 3 || !is_prime(q))
    throw DomainError("least_primitive_root: " + std::to_string(q) + " is not an odd prime");
  std::vector<std::uint64_t> factors;
  std::uint64_t m = q - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < q; ++g) {
    const bool generates = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) {
      return pow_mod(g, (q - 1) / f, q) != 1;
    });
    if (generates) return g;
  }
  throw DomainError("least_primitive_root: no generator found");  // unreachable for primes
}

std::uint64_t prime_count_residue(double x, std::uint64_t q, std::int64_t a) {
  if (q == 0) throw DomainError("prime_count_residue: q must be positive");
  const auto qi = static_cast<std::int64_t>(q);
  const std::int64_t r = ((a % qi) + qi) % qi;
  if (std::gcd(r, qi) != 1)
    throw DomainError("prime_count_residue: gcd(a, q) != 1");
  if (!(x >= 0.0)) throw DomainError("prime_count_residue: x must be non-negative");
  if (x < 2.0) return 0;
  const auto limit = static_cast<std::uint64_t>(std::floor(x));
  const PrimeTable table = sieve_primes(limit);
  return static_cast<std::uint64_t>(std::count_if(
      table.primes.begin(), table.primes.end(),
      [&](std::uint64_t p) { return static_cast<std::int64_t>(p % q) == r; }));
}

std::vector<PrimePower> prime_powers(std::uint64_t limit) {
  std::vector<PrimePower> out;
  if (limit < 2) return out;
  const PrimeTable table = sieve_primes(limit);
  for (const std::uint64_t p : table.primes) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t n = p; n <= limit; n *= p) {
      out.push_back({n, p, lp});
      if (n > limit / p) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });
  return out;
}

}  // namespace dlarg
