#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "moblike/errors.hpp"

namespace moblike {

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical decomposition n = p1^e1 * ... * pk^ek with p1 < ... < pk.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;

  // omega(n), the number of distinct prime divisors
  int omega() const { return static_cast<int>(factors.size()); }

  bool squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
  }
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One Miller-Rabin round; n odd, n > 2.
inline bool mr_round(std::uint64_t n, std::uint64_t d, int r, std::uint64_t a) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
inline std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_into(std::uint64_t n, std::vector<std::uint64_t>& primes);

}  // namespace detail

// Deterministic for every 64-bit input (first twelve prime bases).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (auto a : small) {
    if (!detail::mr_round(n, d, r, a)) return false;
  }
  return true;
}

namespace detail {

inline void split_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split_into(d, primes);
  split_into(n / d, primes);
}

}  // namespace detail

// Trial division by primes below 2^10, then Pollard-Brent on the cofactor.
inline Factorization factorize(std::int64_t n) {
  if (n < 1) throw range_error("factorize: n must be positive");
  Factorization out;
  out.n = n;
  auto m = static_cast<std::uint64_t>(n);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1024 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      primes.push_back(p);
      m /= p;
    }
  }
  if (m > 1) detail::split_into(m, primes);
  std::sort(primes.begin(), primes.end());
  for (auto p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == static_cast<std::int64_t>(p)) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({static_cast<std::int64_t>(p), 1});
    }
  }
  return out;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& f : factorize(n).factors) out.push_back(f.prime);
  return out;
}

// Plain Eratosthenes; primes <= limit.
inline std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// floor(sqrt(n)) exact for all n >= 0 in int64 range.
inline std::int64_t isqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace moblike
