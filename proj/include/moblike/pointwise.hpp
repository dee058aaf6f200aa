#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "moblike/character.hpp"
#include "moblike/errors.hpp"
#include "moblike/factor.hpp"

namespace moblike {

inline int mobius(const Factorization& fac) {
  if (!fac.squarefree()) return 0;
  return (fac.omega() % 2 == 0) ? 1 : -1;
}

inline int mobius(std::int64_t n) { return mobius(factorize(n)); }

// g_chi(p) = chi(p) for p not dividing q, 1 for p | q, extended completely
// multiplicatively. Only strips the q-part of n; no factorization needed.
inline int g_chi(const RealCharacter& chi, std::int64_t n) {
  if (n < 1) throw range_error("g_chi: n must be positive");
  const auto q = chi.modulus();
  for (auto p : prime_divisors(q)) {
    while (n % p == 0) n /= p;
  }
  return chi(n % q);
}

// f = mu^2 g_chi
inline int f_value(const RealCharacter& chi, std::int64_t n) {
  const auto fac = factorize(n);
  if (!fac.squarefree()) return 0;
  return g_chi(chi, n);
}

// True when every prime divisor of d divides q.
inline bool is_q_smooth(std::int64_t d, std::int64_t q) {
  for (auto p : prime_divisors(q)) {
    while (d % p == 0) d /= p;
  }
  return d == 1;
}

// h(n) = sum over n = d m^2 with d q-smooth of mu(m). Enumerates the
// admissible (d, m) pairs from the factorization of n; this is the reference
// implementation used to check the bulk h sieve.
inline std::int64_t h_value(std::int64_t q, std::int64_t n) {
  const auto fac = factorize(n);
  std::vector<bool> divides_q;
  for (const auto& f : fac.factors) divides_q.push_back(q % f.prime == 0);

  // For each prime, the admissible exponents j of p in m: p^(e - 2j) must go
  // into d, so j = e/2 is forced when p does not divide q.
  std::int64_t total = 0;
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int sign) {
    if (i == fac.factors.size()) {
      total += sign;
      return;
    }
    const int e = fac.factors[i].exponent;
    for (int j = 0; 2 * j <= e; ++j) {
      if (!divides_q[i] && 2 * j != e) continue;
      if (j >= 2) continue;  // mu(m) = 0
      walk(i + 1, j == 1 ? -sign : sign);
    }
  };
  walk(0, 1);
  return total;
}

// Exact sum_{1 <= d <= x} chi(d) in O(q): full periods contribute nothing.
inline std::int64_t char_partial_sum(const RealCharacter& chi, std::int64_t x) {
  if (x <= 0) return 0;
  const auto q = chi.modulus();
  const auto tail = x % q;
  std::int64_t s = 0;
  const auto t = chi.table();
  for (std::int64_t a = 1; a <= tail; ++a) s += t[a];
  return s;
}

// Prefix table of chi over one period, so char_partial_sum becomes O(1).
class CharPrefix {
 public:
  explicit CharPrefix(const RealCharacter& chi) : q_(chi.modulus()), prefix_(q_ + 1, 0) {
    const auto t = chi.table();
    for (std::int64_t a = 1; a <= q_; ++a) prefix_[a] = prefix_[a - 1] + t[a % q_];
  }

  std::int64_t operator()(std::int64_t x) const {
    if (x <= 0) return 0;
    return prefix_[x % q_];
  }

 private:
  std::int64_t q_;
  std::vector<std::int64_t> prefix_;
};

// All d <= x whose prime divisors divide q, ascending.
inline std::vector<std::int64_t> q_smooth_numbers(std::int64_t q, std::int64_t x) {
  std::vector<std::int64_t> out;
  if (x < 1) return out;
  const auto ps = prime_divisors(q);
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t i, std::int64_t d) {
    if (i == ps.size()) {
      out.push_back(d);
      return;
    }
    for (std::int64_t v = d;; v *= ps[i]) {
      dfs(i + 1, v);
      if (v > x / ps[i]) break;
    }
  };
  dfs(0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t count_q_smooth(std::int64_t q, std::int64_t x) {
  if (x < 1) throw range_error("count_q_smooth: x must be >= 1");
  return static_cast<std::int64_t>(q_smooth_numbers(q, x).size());
}

// Smallest x0 such that count_q_smooth(q, x) <= (log x)^omega(q) for every
// integer x in [x0, xmax]. The count is a step function jumping at smooth
// numbers, so only the stretch after each smooth number needs checking.
inline std::int64_t smooth_bound_threshold(std::int64_t q, std::int64_t xmax) {
  const int k = static_cast<int>(prime_divisors(q).size());
  const auto smooth = q_smooth_numbers(q, xmax);
  std::int64_t x0 = 1;
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    const auto count = static_cast<double>(i + 1);
    const std::int64_t next = (i + 1 < smooth.size()) ? smooth[i + 1] : xmax + 1;
    // inequality holds from ceil(exp(count^(1/k))) on
    auto holds_from = static_cast<std::int64_t>(std::ceil(std::exp(std::pow(count, 1.0 / k))));
    while (holds_from > 1 && std::pow(std::log(static_cast<double>(holds_from - 1)), k) >= count) {
      --holds_from;
    }
    while (std::pow(std::log(static_cast<double>(holds_from)), k) < count) ++holds_from;
    if (holds_from > smooth[i]) x0 = std::max(x0, std::min(holds_from, next));
  }
  return x0;
}

}  // namespace moblike
