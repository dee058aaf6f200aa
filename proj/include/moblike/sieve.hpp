#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "moblike/character.hpp"
#include "moblike/errors.hpp"
#include "moblike/factor.hpp"
#include "moblike/pointwise.hpp"

namespace moblike {

// Largest argument the bulk engine accepts.
inline constexpr std::int64_t kMaxRange = 1'000'000'000'000;

enum class Kind { mobius, f, h, abs_h, chi };

inline std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::mobius: return "mobius";
    case Kind::f: return "f";
    case Kind::h: return "h";
    case Kind::abs_h: return "abs_h";
    case Kind::chi: return "char_sum";
  }
  return "?";
}

inline Kind kind_from_string(std::string_view s) {
  if (s == "mobius") return Kind::mobius;
  if (s == "f") return Kind::f;
  if (s == "h") return Kind::h;
  if (s == "abs_h") return Kind::abs_h;
  if (s == "char_sum" || s == "chi") return Kind::chi;
  throw config_error("unknown function kind '" + std::string(s) + "'");
}

// Which arithmetic function a table or series holds.
struct FunctionSpec {
  Kind kind = Kind::mobius;
  std::int64_t q = 0;                 // modulus, for f / h / abs_h / chi
  std::optional<RealCharacter> chi;   // for f / chi
  int char_id = -1;

  static FunctionSpec mobius() { return {}; }
  static FunctionSpec f(RealCharacter c, int id = -1) {
    const auto q = c.modulus();
    return {Kind::f, q, std::move(c), id};
  }
  static FunctionSpec h(std::int64_t q) { return {Kind::h, q, std::nullopt, -1}; }
  static FunctionSpec abs_h(std::int64_t q) { return {Kind::abs_h, q, std::nullopt, -1}; }
  static FunctionSpec character(RealCharacter c, int id = -1) {
    const auto q = c.modulus();
    return {Kind::chi, q, std::move(c), id};
  }
};

// Dense values of one function on [a, b); values[i] is the value at a + i.
struct FunctionTable {
  Kind kind = Kind::mobius;
  std::int64_t q = 0;
  int char_id = -1;
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::vector<std::int32_t> values;

  std::int64_t size() const { return b - a; }
  std::int32_t at(std::int64_t n) const { return values[static_cast<std::size_t>(n - a)]; }
};

struct SieveOptions {
  std::int64_t segment_size = std::int64_t{1} << 20;
  std::int64_t max_segment = std::int64_t{1} << 26;
  unsigned threads = 1;
};

// Precomputed state for sieving one function on any [a, b) with b <= limit + 1:
// base primes up to sqrt(limit), mu up to sqrt(limit) and the q-smooth
// numbers up to limit. fill() is const and may run concurrently.
class SegmentSieve {
 public:
  SegmentSieve(FunctionSpec spec, std::int64_t limit) : spec_(std::move(spec)), limit_(limit) {
    if (limit < 1 || limit > kMaxRange) {
      throw range_error("sieve limit " + std::to_string(limit) + " outside [1, 1e12]");
    }
    if ((spec_.kind == Kind::f || spec_.kind == Kind::chi) && !spec_.chi) {
      throw range_error("sieve: kind requires a character");
    }
    const auto root = isqrt(limit);
    if (spec_.kind == Kind::mobius || spec_.kind == Kind::f) {
      primes_ = primes_up_to(root);
      if (spec_.kind == Kind::f) {
        gp_.reserve(primes_.size());
        for (auto p : primes_) gp_.push_back(prime_g(p));
      }
    }
    if (spec_.kind == Kind::h || spec_.kind == Kind::abs_h) {
      if (spec_.q < 1) throw range_error("sieve: h requires a modulus");
      small_mu_ = mobius_table(root);
      smooth_ = q_smooth_numbers(spec_.q, limit);
    }
  }

  const FunctionSpec& spec() const { return spec_; }
  std::int64_t limit() const { return limit_; }

  FunctionTable table(std::int64_t a, std::int64_t b) const {
    FunctionTable t;
    t.kind = spec_.kind;
    t.q = spec_.q;
    t.char_id = spec_.char_id;
    t.a = a;
    t.b = b;
    fill(a, b, t.values);
    return t;
  }

  void fill(std::int64_t a, std::int64_t b, std::vector<std::int32_t>& out) const {
    if (!(a >= 1 && b > a && b - 1 <= limit_)) {
      throw range_error("sieve interval [" + std::to_string(a) + ", " + std::to_string(b) +
                        ") outside sieve limit " + std::to_string(limit_));
    }
    out.assign(static_cast<std::size_t>(b - a), 0);
    switch (spec_.kind) {
      case Kind::mobius:
      case Kind::f:
        fill_multiplicative(a, b, out);
        break;
      case Kind::h:
      case Kind::abs_h:
        fill_h(a, b, out);
        break;
      case Kind::chi: {
        const auto& chi = *spec_.chi;
        for (std::int64_t n = a; n < b; ++n) out[n - a] = chi(n);
        break;
      }
    }
  }

  // mu(n) for 0 <= n <= m via a linear sieve; mu(0) is stored as 0.
  static std::vector<std::int8_t> mobius_table(std::int64_t m) {
    std::vector<std::int8_t> mu(static_cast<std::size_t>(m) + 1, 0);
    if (m >= 1) mu[1] = 1;
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(m) + 1, false);
    for (std::int64_t i = 2; i <= m; ++i) {
      if (!composite[i]) {
        primes.push_back(i);
        mu[i] = -1;
      }
      for (auto p : primes) {
        if (i * p > m) break;
        composite[i * p] = true;
        if (i % p == 0) {
          mu[i * p] = 0;
          break;
        }
        mu[i * p] = static_cast<std::int8_t>(-mu[i]);
      }
    }
    return mu;
  }

 private:
  int prime_g(std::int64_t p) const {
    const int c = (*spec_.chi)(p);
    return c == 0 ? 1 : c;
  }

  // Least-prime-factor style segmented sieve. For each n tracks the sign of mu,
  // the product of its small prime factors and (for f) the product of g over
  // them; at most one prime factor exceeds sqrt(b - 1) and is recovered as the
  // cofactor.
  void fill_multiplicative(std::int64_t a, std::int64_t b, std::vector<std::int32_t>& out) const {
    const std::size_t len = static_cast<std::size_t>(b - a);
    const bool want_g = spec_.kind == Kind::f;
    std::vector<std::int64_t> prod(len, 1);
    std::vector<std::int8_t> mu(len, 1);
    std::vector<std::int8_t> g;
    if (want_g) g.assign(len, 1);
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      const auto p = primes_[i];
      if (p > (b - 1) / p) break;
      const std::int8_t gp = want_g ? static_cast<std::int8_t>(gp_[i]) : 1;
      for (std::int64_t j = (a + p - 1) / p * p; j < b; j += p) {
        const auto k = static_cast<std::size_t>(j - a);
        mu[k] = static_cast<std::int8_t>(-mu[k]);
        prod[k] *= p;
        if (want_g) g[k] = static_cast<std::int8_t>(g[k] * gp);
      }
      const auto p2 = p * p;
      for (std::int64_t j = (a + p2 - 1) / p2 * p2; j < b; j += p2) mu[j - a] = 0;
    }
    for (std::size_t k = 0; k < len; ++k) {
      if (mu[k] == 0) continue;
      const std::int64_t n = a + static_cast<std::int64_t>(k);
      int m = mu[k];
      int gv = want_g ? g[k] : 1;
      if (prod[k] != n) {
        m = -m;
        if (want_g) gv *= prime_g(n / prod[k]);
      }
      out[k] = want_g ? gv : m;
    }
  }

  // h(n) = sum over n = d m^2, d q-smooth, of mu(m): scatter mu(m) to every
  // d m^2 that lands in the segment.
  void fill_h(std::int64_t a, std::int64_t b, std::vector<std::int32_t>& out) const {
    for (auto d : smooth_) {
      if (d >= b) break;
      const std::int64_t lo_quot = (a + d - 1) / d;
      std::int64_t m = isqrt(lo_quot);
      if (m * m < lo_quot) ++m;
      const std::int64_t mhi = isqrt((b - 1) / d);
      for (; m <= mhi; ++m) {
        const int v = small_mu_[static_cast<std::size_t>(m)];
        if (v != 0) out[static_cast<std::size_t>(d * m * m - a)] += v;
      }
    }
    if (spec_.kind == Kind::abs_h) {
      for (auto& v : out) v = v < 0 ? -v : v;
    }
  }

  FunctionSpec spec_;
  std::int64_t limit_;
  std::vector<std::int64_t> primes_;
  std::vector<int> gp_;
  std::vector<std::int8_t> small_mu_;
  std::vector<std::int64_t> smooth_;
};

// Single-table convenience.
inline FunctionTable sieve_segment(const FunctionSpec& spec, std::int64_t a, std::int64_t b,
                                   const SieveOptions& opt = {}) {
  if (b - a > opt.max_segment) {
    throw range_error("sieve_segment: interval longer than configured segment size");
  }
  return SegmentSieve(spec, b - 1).table(a, b);
}

// Streams [lo, hi] in segments, calling visit(table) in ascending order.
// Up to opt.threads segments are sieved concurrently; visiting is serial so
// reductions are deterministic regardless of the thread count.
inline void for_each_segment(const SegmentSieve& sieve, std::int64_t lo, std::int64_t hi,
                             const SieveOptions& opt,
                             const std::function<void(const FunctionTable&)>& visit) {
  if (hi < lo) return;
  const std::int64_t seg = std::max<std::int64_t>(1, std::min(opt.segment_size, opt.max_segment));
  const unsigned workers = std::max(1u, opt.threads);
  std::vector<FunctionTable> batch(workers);
  for (std::int64_t start = lo; start <= hi;) {
    unsigned used = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> bounds;
    for (; used < workers && start <= hi; ++used) {
      const std::int64_t end = std::min(hi + 1, start + seg);
      bounds.emplace_back(start, end);
      start = end;
    }
    if (used == 1) {
      batch[0] = sieve.table(bounds[0].first, bounds[0].second);
    } else {
      std::vector<std::exception_ptr> failures(used);
      {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < used; ++i) {
          pool.emplace_back([&, i] {
            try {
              batch[i] = sieve.table(bounds[i].first, bounds[i].second);
            } catch (...) {
              failures[i] = std::current_exception();
            }
          });
        }
      }
      for (auto& e : failures) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (unsigned i = 0; i < used; ++i) visit(batch[i]);
  }
}

}  // namespace moblike
