#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moblike/errors.hpp"
#include "moblike/sieve.hpp"

namespace moblike {

enum class Method { direct, hyperbola };

inline std::string_view to_string(Method m) { return m == Method::direct ? "direct" : "hyperbola"; }

// Exact partial sums of one function at increasing checkpoints.
struct SummatorySeries {
  Kind kind = Kind::mobius;
  std::int64_t q = 0;
  int char_id = -1;
  Method method = Method::direct;
  std::vector<std::int64_t> checkpoints;
  std::vector<std::int64_t> sums;

  std::int64_t at(std::int64_t x) const {
    auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), x);
    if (it == checkpoints.end() || *it != x) {
      throw range_error("series has no checkpoint " + std::to_string(x));
    }
    return sums[static_cast<std::size_t>(it - checkpoints.begin())];
  }
};

inline void require_checkpoints(std::span<const std::int64_t> cps) {
  if (cps.empty()) throw range_error("no checkpoints");
  if (cps.front() < 1) throw range_error("checkpoints must be >= 1");
  for (std::size_t i = 1; i < cps.size(); ++i) {
    if (cps[i] <= cps[i - 1]) throw range_error("checkpoints must be strictly increasing");
  }
  if (cps.back() > kMaxRange) {
    throw range_error("checkpoint " + std::to_string(cps.back()) + " exceeds 1e12");
  }
}

// Geometric grid 10^(start_exp + k / per_decade) up to xmax (rounded to
// integers, deduplicated), always including xmax, merged with extras.
inline std::vector<std::int64_t> checkpoint_grid(std::int64_t xmax, int per_decade = 8,
                                                 double start = 100.0,
                                                 std::span<const std::int64_t> extras = {}) {
  std::vector<std::int64_t> out;
  if (per_decade > 0) {
    const double log_start = std::log10(start);
    for (int k = 0;; ++k) {
      const double v = std::pow(10.0, log_start + static_cast<double>(k) / per_decade);
      const auto x = static_cast<std::int64_t>(std::llround(v));
      if (x > xmax) break;
      out.push_back(x);
    }
  }
  out.push_back(xmax);
  for (auto e : extras) {
    if (e >= 1 && e <= xmax) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Streaming accumulator; feed ascending segments, read sums at checkpoints.
class CheckpointAccumulator {
 public:
  explicit CheckpointAccumulator(std::span<const std::int64_t> checkpoints)
      : cps_(checkpoints.begin(), checkpoints.end()) {
    sums_.reserve(cps_.size());
  }

  void consume(const FunctionTable& t) {
    std::int64_t bound = 0;
    for (auto v : t.values) bound += v < 0 ? -v : v;
    std::int64_t check;
    if (__builtin_add_overflow(running_, bound, &check) ||
        __builtin_sub_overflow(running_, bound, &check)) {
      throw overflow_error("partial sum leaves int64 range");
    }
    std::int64_t n = t.a;
    for (auto v : t.values) {
      running_ += v;
      while (next_ < cps_.size() && cps_[next_] == n) {
        sums_.push_back(running_);
        ++next_;
      }
      ++n;
    }
  }

  std::vector<std::int64_t> take() { return std::move(sums_); }

 private:
  std::vector<std::int64_t> cps_;
  std::vector<std::int64_t> sums_;
  std::size_t next_ = 0;
  std::int64_t running_ = 0;
};

// M(x) = sum_{n <= x} value(n) at every checkpoint by one streaming pass.
// Memory is O(segment_size * threads) whatever the largest checkpoint.
inline SummatorySeries summatory_direct(const FunctionSpec& spec,
                                        std::span<const std::int64_t> checkpoints,
                                        const SieveOptions& opt = {}) {
  require_checkpoints(checkpoints);
  SummatorySeries s;
  s.kind = spec.kind;
  s.q = spec.q;
  s.char_id = spec.char_id;
  s.method = Method::direct;
  s.checkpoints.assign(checkpoints.begin(), checkpoints.end());
  const SegmentSieve sieve(spec, checkpoints.back());
  CheckpointAccumulator acc(checkpoints);
  for_each_segment(sieve, 1, checkpoints.back(), opt,
                   [&](const FunctionTable& t) { acc.consume(t); });
  s.sums = acc.take();
  return s;
}

inline SummatorySeries abs_h_sum(std::int64_t q, std::span<const std::int64_t> checkpoints,
                                 const SieveOptions& opt = {}) {
  return summatory_direct(FunctionSpec::abs_h(q), checkpoints, opt);
}

inline SummatorySeries mertens(std::span<const std::int64_t> checkpoints,
                               const SieveOptions& opt = {}) {
  return summatory_direct(FunctionSpec::mobius(), checkpoints, opt);
}

// Running maximum of |M(n)| / n^exponent over every integer 1 <= n <= xmax.
struct NormalizedSup {
  double value = 0.0;
  std::int64_t argmax = 0;
  std::int64_t sum_at_argmax = 0;
};

inline NormalizedSup sup_normalized(const FunctionSpec& spec, std::int64_t xmax, double exponent,
                                    const SieveOptions& opt = {}) {
  if (xmax < 1) throw range_error("sup_normalized: xmax must be >= 1");
  const SegmentSieve sieve(spec, xmax);
  NormalizedSup best;
  std::int64_t running = 0;
  for_each_segment(sieve, 1, xmax, opt, [&](const FunctionTable& t) {
    // n^exponent >= a^exponent on this segment, so |M| <= best * a^exponent
    // rules n out without a pow call.
    const double floor_scale = best.value * std::pow(static_cast<double>(t.a), exponent);
    std::int64_t n = t.a;
    for (auto v : t.values) {
      running += v;
      const auto mag = static_cast<double>(running < 0 ? -running : running);
      if (mag > floor_scale) {
        const double r = mag / std::pow(static_cast<double>(n), exponent);
        if (r > best.value) best = {r, n, running};
      }
      ++n;
    }
  });
  return best;
}

}  // namespace moblike
