#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moblike/character.hpp"
#include "moblike/errors.hpp"
#include "moblike/pointwise.hpp"
#include "moblike/sieve.hpp"
#include "moblike/summatory.hpp"

namespace moblike {

// Largest x accepted by the hyperbola evaluator.
inline constexpr std::int64_t kMaxHyperbolaX = 10'000'000'000;

// Parameters of M_f(x) = S1 + S2 - S3 where, with f = chi * h,
//   S1 = sum_{dm <= x, d <= D} chi(d) h(m)
//   S2 = sum_{dm <= x, m <= M} chi(d) h(m)
//   S3 = sum_{dm <= x, d <= D, m <= M} chi(d) h(m).
// The identity is exact whenever no pair d > D, m > M has dm <= x, i.e.
// (D + 1)(M + 1) > x.
struct HyperbolaSplit {
  std::int64_t x = 1;
  std::int64_t D = 1;
  std::int64_t M = 1;

  bool covers() const {
    return D >= 1 && M >= 1 &&
           static_cast<__int128>(D + 1) * static_cast<__int128>(M + 1) > x;
  }
};

// M = ceil(x^(2/3)), D = ceil(x / M).
inline HyperbolaSplit default_split(std::int64_t x) {
  if (x < 1) throw invalid_split("default_split: x must be >= 1");
  const __int128 x2 = static_cast<__int128>(x) * x;
  auto m = static_cast<std::int64_t>(std::cbrt(static_cast<long double>(x2)));
  while (m > 1 && static_cast<__int128>(m - 1) * (m - 1) * (m - 1) >= x2) --m;
  while (static_cast<__int128>(m) * m * m < x2) ++m;
  m = std::max<std::int64_t>(m, 1);
  return {x, (x + m - 1) / m, m};
}

namespace detail {

inline void validate_split(const HyperbolaSplit& s) {
  if (s.x < 1 || s.x > kMaxHyperbolaX) {
    throw invalid_split("hyperbola: x = " + std::to_string(s.x) + " outside [1, 1e10]");
  }
  if (!s.covers()) {
    throw invalid_split("hyperbola: split D = " + std::to_string(s.D) +
                        ", M = " + std::to_string(s.M) + " does not cover dm <= " +
                        std::to_string(s.x));
  }
}

// S1 + S2 - S3 given h on [1, M'] (M' >= min(M, x)) and M_h at every
// floor(x / d), d <= min(D, x), and at min(M, x).
template <class MhLookup>
std::int64_t combine(const HyperbolaSplit& s, const CharPrefix& char_sum,
                     std::span<const std::int32_t> h, const MhLookup& mh,
                     const RealCharacter& chi) {
  const std::int64_t x = s.x;
  const std::int64_t dmax = std::min(s.D, x);
  const std::int64_t mmax = std::min(s.M, x);
  std::int64_t s1 = 0;
  for (std::int64_t d = 1; d <= dmax; ++d) {
    const int c = chi(d);
    if (c != 0) s1 += c * mh(x / d);
  }
  std::int64_t s2 = 0;
  for (std::int64_t m = 1; m <= mmax; ++m) {
    const int hv = h[static_cast<std::size_t>(m - 1)];
    if (hv != 0) s2 += hv * char_sum(x / m);
  }
  std::int64_t s3 = 0;
  if (static_cast<__int128>(s.D) * s.M <= x) {
    s3 = char_sum(s.D) * mh(s.M);
  } else {
    for (std::int64_t m = 1; m <= mmax; ++m) {
      const int hv = h[static_cast<std::size_t>(m - 1)];
      if (hv != 0) s3 += hv * char_sum(std::min(s.D, x / m));
    }
  }
  return s1 + s2 - s3;
}

}  // namespace detail

// Hyperbola evaluation at many checkpoints sharing one h-sieve pass. `splits`
// must align with the checkpoints.
inline SummatorySeries hyperbola_series(const RealCharacter& chi, int char_id,
                                        std::span<const HyperbolaSplit> splits,
                                        const SieveOptions& opt = {}) {
  if (splits.empty()) throw range_error("hyperbola_series: no checkpoints");
  std::int64_t xmax = 0;
  std::int64_t mmax = 0;
  std::vector<std::int64_t> points;
  for (const auto& s : splits) {
    detail::validate_split(s);
    xmax = std::max(xmax, s.x);
    const auto m = std::min(s.M, s.x);
    mmax = std::max(mmax, m);
    for (std::int64_t d = 1; d <= std::min(s.D, s.x); ++d) points.push_back(s.x / d);
    points.push_back(m);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const SegmentSieve sieve(FunctionSpec::h(chi.modulus()), xmax);
  std::vector<std::int32_t> h;
  h.reserve(static_cast<std::size_t>(mmax));
  CheckpointAccumulator acc(points);
  for_each_segment(sieve, 1, xmax, opt, [&](const FunctionTable& t) {
    for (std::int64_t n = t.a; n < t.b && n <= mmax; ++n) h.push_back(t.at(n));
    acc.consume(t);
  });
  const auto sums = acc.take();
  auto mh = [&](std::int64_t y) {
    auto it = std::lower_bound(points.begin(), points.end(), y);
    return sums[static_cast<std::size_t>(it - points.begin())];
  };

  SummatorySeries out;
  out.kind = Kind::f;
  out.q = chi.modulus();
  out.char_id = char_id;
  out.method = Method::hyperbola;
  const CharPrefix prefix(chi);
  for (const auto& s : splits) {
    out.checkpoints.push_back(s.x);
    out.sums.push_back(detail::combine(s, prefix, h, mh, chi));
  }
  require_checkpoints(out.checkpoints);
  return out;
}

// M_f(x) for f = mu^2 g_chi through the hyperbola decomposition. h values up
// to M and the M_h values come from one h-sieve pass; chi sums use the
// periodic prefix table.
inline std::int64_t summatory_hyperbola(const RealCharacter& chi, const HyperbolaSplit& split,
                                        const SieveOptions& opt = {}) {
  return hyperbola_series(chi, -1, std::span(&split, 1), opt).sums.front();
}

}  // namespace moblike
