#pragma once

#include <array>
#include <cstdint>

namespace moblike::experiments {

// Philox4x32-10 (Salmon, Moraes, Dror, Shaw; "Parallel random numbers: as easy
// as 1, 2, 3", SC'11). A keyed bijection on 128-bit counters: the output for a
// (key, counter) pair does not depend on any other draw, so per-prime values
// are the same whatever order or thread computes them.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter apply(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      ctr = single_round(ctr, key);
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static constexpr Counter single_round(const Counter& c, const Key& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
};

// Random sign for prime p in trial `trial` of run `seed`.
// key = seed, counter = (p low, p high, trial, 0); sign from the top bit of
// the first output word.
inline int prime_sign(std::uint64_t seed, std::uint32_t trial, std::uint64_t p) {
  const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const Philox4x32::Counter ctr{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p >> 32),
                                trial, 0u};
  return (Philox4x32::apply(ctr, key)[0] >> 31) ? -1 : 1;
}

}  // namespace moblike::experiments
