#include <gtest/gtest.h>

#include <random>

#include "moblike/hyperbola.hpp"
#include "moblike/summatory.hpp"
#include "oracles.hpp"

using namespace moblike;

namespace {

const RealCharacter chi3 = real_character(3, 0);

std::int64_t direct(const RealCharacter& chi, std::int64_t x) {
  const std::vector<std::int64_t> c{x};
  return summatory_direct(FunctionSpec::f(chi), c).sums.front();
}

}  // namespace

TEST(Hyperbola, Examples) {
  EXPECT_EQ(summatory_hyperbola(chi3, {100, 10, 10}), direct(chi3, 100));
  EXPECT_EQ(summatory_hyperbola(chi3, {1, 1, 1}), 1);
  EXPECT_EQ(summatory_hyperbola(chi3, {1'000'000, 100, 10'000}), direct(chi3, 1'000'000));
}

TEST(Hyperbola, DefaultSplit) {
  const auto s = default_split(1'000'000);
  EXPECT_EQ(s.M, 10'000);
  EXPECT_EQ(s.D, 100);
  const auto t = default_split(1000);
  EXPECT_EQ(t.M, 100);
  EXPECT_EQ(t.D, 10);
  for (std::int64_t x = 1; x <= 5000; ++x) {
    const auto d = default_split(x);
    // M^3 >= x^2 > (M - 1)^3
    ASSERT_GE(static_cast<__int128>(d.M) * d.M * d.M, static_cast<__int128>(x) * x);
    ASSERT_LT(static_cast<__int128>(d.M - 1) * (d.M - 1) * (d.M - 1), static_cast<__int128>(x) * x);
    ASSERT_TRUE(d.covers());
    ASSERT_GE(d.D * d.M, x);
  }
  EXPECT_THROW(default_split(0), invalid_split);
}

TEST(Hyperbola, InvalidSplits) {
  EXPECT_THROW(summatory_hyperbola(chi3, {100, 5, 5}), invalid_split);
  EXPECT_THROW(summatory_hyperbola(chi3, {100, 0, 200}), invalid_split);
  EXPECT_THROW(summatory_hyperbola(chi3, {0, 1, 1}), invalid_split);
  EXPECT_THROW(summatory_hyperbola(chi3, {kMaxHyperbolaX + 1, 1, kMaxHyperbolaX + 1}), invalid_split);
  // covering but D M < x: (9 + 1)(10 + 1) > 100
  EXPECT_EQ(summatory_hyperbola(chi3, {100, 9, 10}), direct(chi3, 100));
}

TEST(Hyperbola, EqualsDirectOnRandomSplits) {
  std::mt19937_64 rng(2024);
  for (std::int64_t q : {3, 4, 5, 7, 8}) {
    for (const auto& chi : enumerate_real_characters(q)) {
      const std::int64_t N = 1'000'000;
      const auto f = SegmentSieve(FunctionSpec::f(chi), N).table(1, N + 1);
      std::vector<std::int64_t> prefix(N + 1, 0);
      for (std::int64_t n = 1; n <= N; ++n) prefix[n] = prefix[n - 1] + f.at(n);
      for (int i = 0; i < 200; ++i) {
        const auto x = std::uniform_int_distribution<std::int64_t>(1, N)(rng);
        const auto M = std::uniform_int_distribution<std::int64_t>(1, x)(rng);
        const auto D = std::max<std::int64_t>(1, x / M + std::uniform_int_distribution<std::int64_t>(0, 5)(rng));
        const HyperbolaSplit s{x, D, M};
        ASSERT_EQ(summatory_hyperbola(chi, s), prefix[x]) << "q=" << q << " x=" << x << " D=" << D << " M=" << M;
      }
    }
  }
}

TEST(Hyperbola, SeriesMatchesDirectOnGrid) {
  for (std::int64_t q : {3, 8}) {
    for (const auto& chi : enumerate_real_characters(q)) {
      const auto grid = checkpoint_grid(5'000'000);
      std::vector<HyperbolaSplit> splits;
      for (auto x : grid) splits.push_back(default_split(x));
      const auto h = hyperbola_series(chi, 0, splits);
      const auto d = summatory_direct(FunctionSpec::f(chi), grid);
      EXPECT_EQ(h.sums, d.sums);
      EXPECT_EQ(h.method, Method::hyperbola);
    }
  }
}

// M_h from the h sieve against sum over q-smooth d of Mertens(sqrt(y / d)).
TEST(Hyperbola, MhMatchesSmoothMertensDecomposition) {
  const std::int64_t Y = 200'000;
  const auto mu = oracle::mobius_upto(1000);
  std::vector<std::int64_t> mert(1001, 0);
  for (int k = 1; k <= 1000; ++k) mert[k] = mert[k - 1] + mu[k];
  std::vector<std::int64_t> ys;
  for (std::int64_t y = 1; y <= Y; y = y * 3 / 2 + 1) ys.push_back(y);
  for (std::int64_t q : {3, 12}) {
    const auto s = summatory_direct(FunctionSpec::h(q), ys);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      EXPECT_EQ(s.sums[i], oracle::mh_via_mertens(q, ys[i], mert)) << "q=" << q << " y=" << ys[i];
    }
  }
}
