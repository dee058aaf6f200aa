#include <gtest/gtest.h>

#include <random>

#include "moblike/factor.hpp"
#include "oracles.hpp"

using moblike::factorize;
using moblike::PrimePower;

TEST(Factorize, One) { EXPECT_TRUE(factorize(1).factors.empty()); }

TEST(Factorize, Twelve) {
  const auto f = factorize(12);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_EQ(f.omega(), 2);
  EXPECT_FALSE(f.squarefree());
}

TEST(Factorize, LargePrime) {
  EXPECT_TRUE(oracle::is_prime(9999999967));
  const auto f = factorize(9999999967);
  EXPECT_EQ(f.factors, (std::vector<PrimePower>{{9999999967, 1}}));
}

TEST(Factorize, RejectsNonPositive) {
  EXPECT_THROW(factorize(0), moblike::range_error);
  EXPECT_THROW(factorize(-5), moblike::range_error);
}

TEST(Factorize, MatchesTrialDivision) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000'000'000);
  for (int i = 0; i < 300; ++i) {
    const auto n = dist(rng);
    const auto ref = oracle::trial_factor(n);
    std::vector<PrimePower> want;
    for (auto [p, e] : ref) want.push_back({p, e});
    EXPECT_EQ(factorize(n).factors, want) << n;
  }
}

TEST(Factorize, ProductInvariantNearInt64Max) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> dist(INT64_MAX - 1'000'000'000, INT64_MAX);
  for (int i = 0; i < 40; ++i) {
    const auto n = dist(rng);
    const auto f = factorize(n);
    __int128 prod = 1;
    std::int64_t last = 1;
    for (auto [p, e] : f.factors) {
      EXPECT_GT(p, last);
      EXPECT_TRUE(moblike::is_prime(static_cast<std::uint64_t>(p)));
      EXPECT_GE(e, 1);
      for (int k = 0; k < e; ++k) prod *= p;
      last = p;
    }
    EXPECT_TRUE(prod == n) << n;
  }
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100k) {
  for (std::int64_t n = 0; n < 100'000; ++n) {
    ASSERT_EQ(moblike::is_prime(static_cast<std::uint64_t>(n)), oracle::is_prime(n)) << n;
  }
}

TEST(IsPrime, StrongPseudoprimes) {
  // strong pseudoprimes to several small bases
  EXPECT_FALSE(moblike::is_prime(3215031751ULL));
  EXPECT_FALSE(moblike::is_prime(3825123056546413051ULL));
  EXPECT_TRUE(moblike::is_prime(9223372036854775783ULL));
}

TEST(PrimesUpTo, Count) {
  EXPECT_EQ(moblike::primes_up_to(1'000'000).size(), 78498u);
  EXPECT_TRUE(moblike::primes_up_to(1).empty());
}

TEST(Isqrt, Boundaries) {
  for (std::int64_t r : {0LL, 1LL, 2LL, 3037000499LL}) {
    EXPECT_EQ(moblike::isqrt(r * r), r);
    if (r > 0) { EXPECT_EQ(moblike::isqrt(r * r - 1), r - 1); }
  }
  EXPECT_EQ(moblike::isqrt(INT64_MAX), 3037000499LL);
}
