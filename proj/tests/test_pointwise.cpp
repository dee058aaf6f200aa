#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "moblike/character.hpp"
#include "moblike/pointwise.hpp"
#include "moblike/sieve.hpp"
#include "moblike/summatory.hpp"
#include "oracles.hpp"

using namespace moblike;

namespace {

const RealCharacter& chi3() {
  static const auto c = real_character(3, 0);
  return c;
}

std::vector<int> ints(const RealCharacter& c) { return {c.table().begin(), c.table().end()}; }

}  // namespace

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
}

TEST(Mobius, MatchesTrialDivision) {
  for (std::int64_t n = 1; n <= 20'000; ++n) ASSERT_EQ(mobius(n), oracle::mobius(n)) << n;
}

TEST(GChi, Examples) {
  EXPECT_EQ(g_chi(chi3(), 3), 1);
  EXPECT_EQ(g_chi(chi3(), 2), -1);
  // 18 = 2 * 3^2: g(2) g(3)^2 = -1
  EXPECT_EQ(g_chi(chi3(), 18), -1);
  EXPECT_EQ(oracle::g_chi(ints(chi3()), 18), -1);
}

TEST(FValue, Examples) {
  EXPECT_EQ(f_value(chi3(), 4), 0);
  EXPECT_EQ(f_value(chi3(), 6), -1);
  EXPECT_EQ(f_value(chi3(), 1), 1);
}

TEST(HValue, Examples) {
  EXPECT_EQ(h_value(3, 4), -1);
  EXPECT_EQ(h_value(3, 9), 0);
  EXPECT_EQ(h_value(3, 3), 1);
  EXPECT_EQ(h_value(3, 1), 1);
}

TEST(HValue, MatchesDivisorEnumeration) {
  for (std::int64_t q : {3, 4, 6, 12, 30}) {
    for (std::int64_t n = 1; n <= 3000; ++n) ASSERT_EQ(h_value(q, n), oracle::h_value(q, n)) << q << " " << n;
  }
}

TEST(HValue, BoundedBySquareCofactorDivisors) {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    std::int64_t admissible = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0 || !is_q_smooth(d, 12)) continue;
      const auto r = n / d;
      const auto m = isqrt(r);
      admissible += m * m == r;
    }
    ASSERT_LE(std::llabs(h_value(12, n)), admissible);
  }
}

TEST(CharPartialSum, Examples) {
  EXPECT_EQ(char_partial_sum(chi3(), 0), 0);
  EXPECT_EQ(char_partial_sum(chi3(), 2), 0);
  EXPECT_EQ(char_partial_sum(chi3(), 7), 1);
}

TEST(CharPartialSum, MatchesRunningSumAndBound) {
  for (std::int64_t q : {5, 8, 12, 24}) {
    for (const auto& c : enumerate_real_characters(q)) {
      const CharPrefix prefix(c);
      std::int64_t run = 0;
      for (std::int64_t x = 0; x <= 500; ++x) {
        if (x > 0) run += c(x);
        ASSERT_EQ(char_partial_sum(c, x), run);
        ASSERT_EQ(prefix(x), run);
        ASSERT_LE(std::llabs(run), q);
      }
      EXPECT_EQ(char_partial_sum(c, 1'000'000'000'000), prefix(1'000'000'000'000));
    }
  }
}

TEST(Multiplicativity, GChiCompletelyMultiplicative) {
  for (std::int64_t q : {3, 4, 8, 12}) {
    for (const auto& c : enumerate_real_characters(q)) {
      for (std::int64_t m = 1; m <= 300; ++m) {
        for (std::int64_t n = 1; n <= 300; ++n) ASSERT_EQ(g_chi(c, m * n), g_chi(c, m) * g_chi(c, n));
      }
      std::mt19937_64 rng(q);
      std::uniform_int_distribution<std::int64_t> d(1, 10'000);
      for (int i = 0; i < 20'000; ++i) {
        const auto m = d(rng), n = d(rng);
        ASSERT_EQ(g_chi(c, m * n), g_chi(c, m) * g_chi(c, n)) << m << " " << n;
      }
    }
  }
}

TEST(Multiplicativity, FOnCoprimePairs) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(1, 10'000);
  for (std::int64_t q : {3, 5, 8}) {
    for (const auto& c : enumerate_real_characters(q)) {
      for (int i = 0; i < 20'000; ++i) {
        const auto m = d(rng), n = d(rng);
        if (oracle::gcd(m, n) != 1) continue;
        ASSERT_EQ(f_value(c, m * n), f_value(c, m) * f_value(c, n));
      }
    }
  }
}

TEST(FValue, MatchesOracle) {
  for (std::int64_t q : {3, 4, 7, 12}) {
    const auto refs = oracle::real_characters(q);
    const auto cs = enumerate_real_characters(q);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::int64_t n = 1; n <= 5000; ++n) ASSERT_EQ(f_value(cs[i], n), oracle::f_value(refs[i], n));
    }
  }
}

TEST(FValue, SupportAndResemblingPropertyToMillion) {
  const std::int64_t N = 1'000'000;
  const auto mu = SegmentSieve(FunctionSpec::mobius(), N).table(1, N + 1);
  const auto f = SegmentSieve(FunctionSpec::f(chi3()), N).table(1, N + 1);
  const auto ref_mu = oracle::mobius_upto(N);
  for (std::int64_t n = 1; n <= N; ++n) {
    ASSERT_EQ(mu.at(n), ref_mu[n]);
    ASSERT_EQ(f.at(n) == 0, mu.at(n) == 0) << n;
    if (ref_mu[n] == -1 && is_prime(static_cast<std::uint64_t>(n))) { ASSERT_NE(f.at(n), 0); }
  }
  for (std::int64_t n = 1; n <= N; n += 997) ASSERT_EQ(f.at(n), f_value(chi3(), n));
}

TEST(SmoothCount, Examples) {
  EXPECT_EQ(count_q_smooth(3, 10), 3);  // 1, 3, 9
  EXPECT_EQ(count_q_smooth(6, 12), 8);
  EXPECT_EQ(count_q_smooth(7, 1), 1);
  EXPECT_EQ(count_q_smooth(1, 1000), 1);
  EXPECT_THROW(count_q_smooth(3, 0), range_error);
}

TEST(SmoothCount, MatchesEnumeration) {
  for (std::int64_t q : {2, 3, 6, 10, 12, 30, 210}) {
    EXPECT_EQ(q_smooth_numbers(q, 5000), oracle::q_smooth_upto(q, 5000)) << q;
  }
}

TEST(SmoothCount, LogBoundFromThreshold) {
  for (std::int64_t q : {3, 5, 6, 12, 30}) {
    const std::int64_t xmax = 2'000'000;
    const auto x0 = smooth_bound_threshold(q, xmax);
    const int k = factorize(q).omega();
    const auto smooth = q_smooth_numbers(q, xmax);
    // exhaustive over [x0, 2e6] via the step structure, plus a dense check
    std::size_t idx = 0;
    for (std::int64_t x = 1; x <= 200'000; ++x) {
      while (idx < smooth.size() && smooth[idx] <= x) ++idx;
      const bool holds = static_cast<double>(idx) <= std::pow(std::log(static_cast<double>(x)), k);
      if (x >= x0) { ASSERT_TRUE(holds) << "q=" << q << " x=" << x; }
      if (x == x0 - 1) { EXPECT_FALSE(holds) << "q=" << q << " x0 not minimal"; }
    }
    for (std::size_t i = 0; i < smooth.size(); ++i) {
      if (smooth[i] >= x0) {
        EXPECT_LE(static_cast<double>(i + 1), std::pow(std::log(static_cast<double>(smooth[i])), k));
      }
    }
  }
}

TEST(SmoothCount, RecordedThresholdForThree) {
  // count is floor(log_3 x) + 1, which stays above log x until log x (1 - 1/log 3) >= 1
  EXPECT_EQ(smooth_bound_threshold(3, 10'000'000), 59875);
}

TEST(SmoothCount, PowerOfTwoNeverSatisfiesLogBound) {
  // floor(log_2 x) + 1 > log x for every x, so no threshold exists in range
  EXPECT_EQ(smooth_bound_threshold(4, 1'000'000), 1'000'001);
  EXPECT_EQ(smooth_bound_threshold(8, 1'000'000), 1'000'001);
}

// Sum_{n <= x} |h(n)| / (sqrt(x) (log x)^omega(q)) stays below a fixed constant
// on 1e3 .. 1e7.
TEST(AbsHSum, MonitoredRatio) {
  for (std::int64_t q : {3, 12}) {
    std::vector<std::int64_t> cps;
    for (std::int64_t x = 1000; x <= 10'000'000; x *= 10) cps.push_back(x);
    const auto s = abs_h_sum(q, cps);
    const int k = factorize(q).omega();
    for (std::size_t i = 0; i < cps.size(); ++i) {
      const double x = static_cast<double>(cps[i]);
      const double ratio = static_cast<double>(s.sums[i]) / (std::sqrt(x) * std::pow(std::log(x), k));
      EXPECT_LT(ratio, 1.0) << "q=" << q << " x=" << cps[i];
      if (i > 0) { EXPECT_GE(s.sums[i], s.sums[i - 1]); }
    }
  }
}
