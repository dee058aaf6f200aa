#include <gtest/gtest.h>

#include <random>

#include "moblike/pointwise.hpp"
#include "moblike/sieve.hpp"
#include "oracles.hpp"

using namespace moblike;

namespace {

std::vector<std::int32_t> values(const FunctionSpec& spec, std::int64_t a, std::int64_t b) {
  return sieve_segment(spec, a, b).values;
}

const RealCharacter chi3 = real_character(3, 0);

}  // namespace

TEST(SieveSegment, MobiusExample) {
  EXPECT_EQ(values(FunctionSpec::mobius(), 1, 11),
            (std::vector<std::int32_t>{1, -1, -1, 0, -1, 1, -1, 0, 0, 1}));
}

TEST(SieveSegment, FExample) {
  EXPECT_EQ(values(FunctionSpec::f(chi3), 1, 8), (std::vector<std::int32_t>{1, -1, 1, 0, -1, -1, 1}));
}

TEST(SieveSegment, HExample) {
  EXPECT_EQ(values(FunctionSpec::h(3), 1, 5), (std::vector<std::int32_t>{1, 0, 1, -1}));
}

TEST(SieveSegment, TableMetadata) {
  const auto t = sieve_segment(FunctionSpec::f(chi3, 0), 100, 200);
  EXPECT_EQ(t.kind, Kind::f);
  EXPECT_EQ(t.q, 3);
  EXPECT_EQ(t.char_id, 0);
  EXPECT_EQ(t.size(), 100);
  EXPECT_EQ(t.at(150), f_value(chi3, 150));
}

TEST(SieveSegment, RangeErrors) {
  EXPECT_THROW(values(FunctionSpec::mobius(), 0, 10), range_error);
  EXPECT_THROW(values(FunctionSpec::mobius(), 10, 10), range_error);
  EXPECT_THROW(SegmentSieve(FunctionSpec::mobius(), kMaxRange + 1), range_error);
  SieveOptions small;
  small.max_segment = 100;
  EXPECT_THROW(sieve_segment(FunctionSpec::mobius(), 1, 1000, small), range_error);
  const SegmentSieve s(FunctionSpec::mobius(), 1000);
  EXPECT_THROW(s.table(990, 1002), range_error);
}

TEST(SieveSegment, AgreesWithPointOraclesOnRandomSamples) {
  std::mt19937_64 rng(11);
  const std::vector<FunctionSpec> specs = {FunctionSpec::mobius(), FunctionSpec::f(chi3),
                                           FunctionSpec::f(real_character(8, 1)), FunctionSpec::h(3),
                                           FunctionSpec::h(12), FunctionSpec::abs_h(6)};
  for (const auto& spec : specs) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto a = std::uniform_int_distribution<std::int64_t>(1, 10'000'000 - 20'000)(rng);
      const auto b = a + std::uniform_int_distribution<std::int64_t>(1000, 20'000)(rng);
      const auto t = sieve_segment(spec, a, b);
      for (int i = 0; i < 150; ++i) {
        const auto n = std::uniform_int_distribution<std::int64_t>(a, b - 1)(rng);
        std::int64_t want = 0;
        switch (spec.kind) {
          case Kind::mobius: want = oracle::mobius(n); break;
          case Kind::f: want = f_value(*spec.chi, n); break;
          case Kind::h: want = h_value(spec.q, n); break;
          case Kind::abs_h: want = std::llabs(h_value(spec.q, n)); break;
          case Kind::chi: want = (*spec.chi)(n); break;
        }
        ASSERT_EQ(t.at(n), want) << to_string(spec.kind) << " n=" << n;
      }
    }
  }
}

TEST(SieveSegment, HighRange) {
  // near 1e12 the cofactor logic meets primes above sqrt(b)
  const std::int64_t a = 999'999'990'000, b = 1'000'000'000'001;
  const auto t = sieve_segment(FunctionSpec::f(chi3), a, b);
  for (std::int64_t n = a; n < b; n += 37) ASSERT_EQ(t.at(n), f_value(chi3, n)) << n;
  ASSERT_EQ(t.at(b - 1), f_value(chi3, b - 1));
}

TEST(SieveSegment, SegmentIndependence) {
  std::mt19937_64 rng(3);
  for (const auto& spec : {FunctionSpec::mobius(), FunctionSpec::f(chi3), FunctionSpec::h(6)}) {
    const std::int64_t b = 200'000;
    const SegmentSieve sieve(spec, b - 1);
    const auto whole = sieve.table(1, b).values;
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<std::int32_t> joined;
      std::int64_t a = 1;
      while (a < b) {
        const auto end = std::min(b, a + std::uniform_int_distribution<std::int64_t>(1, 40'000)(rng));
        const auto part = sieve.table(a, end).values;
        joined.insert(joined.end(), part.begin(), part.end());
        a = end;
      }
      EXPECT_EQ(joined, whole);
    }
  }
}

TEST(ForEachSegment, OrderedAndThreadIndependent) {
  const SegmentSieve sieve(FunctionSpec::f(chi3), 1'000'000);
  std::vector<std::int32_t> ref;
  for (unsigned threads : {1u, 2u, 5u}) {
    SieveOptions opt;
    opt.segment_size = 77'777;
    opt.threads = threads;
    std::vector<std::int32_t> seen;
    std::int64_t expect_a = 1;
    for_each_segment(sieve, 1, 1'000'000, opt, [&](const FunctionTable& t) {
      EXPECT_EQ(t.a, expect_a);
      expect_a = t.b;
      seen.insert(seen.end(), t.values.begin(), t.values.end());
    });
    EXPECT_EQ(expect_a, 1'000'001);
    if (ref.empty()) ref = seen;
    EXPECT_EQ(seen, ref);
  }
}

TEST(ForEachSegment, WorkerExceptionsPropagate) {
  const SegmentSieve sieve(FunctionSpec::mobius(), 1000);
  SieveOptions opt;
  opt.segment_size = 300;
  opt.threads = 3;
  EXPECT_THROW(for_each_segment(sieve, 1, 2000, opt, [](const FunctionTable&) {}), range_error);
}

TEST(MobiusTable, LinearSieve) {
  const auto mu = SegmentSieve::mobius_table(10'000);
  const auto ref = oracle::mobius_upto(10'000);
  for (int n = 1; n <= 10'000; ++n) ASSERT_EQ(mu[n], ref[n]);
}
