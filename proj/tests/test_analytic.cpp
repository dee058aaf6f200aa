#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "moblike/analytic/gamma.hpp"
#include "moblike/analytic/series.hpp"
#include "moblike/analytic/zeta.hpp"
#include "moblike/sieve.hpp"
#include "oracles.hpp"

using namespace moblike;
using namespace moblike::analytic;
using std::numbers::pi;

namespace {

const RealCharacter chi3 = real_character(3, 0);
const RealCharacter chi4 = real_character(4, 0);

std::vector<int> ints(const RealCharacter& c) { return {c.table().begin(), c.table().end()}; }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(Gamma, ClosedForms) {
  EXPECT_NEAR(std::abs(gamma({0.5, 0}) - std::sqrt(pi)), 0.0, 1e-13);
  double fact = 1;
  for (int n = 1; n <= 15; ++n) {
    EXPECT_NEAR(gamma({static_cast<double>(n), 0}).real() / fact, 1.0, 1e-13) << n;
    fact *= n;
  }
  // reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z)
  const Complex z(0.3, 2.0);
  EXPECT_LT(rel(gamma(z) * gamma(1.0 - z), pi / std::sin(pi * z)), 1e-12);
}

TEST(Gamma, LogGammaMatchesLanczos) {
  for (double t : {0.0, 1.0, 5.0, 20.0}) {
    const Complex z(2.5, t);
    const auto lg = log_gamma(ComplexL(z));
    EXPECT_LT(rel(Complex(std::exp(lg)), gamma(z)), 1e-12) << t;
  }
}

TEST(Zeta, ClosedForms) {
  EXPECT_LT(std::abs(zeta({2, 0}) - pi * pi / 6), 1e-10);
  EXPECT_LT(std::abs(zeta({0, 0}) + 0.5), 1e-10);
  EXPECT_LT(std::abs(zeta({4, 0}) - std::pow(pi, 4) / 90), 1e-12);
  EXPECT_LT(std::abs(zeta({-1, 0}) + 1.0 / 12), 1e-12);
  EXPECT_LT(std::abs(zeta({-2, 0})), 1e-12);
  EXPECT_LT(std::abs(zeta({0.5, 14.134725})), 1e-4);
  EXPECT_THROW(zeta({1, 0}), pole_error);
}

TEST(Zeta, MatchesBorweinOracle) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> sig(0.1, 3.0), tt(-100.0, 100.0);
  for (int i = 0; i < 40; ++i) {
    const Complex s(sig(rng), tt(rng));
    const auto ref = Complex(oracle::zeta_borwein(oracle::cld(s), 120));
    EXPECT_LT(std::abs(zeta(s) - ref) / std::abs(ref), 1e-10) << s;
  }
}

TEST(Zeta, HighOnCriticalLine) {
  // |t| up to 1e5: compare with the functional equation at 1 - s
  for (double t : {1000.0, 10000.0, 100000.0}) {
    const Complex s(0.7, t);
    const auto lhs = zeta(s);
    const auto rhs = functional_factor(s) * zeta(1.0 - s);
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(lhs), 1e-8) << t;
  }
}

TEST(Zeta, ReflectionGrid) {
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const Complex s(-2.0 + 5.0 * (i + 0.5) / 10.0, -50.0 + 100.0 * j / 9.0);
      worst = std::max(worst, std::abs(zeta(s) - functional_factor(s) * zeta(1.0 - s)));
    }
  }
  EXPECT_LT(worst, 1e-8);
}

TEST(Hurwitz, SpecialValues) {
  // zeta(s, 1) = zeta(s); zeta(s, 1/2) = (2^s - 1) zeta(s)
  const Complex s(2.5, 3.0);
  EXPECT_LT(rel(hurwitz_zeta(s, 1.0), zeta(s)), 1e-12);
  EXPECT_LT(rel(hurwitz_zeta(s, 0.5), (std::pow(2.0, s) - 1.0) * zeta(s)), 1e-11);
}

TEST(ZetaPrime, Values) {
  EXPECT_NEAR(zeta_prime({0, 0}).real(), -0.5 * std::log(2 * pi), 1e-7);
  const double ref = static_cast<double>(oracle::zeta_prime_2());
  EXPECT_NEAR(ref, -0.9375482543, 1e-10);
  EXPECT_NEAR(zeta_prime({2, 0}).real(), ref, 1e-6 * std::abs(ref));
  EXPECT_THROW(zeta_prime({1, 0}), pole_error);
}

TEST(ZetaPrime, ConsistentWithFivePointStencil) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> sig(-1.0, 3.0), tt(-40.0, 40.0);
  for (int i = 0; i < 20; ++i) {
    const Complex s(sig(rng), tt(rng));
    const double h = 1e-3;
    const Complex d = (-zeta(s + 2 * h) + 8.0 * zeta(s + h) - 8.0 * zeta(s - h) + zeta(s - 2 * h)) / (12 * h);
    EXPECT_LT(std::abs(zeta_prime(s) - d) / std::abs(d), 1e-5) << s;
  }
}

TEST(DirichletL, ClosedForms) {
  EXPECT_LT(std::abs(dirichlet_l(chi3, {1, 0}) - pi / (3 * std::sqrt(3.0))), 1e-8);
  EXPECT_LT(std::abs(dirichlet_l(chi4, {1, 0}) - pi / 4), 1e-8);
  // Catalan's constant
  EXPECT_LT(std::abs(dirichlet_l(chi4, {2, 0}) - 0.915965594177219015), 1e-12);
}

TEST(DirichletL, ModThreeAtTwo) {
  const auto ref = static_cast<double>(oracle::l_series(ints(chi3), 2.0L, 10'000'000));
  EXPECT_NEAR(ref, 0.781302412896486, 1e-13);
  EXPECT_NEAR(dirichlet_l(chi3, {2, 0}).real(), ref, 1e-12);
}

TEST(DirichletL, HurwitzFormAgrees) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> sig(-1.0, 3.0), tt(-30.0, 30.0);
  for (std::int64_t q : {3, 5, 8, 12}) {
    for (const auto& c : enumerate_real_characters(q)) {
      for (int i = 0; i < 5; ++i) {
        const Complex s(sig(rng), tt(rng));
        EXPECT_LT(rel(dirichlet_l(c, s), dirichlet_l_hurwitz(c, s)), 1e-9) << q << " " << s;
      }
    }
  }
}

TEST(PFactor, Values) {
  EXPECT_NEAR(p_factor(3, {2, 0}).real(), 1.125, 1e-15);
  EXPECT_NEAR(p_factor(6, {1, 0}).real(), 3.0, 1e-14);
  EXPECT_THROW(p_factor(3, {0, 2 * pi / std::log(3.0)}), pole_error);
}

TEST(PFactor, PolesOnImaginaryGrid) {
  for (std::int64_t q : {3, 4, 6}) {
    for (auto p : prime_divisors(q)) {
      for (int j = -3; j <= 3; ++j) {
        const Complex s(0, 2 * pi * j / std::log(static_cast<double>(p)));
        EXPECT_THROW(p_factor(q, s), pole_error) << q << " " << j;
        EXPECT_NO_THROW(p_factor(q, s + Complex(1e-6, 0)));
      }
    }
  }
}

TEST(PFactor, PoleOrderAtZero) {
  for (std::int64_t q : {3, 4, 6, 30}) {
    const double a = 1e-3, b = 1e-4;
    const double slope = (std::log(std::abs(p_factor(q, {b, 0}))) - std::log(std::abs(p_factor(q, {a, 0})))) /
                         (std::log(b) - std::log(a));
    EXPECT_NEAR(slope, -static_cast<double>(prime_divisors(q).size()), 0.05) << q;
  }
}

TEST(FSeries, AgreesWithDirichletSeries) {
  const std::int64_t N = 10'000'000;
  const auto f = SegmentSieve(FunctionSpec::f(chi3), N).table(1, N + 1);
  auto partial = [&](Complex s, std::int64_t n_max) {
    ComplexL acc = 0;
    for (std::int64_t n = n_max; n >= 1; --n) {
      if (f.at(n) != 0) acc += static_cast<long double>(f.at(n)) * std::exp(-ComplexL(s) * std::log(static_cast<long double>(n)));
    }
    return Complex(acc);
  };
  EXPECT_LT(std::abs(f_series(chi3, {2, 0}) - partial({2, 0}, 1'000'000)), 1e-6);
  EXPECT_LT(std::abs(f_series(chi3, {1.5, 0}) - partial({1.5, 0}, N)), 1e-3);
  EXPECT_NEAR(std::abs(f_series(chi3, {40, 0})), 1.0, 1e-10);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> sig(1.5, 4.0), tt(-20.0, 20.0);
  for (int i = 0; i < 20; ++i) {
    const Complex s(sig(rng), tt(rng));
    const std::int64_t n_max = 200'000;
    const double tail = std::pow(static_cast<double>(n_max), 1 - s.real()) / (s.real() - 1);
    EXPECT_LT(std::abs(f_series(chi3, s) - partial(s, n_max)), tail) << s;
  }
}

TEST(FSeries, PoleAtZetaZero) {
  // zeta(2s) = 0 at s = 1/4 + i gamma_1 / 2
  EXPECT_THROW(f_series(chi3, {0.25, 14.134725141734693 / 2}), pole_error);
}

TEST(ZMTail, MatchesDirectTail) {
  const auto mu = oracle::mobius_upto(1'000'000);
  for (double sigma : {1.1, 1.2, 1.5, 2.0}) {
    for (std::int64_t M : {1000, 100'000}) {
      const auto got = z_m_tail({3, 0, M, {sigma, 0.0}});
      const auto ref = Complex(oracle::z_m_direct(3, oracle::cld(sigma, 0), M, 1'000'000'000'000, mu));
      EXPECT_LT(std::abs(got - ref), 1e-6) << "sigma=" << sigma << " M=" << M;
    }
  }
  // complex s
  const auto got = z_m_tail({3, 0, 5000, {1.5, 7.0}});
  const auto ref = Complex(oracle::z_m_direct(3, oracle::cld(1.5, 7.0), 5000, 1'000'000'000'000, mu));
  EXPECT_LT(std::abs(got - ref), 1e-6);
}

TEST(ZMTail, GoldenAtOnePointTwo) {
  EXPECT_NEAR(z_m_tail({3, 0, 1000, {1.2, 0.0}}).real(), -1.40291719673e-4, 1e-12);
}

// h is signed, so |Z_M| need not decrease at every doubling; it does decay
// overall.
TEST(ZMTail, ShrinksAlongPowersOfTwo) {
  std::vector<std::int64_t> Ms;
  for (int k = 4; k <= 22; ++k) Ms.push_back(std::int64_t{1} << k);
  const auto z = z_m_tails(3, {1.5, 0}, Ms);
  EXPECT_LT(std::abs(z.back()), std::abs(z.front()) * 1e-2);
}

TEST(ZMTail, MeasuredDecayRate) {
  std::vector<std::int64_t> Ms;
  for (int k = 10; k <= 18; ++k) Ms.push_back(std::int64_t{1} << k);
  for (double sigma : {0.75, 1.0, 1.25}) {
    const auto z = z_m_tails(3, {sigma, 0}, Ms);
    double acc = 0;
    for (std::size_t i = 1; i < z.size(); ++i) acc += std::log2(std::abs(z[i]) / std::abs(z[i - 1]));
    EXPECT_NEAR(acc / static_cast<double>(z.size() - 1), 0.25 - sigma, 0.25) << sigma;
  }
}

TEST(ZMTail, Preconditions) {
  EXPECT_THROW(z_m_tail({3, 0, 10, {0.5, 0}}), range_error);
  EXPECT_THROW(z_m_tail({3, 0, 0, {1.5, 0}}), range_error);
  EXPECT_THROW(z_m_tail({3, 0, kMaxTailM + 1, {1.5, 0}}), range_error);
}
