#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moblike/analytic/zeta.hpp"
#include "moblike/character.hpp"
#include "moblike/errors.hpp"
#include "moblike/factor.hpp"
#include "moblike/sieve.hpp"

namespace moblike::analytic {

// |1 - p^(-s)| below this is treated as a pole of P.
inline constexpr double kPoleTolerance = 1e-12;
// |zeta(2s)| below this is treated as a zero of the denominator.
inline constexpr double kDenominatorTolerance = 1e-10;

// P(s) = prod_{p | q} (1 - p^(-s))^(-1). Poles at s = 2 pi i j / log p.
inline Complex p_factor(std::int64_t q, Complex s) {
  ComplexL result = 1;
  const ComplexL sl(s);
  for (auto p : prime_divisors(q)) {
    const ComplexL one_minus = 1.0L - std::exp(-sl * std::log(static_cast<long double>(p)));
    if (std::abs(one_minus) < kPoleTolerance) {
      throw pole_error("P(s) has a pole at s = " + std::to_string(s.real()) + " + " +
                       std::to_string(s.imag()) + "i (p = " + std::to_string(p) + ")");
    }
    result /= one_minus;
  }
  return Complex(result);
}

namespace detail {

inline Complex zeta_2s_checked(Complex s, const EvalOptions& opt, const char* what) {
  const Complex z2 = zeta(2.0 * s, opt);
  if (std::abs(z2) < kDenominatorTolerance) {
    throw pole_error(std::string(what) + ": zeta(2s) vanishes at s = " + std::to_string(s.real()) +
                     " + " + std::to_string(s.imag()) + "i");
  }
  return z2;
}

}  // namespace detail

// F(s) = L(s, chi) P(s) / zeta(2s), the Dirichlet series of f = mu^2 g_chi.
inline Complex f_series(const RealCharacter& chi, Complex s, const EvalOptions& opt = {}) {
  const Complex p = p_factor(chi.modulus(), s);
  const Complex z2 = detail::zeta_2s_checked(s, opt, "F(s)");
  return dirichlet_l(chi, s, opt) * p / z2;
}

struct TailSpec {
  std::int64_t q = 3;
  int char_id = 0;
  std::int64_t M = 1;
  Complex s{1.0, 0.0};
};

inline constexpr std::int64_t kMaxTailM = 100'000'000;

// Z_M(s) = P(s) / zeta(2s) - sum_{m <= M} h(m) m^(-s) for each M in `Ms`
// (ascending), sharing one pass of the h sieve.
inline std::vector<Complex> z_m_tails(std::int64_t q, Complex s, std::span<const std::int64_t> Ms,
                                      const EvalOptions& opt = {},
                                      const SieveOptions& sieve_opt = {}) {
  if (!(s.real() > 0.5)) throw range_error("z_m_tail: needs Re s > 1/2");
  if (Ms.empty()) return {};
  for (std::size_t i = 0; i < Ms.size(); ++i) {
    if (Ms[i] < 1 || Ms[i] > kMaxTailM || (i > 0 && Ms[i] <= Ms[i - 1])) {
      throw range_error("z_m_tail: truncation points must be ascending in [1, 1e8]");
    }
  }
  const Complex head = p_factor(q, s) / detail::zeta_2s_checked(s, opt, "Z_M(s)");
  const SegmentSieve sieve(FunctionSpec::h(q), Ms.back());
  std::vector<Complex> out;
  out.reserve(Ms.size());
  ComplexL partial = 0;
  const ComplexL sl(s);
  std::size_t next = 0;
  for_each_segment(sieve, 1, Ms.back(), sieve_opt, [&](const FunctionTable& t) {
    for (std::int64_t n = t.a; n < t.b; ++n) {
      const int v = t.at(n);
      if (v != 0) {
        partial += static_cast<long double>(v) *
                   std::exp(-sl * std::log(static_cast<long double>(n)));
      }
      while (next < Ms.size() && Ms[next] == n) {
        out.push_back(head - Complex(partial));
        ++next;
      }
    }
  });
  return out;
}

inline Complex z_m_tail(const TailSpec& spec, const EvalOptions& opt = {}) {
  if (spec.M < 1) throw range_error("z_m_tail: M must be >= 1");
  const std::int64_t m = spec.M;
  return z_m_tails(spec.q, spec.s, std::span(&m, 1), opt).front();
}

}  // namespace moblike::analytic
