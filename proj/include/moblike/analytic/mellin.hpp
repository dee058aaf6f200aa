#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "moblike/analytic/series.hpp"
#include "moblike/character.hpp"
#include "moblike/errors.hpp"
#include "moblike/sieve.hpp"

namespace moblike::analytic {

struct MellinCheck {
  Complex f_value{};   // F(s) from the analytic evaluators
  Complex integral{};  // s * int_1^X M_f(x) x^(-s-1) dx, exact for the step function
  double residual = 0.0;
  // Tail bound |s| C X^(1/4 + eps - sigma) / (sigma - 1/4 - eps), with C the
  // largest |M_f(n)| / n^(1/4 + eps) seen on [1, max(X - 1, 1)].
  double monitored_c = 1.0;
  double tail_bound = 0.0;
  // tail_bound plus the evaluators' relative accuracy times |F(s)|.
  double bound = 0.0;
};

inline constexpr std::int64_t kMaxMellinX = 100'000'000;
inline constexpr double kEvaluatorRelativeError = 1e-10;

// Compares F(s) with the partial Mellin integral of M_f up to X. On [n, n+1)
// M_f is constant, so s * int x^(-s-1) dx = n^(-s) - (n+1)^(-s) exactly.
inline MellinCheck mellin_check(const RealCharacter& chi, Complex s, std::int64_t X,
                                double eps = 0.05, const EvalOptions& opt = {},
                                const SieveOptions& sieve_opt = {}) {
  if (!(s.real() >= 1.25)) throw range_error("mellin_check: needs Re s >= 1.25");
  if (X < 1 || X > kMaxMellinX) throw range_error("mellin_check: X outside [1, 1e8]");
  MellinCheck out;
  out.f_value = f_series(chi, s, opt);
  const double exponent = 0.25 + eps;
  ComplexL acc = 0;
  if (X > 1) {
    const SegmentSieve sieve(FunctionSpec::f(chi), X - 1);
    const ComplexL sl(s);
    std::int64_t running = 0;
    ComplexL pow_n = 1;  // 1^(-s)
    for_each_segment(sieve, 1, X - 1, sieve_opt, [&](const FunctionTable& t) {
      for (std::int64_t n = t.a; n < t.b; ++n) {
        running += t.at(n);
        const ComplexL pow_next = std::exp(-sl * std::log(static_cast<long double>(n + 1)));
        acc += static_cast<long double>(running) * (pow_n - pow_next);
        pow_n = pow_next;
        const double c = std::abs(static_cast<double>(running)) / std::pow(static_cast<double>(n), exponent);
        out.monitored_c = std::max(out.monitored_c, c);
      }
    });
  }
  out.integral = Complex(acc);
  out.residual = std::abs(out.f_value - out.integral);
  const double sigma = s.real();
  out.tail_bound = std::abs(s) * out.monitored_c *
                   std::pow(static_cast<double>(X), exponent - sigma) / (sigma - exponent);
  out.bound = out.tail_bound + kEvaluatorRelativeError * std::abs(out.f_value);
  return out;
}

}  // namespace moblike::analytic
