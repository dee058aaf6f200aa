#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "moblike/analytic/gamma.hpp"
#include "moblike/character.hpp"
#include "moblike/errors.hpp"

namespace moblike::analytic {

// Knobs of the Euler-Maclaurin evaluators. Defaults give about 1e-12 relative
// accuracy for |t| <= 1e3; `extra_terms` lengthens the explicit head sum and
// is how convergence studies perturb the evaluation.
struct EvalOptions {
  int bernoulli_terms = 12;
  std::int64_t extra_terms = 0;
  double derivative_step = 1e-4;
};

namespace detail {

// B_{2k} / (2k)!, k = 1..12
inline constexpr std::array<long double, 12> kBernoulliOverFactorial = {
    1.0L / 6 / 2,
    -1.0L / 30 / 24,
    1.0L / 42 / 720,
    -1.0L / 30 / 40320,
    5.0L / 66 / 3628800,
    -691.0L / 2730 / 479001600,
    7.0L / 6 / 87178291200.0L,
    -3617.0L / 510 / 20922789888000.0L,
    43867.0L / 798 / 6402373705728000.0L,
    -174611.0L / 330 / 2432902008176640000.0L,
    854513.0L / 138 / 1124000727777607680000.0L,
    -236364091.0L / 2730 / 620448401733239439360000.0L,
};

inline std::int64_t head_length(ComplexL s, const EvalOptions& opt) {
  const long double t = std::fabs(s.imag());
  const long double neg = s.real() < 0 ? -s.real() : 0.0L;
  return 10 + static_cast<std::int64_t>(std::ceil(2.0L * t + neg)) + opt.extra_terms;
}

// Euler-Maclaurin pieces of sum_{n >= 0} (n q + a)^(-s) except the integral
// term: sum_{n < N} (n q + a)^(-s) + X^(-s) / 2 + Bernoulli corrections,
// X = N q + a.
inline ComplexL em_without_integral(ComplexL s, long double q, long double a, std::int64_t N,
                                    int bernoulli_terms) {
  ComplexL head = 0;
  for (std::int64_t n = 0; n < N; ++n) {
    const long double base = static_cast<long double>(n) * q + a;
    head += std::exp(-s * std::log(base));
  }
  const long double X = static_cast<long double>(N) * q + a;
  const ComplexL xs = std::exp(-s * std::log(X));
  ComplexL tail = xs / 2.0L;
  const long double r = q / X;
  ComplexL poch = s;  // s (s+1) ... (s + 2k - 2)
  long double rpow = r;
  for (int k = 1; k <= bernoulli_terms && k <= 12; ++k) {
    tail += kBernoulliOverFactorial[k - 1] * poch * rpow * xs;
    poch *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k));
    rpow *= r * r;
  }
  return head + tail;
}

// (e^z - 1) / z
inline ComplexL expm1_over(ComplexL z) {
  if (std::abs(z) < 1e-3L) {
    return 1.0L + z / 2.0L + z * z / 6.0L + z * z * z / 24.0L + z * z * z * z / 120.0L;
  }
  return (std::exp(z) - 1.0L) / z;
}

inline ComplexL zeta_l(ComplexL s, const EvalOptions& opt) {
  if (s == ComplexL(1.0L, 0.0L)) throw pole_error("zeta: pole at s = 1");
  const auto N = head_length(s, opt);
  const long double X = static_cast<long double>(N) + 1.0L;
  const ComplexL integral = std::exp((1.0L - s) * std::log(X)) / (s - 1.0L);
  return em_without_integral(s, 1.0L, 1.0L, N, opt.bernoulli_terms) + integral;
}

inline ComplexL dirichlet_l_l(const RealCharacter& chi, ComplexL s, const EvalOptions& opt) {
  const auto q = chi.modulus();
  const auto N = head_length(s, opt);
  const auto ql = static_cast<long double>(q);
  const auto table = chi.table();
  ComplexL total = 0;
  for (std::int64_t a = 1; a < q; ++a) {
    const int c = table[a];
    if (c == 0) continue;
    const auto al = static_cast<long double>(a);
    // Integral term X^(1-s) / (q (s-1)); the 1/(s-1) parts cancel across a
    // because the character sums to zero, leaving -log X * E((1-s) log X) / q.
    const long double logx = std::log(static_cast<long double>(N) * ql + al);
    const ComplexL integral = -logx * expm1_over((1.0L - s) * logx) / ql;
    total += static_cast<long double>(c) *
             (em_without_integral(s, ql, al, N, opt.bernoulli_terms) + integral);
  }
  return total;
}

}  // namespace detail

// Riemann zeta by Euler-Maclaurin summation. Throws pole_error at s = 1.
inline Complex zeta(Complex s, const EvalOptions& opt = {}) {
  return Complex(detail::zeta_l(ComplexL(s), opt));
}

// Hurwitz zeta(s, a) = sum_{n >= 0} (n + a)^(-s), a > 0.
inline Complex hurwitz_zeta(Complex s, double a, const EvalOptions& opt = {}) {
  if (s == Complex(1.0, 0.0)) throw pole_error("hurwitz_zeta: pole at s = 1");
  if (!(a > 0)) throw range_error("hurwitz_zeta: a must be positive");
  const ComplexL sl(s);
  const auto N = detail::head_length(sl, opt);
  const long double X = static_cast<long double>(N) + a;
  const ComplexL integral = std::exp((1.0L - sl) * std::log(X)) / (sl - 1.0L);
  return Complex(detail::em_without_integral(sl, 1.0L, a, N, opt.bernoulli_terms) + integral);
}

// L(s, chi) for a real non-principal character; entire, so valid at s = 1.
inline Complex dirichlet_l(const RealCharacter& chi, Complex s, const EvalOptions& opt = {}) {
  return Complex(detail::dirichlet_l_l(chi, ComplexL(s), opt));
}

// Same function through q^(-s) sum_a chi(a) zeta(s, a/q); undefined at s = 1.
inline Complex dirichlet_l_hurwitz(const RealCharacter& chi, Complex s,
                                   const EvalOptions& opt = {}) {
  const auto q = chi.modulus();
  Complex total = 0;
  for (std::int64_t a = 1; a < q; ++a) {
    const int c = chi(a);
    if (c != 0) total += static_cast<double>(c) * hurwitz_zeta(s, static_cast<double>(a) / q, opt);
  }
  return std::pow(static_cast<double>(q), -s) * total;
}

// zeta'(s) by central differences with one Richardson step:
// (4 D(h/2) - D(h)) / 3, D(h) = (zeta(s+h) - zeta(s-h)) / 2h.
inline Complex zeta_prime(Complex s, const EvalOptions& opt = {}) {
  const long double h = opt.derivative_step;
  const ComplexL sl(s);
  if (std::abs(sl - 1.0L) <= h) throw pole_error("zeta_prime: too close to the pole at s = 1");
  auto central = [&](long double step) {
    return (detail::zeta_l(sl + step, opt) - detail::zeta_l(sl - step, opt)) / (2.0L * step);
  };
  return Complex((4.0L * central(h / 2) - central(h)) / 3.0L);
}

namespace detail {

// log sin z without overflow for large |Im z|.
inline ComplexL log_sin(ComplexL z) {
  const ComplexL i(0.0L, 1.0L);
  if (z.imag() > 0) return -i * z + std::log((std::exp(2.0L * i * z) - 1.0L) / (2.0L * i));
  return i * z + std::log((1.0L - std::exp(-2.0L * i * z)) / (2.0L * i));
}

}  // namespace detail

// chi(s) of the functional equation zeta(s) = chi(s) zeta(1 - s), assembled
// in log space so large |t| neither overflows sin nor underflows Gamma.
inline Complex functional_factor(Complex s) {
  const long double pi = std::numbers::pi_v<long double>;
  const ComplexL sl(s);
  const ComplexL log_chi = sl * std::log(2.0L) + (sl - 1.0L) * std::log(pi) +
                           detail::log_sin(pi * sl / 2.0L) + log_gamma(1.0L - sl);
  return Complex(std::exp(log_chi));
}

}  // namespace moblike::analytic
