#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace moblike::analytic {

using Complex = std::complex<double>;
using ComplexL = std::complex<long double>;

namespace detail {

// Lanczos approximation, g = 7, nine terms (the coefficient set published
// with Numerical Recipes / Godfrey). Relative error about 1e-15 on Re z >= 1/2.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace detail

// Gamma(z) for complex z off the non-positive integers.
inline Complex gamma(Complex z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return pi / (std::sin(pi * z) * gamma(1.0 - z));
  }
  z -= 1.0;
  Complex acc = detail::kLanczos[0];
  for (std::size_t i = 1; i < detail::kLanczos.size(); ++i) {
    acc += detail::kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + detail::kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

// Principal branch of log Gamma(z) for Re z > 0: the analytic continuation
// of the real log Gamma, continuous in Im z (unlike log(gamma(z))). Stirling
// series after shifting |z| large.
inline ComplexL log_gamma(ComplexL z) {
  static constexpr long double kB[] = {1.0L / 6,    -1.0L / 30, 1.0L / 42,
                                       -1.0L / 30,  5.0L / 66,  -691.0L / 2730,
                                       7.0L / 6,    -3617.0L / 510};
  ComplexL shift = 0;
  while (std::abs(z) < 20.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  const long double half_log_2pi = 0.5L * std::log(2.0L * std::numbers::pi_v<long double>);
  ComplexL result = (z - 0.5L) * std::log(z) - z + half_log_2pi;
  const ComplexL inv = 1.0L / z;
  const ComplexL inv2 = inv * inv;
  ComplexL power = inv;
  for (int k = 1; k <= 8; ++k) {
    result += kB[k - 1] / static_cast<long double>((2 * k) * (2 * k - 1)) * power;
    power *= inv2;
  }
  return result - shift;
}

}  // namespace moblike::analytic
