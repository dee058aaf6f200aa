#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "moblike/analytic/gamma.hpp"
#include "moblike/analytic/series.hpp"
#include "moblike/analytic/zeta.hpp"
#include "moblike/character.hpp"
#include "moblike/errors.hpp"

namespace moblike::analytic {

// Riemann-Siegel theta: arg Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
inline long double hardy_theta(long double t) {
  const ComplexL z(0.25L, t / 2.0L);
  return log_gamma(z).imag() - t / 2.0L * std::log(std::numbers::pi_v<long double>);
}

// Z(t) = e^(i theta(t)) zeta(1/2 + it), real for real t.
inline long double hardy_z(long double t, const EvalOptions& opt = {}) {
  const ComplexL rot = std::polar(1.0L, hardy_theta(t));
  return (rot * detail::zeta_l(ComplexL(0.5L, t), opt)).real();
}

// Main term of the zero counting function, theta(T)/pi + 1.
inline double zero_count_estimate(double T) {
  if (T <= 0) return 0.0;
  return static_cast<double>(hardy_theta(T) / std::numbers::pi_v<long double>) + 1.0;
}

struct ZeroSearchOptions {
  double zero_tolerance = 1e-8;     // |zeta(1/2 + i gamma)| at the converged bracket
  double simple_threshold = 1e-4;   // simple iff |zeta'(1/2 + i gamma)| exceeds this
  double bracket_width = 1e-12;     // bisection stops below this width
  unsigned threads = 1;
  EvalOptions eval{};
};

struct CriticalZero {
  double gamma = 0.0;  // zeta(1/2 + i gamma) = 0; rho = 1/4 + i gamma / 2 for zeta(2s)
  bool simple = false;
  double zeta_abs = 0.0;
  Complex zeta_prime{};
};

struct ZeroScan {
  std::vector<CriticalZero> zeros;
  std::vector<std::pair<double, double>> unresolved;  // brackets that failed the tolerance
  double expected_count = 0.0;  // theta(2T)/pi + 1
};

namespace detail {

// Sign changes of Z on [lo, hi], plus pairs hidden between samples: where |Z|
// has a local minimum without a sign change, a golden-section search looks
// for a sign flip near the minimum.
inline std::vector<std::pair<long double, long double>> bracket_sign_changes(
    long double lo, long double hi, const EvalOptions& opt) {
  std::vector<std::pair<long double, long double>> out;
  auto step_at = [](long double t) {
    const long double spacing =
        t > 7.0L ? 2.0L * std::numbers::pi_v<long double> / std::log(t / (2.0L * std::numbers::pi_v<long double>))
                 : 10.0L;
    return std::min(0.25L, spacing / 8.0L);
  };
  std::vector<long double> ts{lo};
  while (ts.back() < hi) ts.push_back(std::min(hi, ts.back() + step_at(ts.back())));
  std::vector<long double> zs;
  zs.reserve(ts.size());
  for (auto t : ts) zs.push_back(hardy_z(t, opt));

  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if ((zs[i] < 0) != (zs[i + 1] < 0)) {
      out.emplace_back(ts[i], ts[i + 1]);
      continue;
    }
    if (i + 2 >= ts.size() || (zs[i + 1] < 0) != (zs[i + 2] < 0)) continue;
    const long double a = std::fabs(zs[i]), b = std::fabs(zs[i + 1]), c = std::fabs(zs[i + 2]);
    if (!(b < a && b < c)) continue;
    // golden-section minimisation of |Z| on [t_i, t_{i+2}]
    long double x0 = ts[i], x3 = ts[i + 2];
    const long double phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double x1 = x3 - phi * (x3 - x0), x2 = x0 + phi * (x3 - x0);
    long double f1 = hardy_z(x1, opt), f2 = hardy_z(x2, opt);
    const bool positive = zs[i + 1] > 0;
    bool flipped = false;
    for (int it = 0; it < 60 && !flipped; ++it) {
      if ((f1 > 0) != positive) {
        out.emplace_back(ts[i], x1);
        out.emplace_back(x1, ts[i + 2]);
        flipped = true;
      } else if ((f2 > 0) != positive) {
        out.emplace_back(ts[i], x2);
        out.emplace_back(x2, ts[i + 2]);
        flipped = true;
      } else if (std::fabs(f1) < std::fabs(f2)) {
        x3 = x2;
        x2 = x1;
        f2 = f1;
        x1 = x3 - phi * (x3 - x0);
        f1 = hardy_z(x1, opt);
      } else {
        x0 = x1;
        x1 = x2;
        f1 = f2;
        x2 = x0 + phi * (x3 - x0);
        f2 = hardy_z(x2, opt);
      }
    }
    if (flipped) ++i;  // both sign changes of the hidden pair are recorded
  }
  return out;
}

inline long double bisect_hardy_z(long double lo, long double hi, long double width,
                                  const EvalOptions& opt) {
  long double zlo = hardy_z(lo, opt);
  while (hi - lo > width) {
    const long double mid = (lo + hi) / 2.0L;
    if (mid <= lo || mid >= hi) break;
    const long double zm = hardy_z(mid, opt);
    if (zm == 0.0L) return mid;
    if ((zm < 0) == (zlo < 0)) {
      lo = mid;
      zlo = zm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0L;
}

}  // namespace detail

// Zeros 1/2 + i gamma of zeta with 0 < gamma <= 2T, i.e. the zeros
// rho = 1/4 + i gamma/2 of zeta(2s) on the segment 0 < Im s <= T.
inline ZeroScan find_critical_zeros(double T, const ZeroSearchOptions& opt = {}) {
  ZeroScan scan;
  const long double top = 2.0L * static_cast<long double>(T);
  scan.expected_count = T > 0 ? zero_count_estimate(2.0 * T) : 0.0;
  // no zero lies below gamma = 14
  if (top <= 14.0L) return scan;
  const long double start = 1.0L;

  const unsigned parts = std::max(1u, opt.threads);
  std::vector<std::vector<std::pair<long double, long double>>> pieces(parts);
  std::vector<std::exception_ptr> failures(parts);
  auto work = [&](unsigned k) {
    try {
      const long double a = start + (top - start) * k / parts;
      const long double b = start + (top - start) * (k + 1) / parts;
      pieces[k] = detail::bracket_sign_changes(a, b, opt.eval);
    } catch (...) {
      failures[k] = std::current_exception();
    }
  };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < parts; ++k) pool.emplace_back(work, k);
  }
  for (auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }

  for (const auto& piece : pieces) {
    for (const auto& [lo, hi] : piece) {
      const long double g = detail::bisect_hardy_z(lo, hi, opt.bracket_width, opt.eval);
      CriticalZero z;
      z.gamma = static_cast<double>(g);
      z.zeta_abs = static_cast<double>(std::abs(detail::zeta_l(ComplexL(0.5L, g), opt.eval)));
      if (z.zeta_abs >= opt.zero_tolerance) {
        scan.unresolved.emplace_back(static_cast<double>(lo), static_cast<double>(hi));
        continue;
      }
      z.zeta_prime = zeta_prime(Complex(0.5, z.gamma), opt.eval);
      z.simple = std::abs(z.zeta_prime) > opt.simple_threshold;
      scan.zeros.push_back(z);
    }
  }
  return scan;
}

// A zero of zeta(2s) on Re s = 1/4 together with the data that decide whether
// it is a pole of F(s) = L(s, chi) P(s) / zeta(2s).
struct ZeroRecord {
  double gamma = 0.0;
  bool simple = false;
  Complex l_value{};     // L(rho, chi)
  Complex p_value{};     // P(rho)
  Complex zeta_prime{};  // zeta'(2 rho)
  double omega_constant = 0.0;
  bool noncancelled = false;

  Complex rho() const { return {0.25, gamma / 2.0}; }
};

// |L(rho, chi) P(rho) / (4 rho zeta'(2 rho))| from the stored fields.
inline double omega_constant(const ZeroRecord& r) {
  if (!r.simple || !r.noncancelled) {
    throw cancelled_zero("omega_constant: zero at gamma = " + std::to_string(r.gamma) +
                         " is not a simple non-cancelled zero");
  }
  return std::abs(r.l_value * r.p_value / (4.0 * r.rho() * r.zeta_prime));
}

inline ZeroRecord make_zero_record(const RealCharacter& chi, const CriticalZero& z,
                                   double threshold, const EvalOptions& eval = {}) {
  ZeroRecord r;
  r.gamma = z.gamma;
  r.simple = z.simple;
  r.zeta_prime = z.zeta_prime;
  r.l_value = dirichlet_l(chi, r.rho(), eval);
  r.p_value = p_factor(chi.modulus(), r.rho());
  r.noncancelled = std::abs(r.l_value) > threshold;
  r.omega_constant = std::abs(r.l_value * r.p_value / (4.0 * r.rho() * r.zeta_prime));
  return r;
}

// One record per simple zero with gamma <= 2T.
inline std::vector<ZeroRecord> noncancelled_zeros(const RealCharacter& chi, double T,
                                                  double threshold = 1e-3,
                                                  const ZeroSearchOptions& opt = {}) {
  if (!(threshold > 0)) throw range_error("noncancelled_zeros: threshold must be positive");
  std::vector<ZeroRecord> out;
  for (const auto& z : find_critical_zeros(T, opt).zeros) {
    if (!z.simple) continue;
    out.push_back(make_zero_record(chi, z, threshold, opt.eval));
  }
  return out;
}

}  // namespace moblike::analytic
