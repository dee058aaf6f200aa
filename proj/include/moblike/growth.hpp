#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include "moblike/errors.hpp"
#include "moblike/summatory.hpp"

namespace moblike {

// |M(x)| ~ C x^exponent over a fitted window.
struct GrowthEnvelope {
  double exponent = 0.0;  // clamped to [0, 1]
  double slope = 0.0;     // raw least-squares slope
  double constant = 1.0;
  std::optional<int> log_power;
  std::optional<double> vk_c;
  std::size_t points = 0;
  double omega_stat = 0.0;  // sup over window checkpoints of |M(x)| / x^(1/4)
};

struct FitWindow {
  std::int64_t lo = 1;
  std::int64_t hi = std::numeric_limits<std::int64_t>::max();
};

// The exp(-c (log y)^(3/5) / (log log y)^(1/5)) saving of the zero-free
// region; defined for y > e.
inline double vk_saving(double y, double c) {
  const double ly = std::log(y);
  const double lly = std::log(ly);
  if (!(lly > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::exp(-c * std::pow(ly, 0.6) / std::pow(lly, 0.2));
}

// OLS of log|M(x)| on log x over checkpoints in the window with |M(x)| >= 1.
inline GrowthEnvelope growth_fit(const SummatorySeries& series, FitWindow window = {}) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  GrowthEnvelope env;
  for (std::size_t i = 0; i < series.checkpoints.size(); ++i) {
    const auto x = series.checkpoints[i];
    if (x < window.lo || x > window.hi) continue;
    const auto m = std::llabs(series.sums[i]);
    env.omega_stat = std::max(env.omega_stat, static_cast<double>(m) / std::pow(x, 0.25));
    if (m < 1) continue;
    const double lx = std::log(static_cast<double>(x));
    const double ly = std::log(static_cast<double>(m));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 10) {
    throw insufficient_data("growth_fit: " + std::to_string(n) +
                            " usable checkpoints, need at least 10");
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  if (!(denom > 0)) throw insufficient_data("growth_fit: checkpoints do not span a range");
  env.slope = (dn * sxy - sx * sy) / denom;
  env.exponent = std::clamp(env.slope, 0.0, 1.0);
  env.constant = std::exp((sy - env.slope * sx) / dn);
  env.points = n;
  return env;
}

}  // namespace moblike
