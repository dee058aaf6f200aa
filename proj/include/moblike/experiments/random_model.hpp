#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

#include "moblike/errors.hpp"
#include "moblike/experiments/philox.hpp"

namespace moblike::experiments {

inline constexpr std::int64_t kMaxRandomX = 10'000'000;
inline constexpr int kMaxTrials = 10'000;

// Smallest prime factor of every n <= limit (spf[0] = spf[1] = 0).
inline std::vector<std::uint32_t> smallest_prime_factors(std::int64_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (auto p : primes) {
      if (p > spf[i] || i * p > limit) break;
      spf[i * p] = p;
    }
  }
  return spf;
}

// One sample of the random multiplicative model on [1, xmax]: independent
// fair signs at primes, extended multiplicatively to squarefree n, zero
// elsewhere. values[n] for 1 <= n <= xmax; values[0] unused.
inline std::vector<std::int8_t> random_f_values(std::span<const std::uint32_t> spf,
                                                std::uint64_t seed, std::uint32_t trial,
                                                std::int64_t xmax, bool all_ones = false) {
  std::vector<std::int8_t> f(static_cast<std::size_t>(xmax) + 1, 0);
  if (xmax >= 1) f[1] = 1;
  for (std::int64_t n = 2; n <= xmax; ++n) {
    const std::int64_t p = spf[n];
    if (p == n) {
      f[n] = static_cast<std::int8_t>(all_ones ? 1 : prime_sign(seed, trial, static_cast<std::uint64_t>(p)));
      continue;
    }
    const std::int64_t rest = n / p;
    f[n] = (rest % p == 0) ? 0 : static_cast<std::int8_t>(f[p] * f[rest]);
  }
  return f;
}

struct RandomQuantiles {
  std::int64_t x = 0;
  double q10 = 0, median = 0, q90 = 0;  // of |M_f(x)| / sqrt(x) across trials
};

struct RandomModelRun {
  std::uint64_t seed = 0;
  std::int64_t xmax = 1;
  int trials = 1;
  std::vector<std::int64_t> checkpoints;
  std::vector<std::vector<std::int64_t>> sums;  // sums[trial][checkpoint]
  std::vector<RandomQuantiles> summary;
};

// Linear-interpolation quantile of a sorted sample.
inline double quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline RandomModelRun run_random_model(std::uint64_t seed, std::int64_t xmax, int trials,
                                       std::span<const std::int64_t> checkpoints,
                                       bool all_ones = false, unsigned threads = 1) {
  if (xmax < 1 || xmax > kMaxRandomX) throw capacity_error("random model: x max outside [1, 1e7]");
  if (trials < 1 || trials > kMaxTrials) throw capacity_error("random model: trials outside [1, 1e4]");
  RandomModelRun run;
  run.seed = seed;
  run.xmax = xmax;
  run.trials = trials;
  for (auto x : checkpoints) {
    if (x >= 1 && x <= xmax) run.checkpoints.push_back(x);
  }
  std::sort(run.checkpoints.begin(), run.checkpoints.end());
  run.checkpoints.erase(std::unique(run.checkpoints.begin(), run.checkpoints.end()),
                        run.checkpoints.end());
  const auto spf = smallest_prime_factors(xmax);
  run.sums.assign(static_cast<std::size_t>(trials), {});

  auto one_trial = [&](int trial) {
    const auto f = random_f_values(spf, seed, static_cast<std::uint32_t>(trial), xmax, all_ones);
    std::vector<std::int64_t> sums;
    std::int64_t running = 0;
    std::size_t next = 0;
    for (std::int64_t n = 1; n <= xmax && next < run.checkpoints.size(); ++n) {
      running += f[n];
      if (run.checkpoints[next] == n) {
        sums.push_back(running);
        ++next;
      }
    }
    run.sums[static_cast<std::size_t>(trial)] = std::move(sums);
  };

  const unsigned workers = std::max(1u, threads);
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) one_trial(t);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(workers)) one_trial(t);
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : failures) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t c = 0; c < run.checkpoints.size(); ++c) {
    const double root = std::sqrt(static_cast<double>(run.checkpoints[c]));
    std::vector<double> ratios;
    for (const auto& s : run.sums) ratios.push_back(std::abs(static_cast<double>(s[c])) / root);
    std::sort(ratios.begin(), ratios.end());
    run.summary.push_back({run.checkpoints[c], quantile(ratios, 0.1), quantile(ratios, 0.5),
                           quantile(ratios, 0.9)});
  }
  return run;
}

}  // namespace moblike::experiments
