#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "moblike/analytic/mellin.hpp"
#include "moblike/analytic/series.hpp"
#include "moblike/analytic/zeros.hpp"
#include "moblike/analytic/zeta.hpp"
#include "moblike/character.hpp"
#include "moblike/errors.hpp"
#include "moblike/experiments/config.hpp"
#include "moblike/experiments/csv.hpp"
#include "moblike/experiments/random_model.hpp"
#include "moblike/growth.hpp"
#include "moblike/hyperbola.hpp"
#include "moblike/pointwise.hpp"
#include "moblike/summatory.hpp"

namespace moblike::experiments {

using analytic::Complex;
using analytic::ComplexL;

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCapacity = 3;

inline RealCharacter resolve_character(const ExperimentConfig& cfg) {
  const auto chars = enumerate_real_characters(cfg.q);
  if (chars.empty()) {
    throw config_error("q = " + std::to_string(cfg.q) + " has no real non-principal character");
  }
  if (cfg.char_index < 0 || static_cast<std::size_t>(cfg.char_index) >= chars.size()) {
    throw config_error("char " + std::to_string(cfg.char_index) + " out of range: q = " +
                       std::to_string(cfg.q) + " has " + std::to_string(chars.size()) +
                       " real non-principal characters");
  }
  return chars[static_cast<std::size_t>(cfg.char_index)];
}

// Creates the output directory and records the resolved config.
inline void prepare_output(const ExperimentConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(cfg.out);
  std::ofstream meta(cfg.out / "run.meta");
  if (!meta) throw error("cannot write " + (cfg.out / "run.meta").string());
  meta << cfg.to_ini();
}

inline std::vector<std::int64_t> config_checkpoints(const ExperimentConfig& cfg) {
  return checkpoint_grid(cfg.max, cfg.per_decade, static_cast<double>(cfg.start), cfg.extras);
}

inline analytic::ZeroSearchOptions zero_options(const ExperimentConfig& cfg) {
  analytic::ZeroSearchOptions o;
  o.zero_tolerance = cfg.zero_tolerance;
  o.simple_threshold = cfg.simple_threshold;
  o.threads = cfg.threads;
  return o;
}

// ---------------------------------------------------------------- growth

struct GrowthReport {
  SummatorySeries direct;
  std::optional<SummatorySeries> hyperbola;  // checkpoints up to the hyperbola cap
  std::optional<GrowthEnvelope> fit;
  double max_ratio_half_1e4 = 0.0;  // max |M_f(x)| / sqrt(x) over checkpoints x >= 1e4
};

inline GrowthReport compute_growth(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto chi = resolve_character(cfg);
  const auto cps = config_checkpoints(cfg);
  const auto sopt = cfg.sieve_options();
  GrowthReport r;
  r.direct = summatory_direct(FunctionSpec::f(chi, cfg.char_index), cps, sopt);
  if (cfg.split == SplitPolicy::automatic) {
    std::vector<HyperbolaSplit> splits;
    const auto cap = std::min(cfg.hyperbola_max, kMaxHyperbolaX);
    for (auto x : cps) {
      if (x <= cap) splits.push_back(default_split(x));
    }
    if (!splits.empty()) r.hyperbola = hyperbola_series(chi, cfg.char_index, splits, sopt);
  }
  try {
    r.fit = growth_fit(r.direct);
    r.fit->vk_c = cfg.vk_c;
  } catch (const insufficient_data&) {
  }
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] < 10'000) continue;
    r.max_ratio_half_1e4 = std::max(
        r.max_ratio_half_1e4, std::abs(static_cast<double>(r.direct.sums[i])) / std::sqrt(static_cast<double>(cps[i])));
  }
  return r;
}

// Checkpoints where the two methods give different sums.
inline std::vector<std::int64_t> method_mismatches(const GrowthReport& r) {
  std::vector<std::int64_t> bad;
  if (!r.hyperbola) return bad;
  for (std::size_t i = 0; i < r.hyperbola->checkpoints.size(); ++i) {
    const auto x = r.hyperbola->checkpoints[i];
    if (r.direct.at(x) != r.hyperbola->sums[i]) bad.push_back(x);
  }
  return bad;
}

// sum_{p <= x} |1 - f(p) chi(p)|: f(p) chi(p) = chi(p)^2 = 1 unless p | q,
// where chi(p) = 0, so the sum counts the primes p | q up to x.
inline std::int64_t condition_diagnostic(std::int64_t q, std::int64_t x) {
  std::int64_t c = 0;
  for (auto p : prime_divisors(q)) c += p <= x ? 1 : 0;
  return c;
}

inline int write_growth(const ExperimentConfig& cfg, const GrowthReport& r) {
  prepare_output(cfg);
  const auto bad = method_mismatches(r);
  {
    CsvWriter w(cfg.out / "growth.csv",
                {"x", "mf", "mf_hyperbola", "ratio_quarter", "ratio_third", "ratio_half", "phi",
                 "ratio_half_phi", "condition"});
    for (std::size_t i = 0; i < r.direct.checkpoints.size(); ++i) {
      const auto x = r.direct.checkpoints[i];
      const auto m = r.direct.sums[i];
      const double xd = static_cast<double>(x), md = static_cast<double>(m);
      std::string hyp;
      if (r.hyperbola) {
        auto& hc = r.hyperbola->checkpoints;
        auto it = std::lower_bound(hc.begin(), hc.end(), x);
        if (it != hc.end() && *it == x) hyp = fmt(r.hyperbola->sums[static_cast<std::size_t>(it - hc.begin())]);
      }
      const double phi = vk_saving(xd, cfg.vk_c);
      w.row(x, m, std::string_view(hyp), md / std::pow(xd, 0.25), md / std::cbrt(xd),
            md / std::sqrt(xd), phi, md / (std::sqrt(xd) * phi), condition_diagnostic(cfg.q, x));
    }
  }
  {
    CsvWriter w(cfg.out / "growth_summary.csv",
                {"q", "char_id", "xmax", "points", "exponent", "slope", "constant", "omega_stat",
                 "max_ratio_half_1e4", "hyperbola_checked", "mismatches"});
    const double nan = std::nan("");
    const auto& f = r.fit;
    w.row(cfg.q, cfg.char_index, cfg.max, static_cast<std::int64_t>(f ? f->points : 0),
          f ? f->exponent : nan, f ? f->slope : nan, f ? f->constant : nan,
          f ? f->omega_stat : nan, r.max_ratio_half_1e4,
          static_cast<std::int64_t>(r.hyperbola ? r.hyperbola->checkpoints.size() : 0),
          static_cast<std::int64_t>(bad.size()));
  }
  return bad.empty() ? kExitOk : kExitCheckFailed;
}

inline int run_growth(const ExperimentConfig& cfg) { return write_growth(cfg, compute_growth(cfg)); }

// ---------------------------------------------------------------- zeros / omega

inline void write_zero_records(const std::filesystem::path& path, const ExperimentConfig& cfg,
                               const std::vector<analytic::ZeroRecord>& records) {
  CsvWriter w(path, {"q", "char_id", "gamma", "simple", "l_re", "l_im", "p_re", "p_im",
                     "zeta_prime_re", "zeta_prime_im", "omega_constant", "noncancelled"});
  for (const auto& z : records) {
    w.row(cfg.q, cfg.char_index, z.gamma, z.simple, z.l_value.real(), z.l_value.imag(),
          z.p_value.real(), z.p_value.imag(), z.zeta_prime.real(), z.zeta_prime.imag(),
          z.omega_constant, z.noncancelled);
  }
}

struct OmegaReport {
  std::vector<analytic::ZeroRecord> records;
  NormalizedSup empirical;
  std::optional<analytic::ZeroRecord> first;  // first non-cancelled simple zero

  bool shortfall() const { return first && empirical.value < first->omega_constant; }
};

inline OmegaReport compute_omega(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto chi = resolve_character(cfg);
  OmegaReport r;
  r.records = analytic::noncancelled_zeros(chi, cfg.T, cfg.threshold, zero_options(cfg));
  for (const auto& z : r.records) {
    if (z.noncancelled) {
      r.first = z;
      break;
    }
  }
  r.empirical = sup_normalized(FunctionSpec::f(chi, cfg.char_index), cfg.max, 0.25, cfg.sieve_options());
  return r;
}

inline int write_omega(const ExperimentConfig& cfg, const OmegaReport& r) {
  prepare_output(cfg);
  write_zero_records(cfg.out / "omega_zeros.csv", cfg, r.records);
  CsvWriter w(cfg.out / "omega_summary.csv",
              {"q", "char_id", "X", "empirical_sup", "argmax", "sum_at_argmax", "first_gamma",
               "omega_constant", "status"});
  const double nan = std::nan("");
  std::string_view status = !r.first ? "no_noncancelled_zero" : r.shortfall() ? "shortfall" : "ok";
  w.row(cfg.q, cfg.char_index, cfg.max, r.empirical.value, r.empirical.argmax,
        r.empirical.sum_at_argmax, r.first ? r.first->gamma : nan,
        r.first ? r.first->omega_constant : nan, status);
  return r.first ? kExitOk : kExitCheckFailed;
}

inline int run_omega(const ExperimentConfig& cfg) { return write_omega(cfg, compute_omega(cfg)); }

inline int run_zeros(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto chi = resolve_character(cfg);
  const auto zopt = zero_options(cfg);
  const auto scan = analytic::find_critical_zeros(cfg.T, zopt);
  std::vector<analytic::ZeroRecord> records;
  for (const auto& z : scan.zeros) records.push_back(analytic::make_zero_record(chi, z, cfg.threshold, zopt.eval));
  prepare_output(cfg);
  write_zero_records(cfg.out / "zeros.csv", cfg, records);
  CsvWriter w(cfg.out / "zeros_summary.csv", {"T", "found", "simple", "expected", "unresolved"});
  const auto simple = std::count_if(scan.zeros.begin(), scan.zeros.end(), [](auto& z) { return z.simple; });
  w.row(cfg.T, static_cast<std::int64_t>(scan.zeros.size()), static_cast<std::int64_t>(simple),
        scan.expected_count, static_cast<std::int64_t>(scan.unresolved.size()));
  return kExitOk;
}

// ---------------------------------------------------------------- tail decay

struct TailDecay {
  double sigma = 0.0;
  std::vector<std::int64_t> Ms;
  std::vector<Complex> values;
  double mean_log2_ratio = 0.0;
  double expected = 0.0;  // 1/4 - sigma
  bool within = false;
};

inline std::vector<TailDecay> compute_tail(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<TailDecay> out;
  for (auto sigma : cfg.sigmas) {
    TailDecay d;
    d.sigma = sigma;
    for (int k = cfg.m_min_exp; k <= cfg.m_max_exp; ++k) d.Ms.push_back(std::int64_t{1} << k);
    d.values = analytic::z_m_tails(cfg.q, {sigma, cfg.t}, d.Ms, {}, cfg.sieve_options());
    double acc = 0.0;
    for (std::size_t i = 1; i < d.values.size(); ++i) {
      acc += std::log2(std::abs(d.values[i]) / std::abs(d.values[i - 1]));
    }
    d.mean_log2_ratio = acc / static_cast<double>(d.values.size() - 1);
    d.expected = 0.25 - sigma;
    d.within = std::abs(d.mean_log2_ratio - d.expected) <= cfg.decay_tolerance;
    out.push_back(std::move(d));
  }
  return out;
}

inline int run_tail(const ExperimentConfig& cfg) {
  const auto decays = compute_tail(cfg);
  prepare_output(cfg);
  {
    CsvWriter w(cfg.out / "tail.csv", {"q", "sigma", "t", "M", "re", "im", "abs"});
    for (const auto& d : decays) {
      for (std::size_t i = 0; i < d.Ms.size(); ++i) {
        w.row(cfg.q, d.sigma, cfg.t, d.Ms[i], d.values[i].real(), d.values[i].imag(), std::abs(d.values[i]));
      }
    }
  }
  bool ok = true;
  CsvWriter w(cfg.out / "tail_summary.csv",
              {"q", "sigma", "t", "mean_log2_ratio", "expected", "tolerance", "within"});
  for (const auto& d : decays) {
    w.row(cfg.q, d.sigma, cfg.t, d.mean_log2_ratio, d.expected, cfg.decay_tolerance, d.within);
    ok = ok && d.within;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- random model

inline RandomModelRun compute_random(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto cps = config_checkpoints(cfg);
  return run_random_model(*cfg.seed, cfg.max, cfg.trials, cps, cfg.all_ones, cfg.threads);
}

inline int run_random(const ExperimentConfig& cfg) {
  const auto run = compute_random(cfg);
  prepare_output(cfg);
  {
    CsvWriter w(cfg.out / "random_trials.csv", {"seed", "trial", "x", "mf"});
    for (std::size_t t = 0; t < run.sums.size(); ++t) {
      for (std::size_t c = 0; c < run.checkpoints.size(); ++c) {
        w.row(run.seed, static_cast<std::int64_t>(t), run.checkpoints[c], run.sums[t][c]);
      }
    }
  }
  CsvWriter w(cfg.out / "random_quantiles.csv", {"x", "trials", "q10", "median", "q90"});
  for (const auto& s : run.summary) w.row(s.x, run.trials, s.q10, s.median, s.q90);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

enum class SuiteStatus { pass, fail, skip };

inline std::string_view to_string(SuiteStatus s) {
  return s == SuiteStatus::pass ? "PASS" : s == SuiteStatus::fail ? "FAIL" : "SKIP";
}

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::string detail;
};

namespace detail {

inline SuiteResult finish(std::string name, std::int64_t checked, std::int64_t failures,
                          std::string detail = {}) {
  return {std::move(name), failures == 0 ? SuiteStatus::pass : SuiteStatus::fail, checked, failures,
          std::move(detail)};
}

inline std::vector<std::int32_t> dense_values(const FunctionSpec& spec, std::int64_t n) {
  return SegmentSieve(spec, n).table(1, n + 1).values;
}

}  // namespace detail

// f = chi * h for every character mod q and every n <= n_max.
inline SuiteResult verify_convolution(std::int64_t q, std::int64_t n_max) {
  const auto chars = enumerate_real_characters(q);
  if (chars.empty()) return {"convolution", SuiteStatus::skip, 0, 0, "no real non-principal character"};
  const auto h = detail::dense_values(FunctionSpec::h(q), n_max);
  std::int64_t checked = 0, failures = 0;
  std::string first_bad;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    const auto& chi = chars[c];
    std::vector<std::int64_t> conv(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t d = 1; d <= n_max; ++d) {
      const int cd = chi(d);
      if (cd == 0) continue;
      for (std::int64_t m = 1; d * m <= n_max; ++m) conv[d * m] += cd * h[m - 1];
    }
    const auto f = detail::dense_values(FunctionSpec::f(chi), n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      ++checked;
      if (conv[n] != f[n - 1]) {
        if (failures++ == 0) first_bad = "char " + std::to_string(c) + " n=" + std::to_string(n);
      }
    }
  }
  return detail::finish("convolution", checked, failures, first_bad);
}

// Hyperbola = direct at `pairs` random (x, split) pairs with x <= x_max, plus
// the default split at each of those x.
inline SuiteResult verify_hyperbola(std::int64_t q, std::int64_t x_max, int pairs, std::uint64_t seed = 20240611) {
  const auto chars = enumerate_real_characters(q);
  if (chars.empty()) return {"hyperbola", SuiteStatus::skip, 0, 0, "no real non-principal character"};
  std::mt19937_64 rng(seed);
  std::int64_t checked = 0, failures = 0;
  std::string first_bad;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    const auto f = detail::dense_values(FunctionSpec::f(chars[c]), x_max);
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(x_max) + 1, 0);
    for (std::int64_t n = 1; n <= x_max; ++n) prefix[n] = prefix[n - 1] + f[n - 1];
    std::vector<HyperbolaSplit> splits;
    for (int i = 0; i < pairs; ++i) {
      const auto x = std::uniform_int_distribution<std::int64_t>(1, x_max)(rng);
      const auto M = std::uniform_int_distribution<std::int64_t>(1, x)(rng);
      const auto D = x / M + std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
      splits.push_back({x, std::max<std::int64_t>(D, 1), M});
      splits.push_back(default_split(x));
    }
    for (const auto& s : splits) {
      ++checked;
      if (summatory_hyperbola(chars[c], s) != prefix[s.x]) {
        if (failures++ == 0) {
          first_bad = "char " + std::to_string(c) + " x=" + std::to_string(s.x) + " D=" +
                      std::to_string(s.D) + " M=" + std::to_string(s.M);
        }
      }
    }
  }
  return detail::finish("hyperbola", checked, failures, first_bad);
}

// F(s) against sum_{n <= N} f(n) n^-s for random s with Re s >= 1.5; the
// tail is at most sum_{n > N} n^-sigma <= N^(1 - sigma) / (sigma - 1).
inline SuiteResult verify_series(std::int64_t q, std::int64_t n_max, int points = 20,
                                 std::uint64_t seed = 7) {
  const auto chars = enumerate_real_characters(q);
  if (chars.empty()) return {"series", SuiteStatus::skip, 0, 0, "no real non-principal character"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> sig(1.5, 4.0), tt(-30.0, 30.0);
  std::int64_t checked = 0, failures = 0;
  double worst = 0.0;
  for (const auto& chi : chars) {
    const auto f = detail::dense_values(FunctionSpec::f(chi), n_max);
    for (int i = 0; i < points; ++i) {
      const Complex s(sig(rng), tt(rng));
      ComplexL partial = 0;
      const ComplexL sl(s);
      for (std::int64_t n = 1; n <= n_max; ++n) {
        if (f[n - 1] != 0) partial += static_cast<long double>(f[n - 1]) * std::exp(-sl * std::log(static_cast<long double>(n)));
      }
      const double bound = std::pow(static_cast<double>(n_max), 1.0 - s.real()) / (s.real() - 1.0) + 1e-9;
      const double diff = std::abs(analytic::f_series(chi, s) - Complex(partial));
      worst = std::max(worst, diff / bound);
      ++checked;
      if (diff > bound) ++failures;
    }
  }
  return detail::finish("series", checked, failures, "worst diff/bound " + fmt(worst));
}

// Functional equation residual on a 10 x 10 grid of sigma in [-2, 3],
// t in [-50, 50] (t = 0 row shifted off the poles at s = 0 and s = 1).
inline std::vector<Complex> reflection_grid() {
  std::vector<Complex> pts;
  for (int i = 0; i < 10; ++i) {
    const double sigma = -2.0 + 5.0 * (i + 0.5) / 10.0;
    for (int j = 0; j < 10; ++j) {
      const double t = -50.0 + 100.0 * j / 9.0;
      pts.emplace_back(sigma, t);
    }
  }
  return pts;
}

inline double reflection_residual(Complex s) {
  return std::abs(analytic::zeta(s) - analytic::functional_factor(s) * analytic::zeta(1.0 - s));
}

inline SuiteResult verify_reflection(double tolerance = 1e-8) {
  std::int64_t checked = 0, failures = 0;
  double worst = 0.0;
  for (auto s : reflection_grid()) {
    const double r = reflection_residual(s);
    worst = std::max(worst, r);
    ++checked;
    if (!(r < tolerance)) ++failures;
  }
  return detail::finish("reflection", checked, failures, "max residual " + fmt(worst));
}

inline SuiteResult verify_mellin(std::int64_t q, std::int64_t X, double eps) {
  const auto chars = enumerate_real_characters(q);
  if (chars.empty()) return {"mellin", SuiteStatus::skip, 0, 0, "no real non-principal character"};
  std::int64_t checked = 0, failures = 0;
  std::string detail;
  for (const auto& chi : chars) {
    for (double sigma : {2.0, 3.0}) {
      const auto m = analytic::mellin_check(chi, {sigma, 0.0}, X, eps);
      ++checked;
      if (!(m.residual <= m.bound)) ++failures;
      if (detail.empty()) detail = "s=" + fmt(sigma) + " residual " + fmt(m.residual) + " bound " + fmt(m.bound);
    }
  }
  return detail::finish("mellin", checked, failures, detail);
}

struct GoldenRow {
  Kind kind;
  std::int64_t q;
  int char_id;
  std::int64_t x;
  std::int64_t sum;
};

inline std::vector<GoldenRow> read_golden(const std::filesystem::path& path) {
  const auto rows = read_csv(path);
  if (rows.empty() || rows.front() != std::vector<std::string>{"kind", "q", "char_id", "x", "sum"}) {
    throw error("golden file " + path.string() + " lacks the kind,q,char_id,x,sum header");
  }
  std::vector<GoldenRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 5) throw error("golden file: row " + std::to_string(i) + " has wrong width");
    out.push_back({kind_from_string(r[0]), detail::parse_int("q", r[1]),
                   static_cast<int>(detail::parse_int("char_id", r[2])), detail::parse_int("x", r[3]),
                   detail::parse_int("sum", r[4])});
  }
  return out;
}

// Recomputes every golden partial sum, one streaming pass per function.
inline SuiteResult verify_golden(const std::filesystem::path& path, const SieveOptions& opt = {}) {
  if (path.empty()) return {"golden", SuiteStatus::skip, 0, 0, "no golden file configured"};
  std::vector<GoldenRow> rows;
  try {
    rows = read_golden(path);
  } catch (const error& e) {
    return {"golden", SuiteStatus::fail, 0, 1, e.what()};
  }
  std::map<std::tuple<int, std::int64_t, int>, std::vector<GoldenRow>> groups;
  for (const auto& r : rows) groups[{static_cast<int>(r.kind), r.q, r.char_id}].push_back(r);
  std::int64_t checked = 0, failures = 0;
  std::string first_bad;
  for (auto& [key, group] : groups) {
    const auto kind = static_cast<Kind>(std::get<0>(key));
    const auto q = std::get<1>(key);
    const auto id = std::get<2>(key);
    FunctionSpec spec;
    if (kind == Kind::f || kind == Kind::chi) {
      const auto chi = real_character(q, static_cast<std::size_t>(id));
      spec = kind == Kind::f ? FunctionSpec::f(chi, id) : FunctionSpec::character(chi, id);
    } else if (kind == Kind::h) {
      spec = FunctionSpec::h(q);
    } else if (kind == Kind::abs_h) {
      spec = FunctionSpec::abs_h(q);
    }
    std::vector<std::int64_t> cps;
    for (const auto& r : group) cps.push_back(r.x);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
    const auto series = summatory_direct(spec, cps, opt);
    for (const auto& r : group) {
      ++checked;
      if (series.at(r.x) != r.sum) {
        if (failures++ == 0) {
          first_bad = std::string(to_string(r.kind)) + " q=" + std::to_string(r.q) + " x=" +
                      std::to_string(r.x) + ": expected " + std::to_string(r.sum) + " got " +
                      std::to_string(series.at(r.x));
        }
      }
    }
  }
  return detail::finish("golden", checked, failures, first_bad);
}

inline std::vector<SuiteResult> compute_verify(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto sopt = cfg.sieve_options();
  const std::int64_t x_max = std::min<std::int64_t>(cfg.max, 1'000'000);
  std::vector<SuiteResult> out;
  out.push_back(verify_convolution(cfg.q, cfg.verify_n));
  out.push_back(verify_hyperbola(cfg.q, x_max, cfg.verify_pairs));
  out.push_back(verify_series(cfg.q, x_max));
  out.push_back(verify_reflection());
  out.push_back(verify_mellin(cfg.q, x_max, cfg.mellin_eps));
  out.push_back(verify_golden(cfg.golden, sopt));
  return out;
}

inline int run_verify(const ExperimentConfig& cfg) {
  const auto results = compute_verify(cfg);
  prepare_output(cfg);
  CsvWriter w(cfg.out / "verify.csv", {"suite", "status", "checked", "failures", "detail"});
  bool ok = true;
  for (const auto& r : results) {
    w.row(std::string_view(r.name), to_string(r.status), r.checked, r.failures, std::string_view(r.detail));
    ok = ok && r.status != SuiteStatus::fail;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

inline int run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::growth: return run_growth(cfg);
    case ExperimentKind::omega: return run_omega(cfg);
    case ExperimentKind::zeros: return run_zeros(cfg);
    case ExperimentKind::tail: return run_tail(cfg);
    case ExperimentKind::random: return run_random(cfg);
    case ExperimentKind::verify: return run_verify(cfg);
  }
  return kExitConfig;
}

}  // namespace moblike::experiments
