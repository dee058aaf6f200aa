#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "moblike/errors.hpp"
#include "moblike/experiments/csv.hpp"
#include "moblike/sieve.hpp"

namespace moblike::experiments {

enum class ExperimentKind { growth, omega, zeros, tail, random, verify };

inline std::string_view to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::growth: return "growth";
    case ExperimentKind::omega: return "omega";
    case ExperimentKind::zeros: return "zeros";
    case ExperimentKind::tail: return "tail";
    case ExperimentKind::random: return "random";
    case ExperimentKind::verify: return "verify";
  }
  return "?";
}

inline ExperimentKind experiment_kind_from_string(std::string_view s) {
  for (auto k : {ExperimentKind::growth, ExperimentKind::omega, ExperimentKind::zeros,
                 ExperimentKind::tail, ExperimentKind::random, ExperimentKind::verify}) {
    if (to_string(k) == s) return k;
  }
  if (s == "tail-decay") return ExperimentKind::tail;
  if (s == "random-model") return ExperimentKind::random;
  throw config_error("unknown experiment kind '" + std::string(s) + "'");
}

enum class SplitPolicy { automatic, none };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Integers accept a plain decimal or a power of ten written 1e6.
inline std::int64_t parse_int(std::string_view key, std::string_view v) {
  std::int64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec == std::errc() && p == v.data() + v.size()) return out;
  const auto e = v.find_first_of("eE");
  if (e != std::string_view::npos) {
    std::int64_t mant = 0, exp = 0;
    auto [p1, ec1] = std::from_chars(v.data(), v.data() + e, mant);
    auto [p2, ec2] = std::from_chars(v.data() + e + 1, v.data() + v.size(), exp);
    if (ec1 == std::errc() && ec2 == std::errc() && p1 == v.data() + e &&
        p2 == v.data() + v.size() && exp >= 0 && exp <= 18) {
      __int128 r = mant;
      for (int i = 0; i < exp; ++i) r *= 10;
      if (r <= INT64_MAX && r >= INT64_MIN) return static_cast<std::int64_t>(r);
    }
  }
  throw config_error("'" + std::string(key) + "': expected an integer, got '" + std::string(v) + "'");
}

inline std::uint64_t parse_uint(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw config_error("'" + std::string(key) + "': expected an unsigned integer, got '" +
                       std::string(v) + "'");
  }
  return out;
}

inline double parse_double(std::string_view key, std::string_view v) {
  double out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw config_error("'" + std::string(key) + "': expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

inline bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw config_error("'" + std::string(key) + "': expected true or false, got '" + std::string(v) + "'");
}

}  // namespace detail

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::growth;
  std::int64_t q = 3;
  int char_index = 0;
  std::int64_t max = 1'000'000;
  unsigned threads = 1;
  std::filesystem::path out = "out";
  std::int64_t segment = std::int64_t{1} << 20;

  // checkpoint grid
  int per_decade = 8;
  std::int64_t start = 100;
  std::vector<std::int64_t> extras;

  // growth: hyperbola cross-check up to hyperbola_max
  SplitPolicy split = SplitPolicy::automatic;
  std::int64_t hyperbola_max = 10'000'000'000;

  // random model
  std::optional<std::uint64_t> seed;
  int trials = 200;
  bool all_ones = false;

  // zeros / omega
  double T = 30.0;
  double threshold = 1e-3;

  // tail decay
  std::vector<double> sigmas{0.75, 1.0, 1.25};
  double t = 0.0;
  int m_min_exp = 10;
  int m_max_exp = 18;

  // tolerances
  double zero_tolerance = 1e-8;
  double simple_threshold = 1e-4;
  double decay_tolerance = 0.25;
  double mellin_eps = 0.05;

  double vk_c = 1.0;

  // verify
  std::filesystem::path golden;
  std::int64_t verify_n = 100'000;
  int verify_pairs = 200;

  SieveOptions sieve_options() const {
    SieveOptions o;
    o.segment_size = segment;
    o.threads = threads;
    return o;
  }

  // Applies one `section.key = value` assignment. Unknown names are errors.
  void set(std::string_view section, std::string_view key, std::string_view value) {
    const std::string name = std::string(section) + "." + std::string(key);
    using namespace detail;
    if (section == "experiment") {
      if (key == "kind") return void(kind = experiment_kind_from_string(value));
      if (key == "q") return void(q = parse_int(name, value));
      if (key == "char") return void(char_index = static_cast<int>(parse_int(name, value)));
      if (key == "max") return void(max = parse_int(name, value));
      if (key == "threads") return void(threads = static_cast<unsigned>(std::max<std::int64_t>(1, parse_int(name, value))));
      if (key == "out") return void(out = std::string(value));
      if (key == "segment") return void(segment = parse_int(name, value));
    } else if (section == "checkpoints") {
      if (key == "per_decade") return void(per_decade = static_cast<int>(parse_int(name, value)));
      if (key == "start") return void(start = parse_int(name, value));
      if (key == "extra") {
        extras.clear();
        for (auto item : split_list(value)) extras.push_back(parse_int(name, item));
        return;
      }
    } else if (section == "hyperbola") {
      if (key == "policy") {
        if (value == "default") return void(split = SplitPolicy::automatic);
        if (value == "none") return void(split = SplitPolicy::none);
        throw config_error("'" + name + "': expected default or none");
      }
      if (key == "max") return void(hyperbola_max = parse_int(name, value));
    } else if (section == "random") {
      if (key == "seed") return void(seed = parse_uint(name, value));
      if (key == "trials") return void(trials = static_cast<int>(parse_int(name, value)));
      if (key == "all_ones") return void(all_ones = parse_bool(name, value));
    } else if (section == "zeros") {
      if (key == "T") return void(T = parse_double(name, value));
      if (key == "threshold") return void(threshold = parse_double(name, value));
    } else if (section == "tail") {
      if (key == "sigma") {
        sigmas.clear();
        for (auto item : split_list(value)) sigmas.push_back(parse_double(name, item));
        return;
      }
      if (key == "t") return void(t = parse_double(name, value));
      if (key == "m_min_exp") return void(m_min_exp = static_cast<int>(parse_int(name, value)));
      if (key == "m_max_exp") return void(m_max_exp = static_cast<int>(parse_int(name, value)));
    } else if (section == "tolerance") {
      if (key == "zero") return void(zero_tolerance = parse_double(name, value));
      if (key == "simple") return void(simple_threshold = parse_double(name, value));
      if (key == "decay") return void(decay_tolerance = parse_double(name, value));
      if (key == "mellin_eps") return void(mellin_eps = parse_double(name, value));
    } else if (section == "report") {
      if (key == "vk_c") return void(vk_c = parse_double(name, value));
    } else if (section == "verify") {
      if (key == "golden") return void(golden = std::string(value));
      if (key == "n") return void(verify_n = parse_int(name, value));
      if (key == "pairs") return void(verify_pairs = static_cast<int>(parse_int(name, value)));
    } else {
      throw config_error("unknown section [" + std::string(section) + "]");
    }
    throw config_error("unknown key '" + name + "'");
  }

  // Range checks. Ranges beyond what the engines support are capacity errors,
  // everything else is a config error.
  void validate() const {
    if (q < 1) throw config_error("q must be >= 1");
    if (char_index < 0) throw config_error("char must be >= 0");
    if (max < 1) throw config_error("max must be >= 1");
    if (max > kMaxRange) throw capacity_error("max exceeds 1e12");
    if (segment < 1 || segment > (std::int64_t{1} << 26)) throw config_error("segment outside [1, 2^26]");
    if (per_decade < 0 || start < 1) throw config_error("checkpoint grid needs per_decade >= 0, start >= 1");
    if (seed.has_value() != (kind == ExperimentKind::random)) {
      throw config_error(kind == ExperimentKind::random ? "random model needs a seed"
                                                        : "seed is only valid for the random model");
    }
    if (kind == ExperimentKind::random) {
      if (trials < 1) throw config_error("trials must be >= 1");
      if (max > 10'000'000) throw capacity_error("random model max exceeds 1e7");
      if (trials > 10'000) throw capacity_error("random model trials exceed 1e4");
    }
    if (!(T >= 0)) throw config_error("zeros.T must be >= 0");
    if (T > 5000) throw capacity_error("zeros.T exceeds 5000");
    if (!(threshold > 0)) throw config_error("zeros.threshold must be > 0");
    if (sigmas.empty()) throw config_error("tail.sigma is empty");
    for (auto s : sigmas) {
      if (!(s > 0.5)) throw config_error("tail.sigma values must exceed 1/2");
    }
    if (m_min_exp < 0 || m_max_exp <= m_min_exp) throw config_error("tail needs 0 <= m_min_exp < m_max_exp");
    if (m_max_exp > 26) throw capacity_error("tail.m_max_exp exceeds 26");
    if (verify_n < 1 || verify_pairs < 0) throw config_error("verify.n >= 1, verify.pairs >= 0");
  }

  // The resolved config in the same format the parser reads.
  std::string to_ini() const {
    std::ostringstream o;
    auto list = [](const auto& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
      return s;
    };
    o << "[experiment]\nkind = " << to_string(kind) << "\nq = " << q << "\nchar = " << char_index
      << "\nmax = " << max << "\nthreads = " << threads << "\nout = " << out.string()
      << "\nsegment = " << segment << "\n\n";
    o << "[checkpoints]\nper_decade = " << per_decade << "\nstart = " << start
      << "\nextra = " << list(extras) << "\n\n";
    o << "[hyperbola]\npolicy = " << (split == SplitPolicy::automatic ? "default" : "none")
      << "\nmax = " << hyperbola_max << "\n\n";
    if (seed) {
      o << "[random]\nseed = " << *seed << "\ntrials = " << trials
        << "\nall_ones = " << (all_ones ? "true" : "false") << "\n\n";
    }
    o << "[zeros]\nT = " << fmt(T) << "\nthreshold = " << fmt(threshold) << "\n\n";
    o << "[tail]\nsigma = " << list(sigmas) << "\nt = " << fmt(t) << "\nm_min_exp = " << m_min_exp
      << "\nm_max_exp = " << m_max_exp << "\n\n";
    o << "[tolerance]\nzero = " << fmt(zero_tolerance) << "\nsimple = " << fmt(simple_threshold)
      << "\ndecay = " << fmt(decay_tolerance) << "\nmellin_eps = " << fmt(mellin_eps) << "\n\n";
    o << "[report]\nvk_c = " << fmt(vk_c) << "\n\n";
    o << "[verify]\ngolden = " << golden.string() << "\nn = " << verify_n
      << "\npairs = " << verify_pairs << "\n";
    return o.str();
  }
};

// Strict parser: `[section]` headers, `key = value` lines, `#` or `;`
// comments. Assigning a key twice is an error.
inline ExperimentConfig parse_config(std::istream& in, ExperimentConfig cfg = {}) {
  std::string line;
  std::string section;
  std::set<std::string> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = detail::trim(line);
    if (v.empty() || v.front() == '#' || v.front() == ';') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (v.front() == '[') {
      if (v.back() != ']') throw config_error(where + "malformed section header");
      section = std::string(detail::trim(v.substr(1, v.size() - 2)));
      continue;
    }
    const auto eq = v.find('=');
    if (eq == std::string_view::npos) throw config_error(where + "expected key = value");
    if (section.empty()) throw config_error(where + "key outside any section");
    const auto key = detail::trim(v.substr(0, eq));
    const auto value = detail::trim(v.substr(eq + 1));
    if (!seen.insert(section + "." + std::string(key)).second) {
      throw config_error(where + "duplicate key '" + section + "." + std::string(key) + "'");
    }
    try {
      cfg.set(section, key, value);
    } catch (const config_error& e) {
      throw config_error(where + e.what());
    }
  }
  return cfg;
}

inline ExperimentConfig parse_config_string(const std::string& text, ExperimentConfig cfg = {}) {
  std::istringstream in(text);
  return parse_config(in, std::move(cfg));
}

inline ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig cfg = {}) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config " + path.string());
  return parse_config(in, std::move(cfg));
}

}  // namespace moblike::experiments
