// moblike: experiment driver.
//
//   moblike growth --q 3 --max 1e8 --out runs/growth
//   moblike verify --config configs/verify.ini
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "moblike/experiments/config.hpp"
#include "moblike/experiments/runners.hpp"

namespace ex = moblike::experiments;

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> q, chr, max, threads, out, seed;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "config file ([section] key = value)");
  sub->add_option("--q", f.q, "modulus");
  sub->add_option("--char", f.chr, "character index (lexicographic order)");
  sub->add_option("--max", f.max, "range max, e.g. 1e8");
  sub->add_option("--threads", f.threads, "worker threads");
  sub->add_option("--out", f.out, "output directory");
  sub->add_option("--seed", f.seed, "random model seed");
}

ex::ExperimentConfig resolve(ex::ExperimentKind kind, const Flags& f) {
  ex::ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.golden = MOBLIKE_DEFAULT_GOLDEN;
  if (!f.config.empty()) cfg = ex::load_config(f.config, cfg);
  if (cfg.kind != kind) {
    throw moblike::config_error("config kind '" + std::string(ex::to_string(cfg.kind)) +
                                "' does not match subcommand '" + std::string(ex::to_string(kind)) + "'");
  }
  if (f.q) cfg.set("experiment", "q", *f.q);
  if (f.chr) cfg.set("experiment", "char", *f.chr);
  if (f.max) cfg.set("experiment", "max", *f.max);
  if (f.threads) cfg.set("experiment", "threads", *f.threads);
  if (f.out) cfg.set("experiment", "out", *f.out);
  if (f.seed) cfg.set("random", "seed", *f.seed);
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Summatory functions of mu^2 g_chi: sieves, hyperbola method, analytic checks"};
  app.require_subcommand(1);
  Flags flags;
  struct Sub {
    const char* name;
    ex::ExperimentKind kind;
    const char* help;
  };
  const Sub subs[] = {
      {"growth", ex::ExperimentKind::growth, "M_f(x) at checkpoints, direct and hyperbola, with growth fit"},
      {"omega", ex::ExperimentKind::omega, "sup |M_f(x)|/x^(1/4) against the constant of the first usable zero"},
      {"zeros", ex::ExperimentKind::zeros, "zeros of zeta(2s) on Re s = 1/4 with L and P values"},
      {"tail", ex::ExperimentKind::tail, "decay of the truncation tail Z_M(s) along M = 2^k"},
      {"random", ex::ExperimentKind::random, "random multiplicative model quantiles (needs --seed)"},
      {"verify", ex::ExperimentKind::verify, "identity, golden and evaluator self-checks"}};
  for (const auto& sub : subs) add_common(app.add_subcommand(sub.name, sub.help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ex::kExitConfig;
  }

  try {
    for (const auto& sub : subs) {
      if (!app.got_subcommand(sub.name)) continue;
      const auto cfg = resolve(sub.kind, flags);
      const int rc = ex::run_experiment(cfg);
      std::cerr << sub.name << ": " << (rc == 0 ? "ok" : "cross-check failed") << ", output in "
                << cfg.out.string() << "\n";
      return rc;
    }
  } catch (const moblike::capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return ex::kExitCapacity;
  } catch (const moblike::config_error& e) {
    std::cerr << "config: " << e.what() << "\n";
    return ex::kExitConfig;
  } catch (const moblike::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ex::kExitCheckFailed;
  }
  return ex::kExitConfig;
}
