// magnocorr: command-line front end for the sweep engine.
//
//   magnocorr [--config PATH] [--out PATH] [--diffusion D] [--drift V] [--jobs N] <verb>
//
// Verbs: point, sweep, preset <name>, tc, validate.
// Exit status: 0 success, 1 computation or validation failure, 2 usage/config error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "magnocorr/config.hpp"
#include "magnocorr/critical_temperature.hpp"
#include "magnocorr/dynamics.hpp"
#include "magnocorr/lyapunov.hpp"
#include "magnocorr/output.hpp"
#include "magnocorr/presets.hpp"
#include "magnocorr/sweep.hpp"

namespace {

using namespace magnocorr;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config_path;
  std::string out_path;
  std::string diffusion;
  std::string drift;
  int jobs = 0;
  std::string preset;
  int points = 0;
  std::string pair;
  bool dump_matrices = false;
};

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw ConfigError("cannot open output '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Config base_config(const Options& opt) {
  Config cfg = opt.config_path.empty() ? Config{} : load_config(opt.config_path);
  try {
    if (!opt.diffusion.empty()) cfg.spec.base.diffusion_convention = parse_diffusion_convention(opt.diffusion);
    if (!opt.drift.empty()) cfg.spec.base.drift_variant = parse_drift_variant(opt.drift);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (opt.jobs > 0) cfg.jobs = opt.jobs;
  return cfg;
}

int write_sweep(const SweepSpec& spec, int jobs, const std::string& out_path) {
  OutputTarget target(out_path);
  RecordWriter writer(target.stream(), spec);
  writer.write_header();
  std::size_t flagged = 0;
  std::size_t unstable = 0;
  run_sweep(spec, jobs, [&](const SweepRecord& r) {
    writer.write(r);
    flagged += r.warnings.empty() ? 0 : 1;
    unstable += r.stable ? 0 : 1;
  });
  target.stream().flush();
  if (flagged) fmt::print(stderr, "warning: {} of {} points carry warnings (see warnings column)\n", flagged,
                          spec.point_count());
  if (unstable) fmt::print(stderr, "note: {} of {} points unstable (measures null)\n", unstable,
                           spec.point_count());
  return 0;
}

void dump_matrices(const PhysicalParams& p) {
  const Linearization lin = linearize(p);
  const DiffusionMatrix d = diffusion_matrix(p);
  fmt::print(stderr, "# drift A (rad/s)\n");
  write_matrix(std::cerr, lin.drift.entries);
  fmt::print(stderr, "# diffusion D (rad/s)\n");
  write_matrix(std::cerr, d.entries);
  if (stability(lin.drift, p).stable) {
    fmt::print(stderr, "# covariance V\n");
    write_matrix(std::cerr, solve_lyapunov(lin.drift, d).entries);
  }
}

int run_point(const Options& opt) {
  Config cfg = base_config(opt);
  cfg.spec.axes.clear();
  if (opt.dump_matrices) dump_matrices(cfg.spec.base);
  OutputTarget target(opt.out_path);
  RecordWriter writer(target.stream(), cfg.spec);
  writer.write_header();
  const SweepRecord r = evaluate_point(cfg.spec.base);
  writer.write(r);
  for (const auto& w : r.warnings) fmt::print(stderr, "warning: {}\n", w);
  return 0;
}

int run_sweep_verb(const Options& opt) {
  const Config cfg = base_config(opt);
  if (cfg.spec.axes.empty()) throw ConfigError("sweep: config has no [sweep] axis1");
  return write_sweep(cfg.spec, cfg.jobs, opt.out_path);
}

int run_preset(const Options& opt) {
  SweepSpec spec;
  try {
    spec = figure_preset(opt.preset, opt.points);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  try {
    if (!opt.diffusion.empty()) spec.base.diffusion_convention = parse_diffusion_convention(opt.diffusion);
    if (!opt.drift.empty()) spec.base.drift_variant = parse_drift_variant(opt.drift);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return write_sweep(spec, opt.jobs > 0 ? opt.jobs : 1, opt.out_path);
}

int run_tc(const Options& opt) {
  const Config cfg = base_config(opt);
  std::optional<ModePair> pair = cfg.tc_pair;
  if (!opt.pair.empty()) {
    auto comma = opt.pair.find(',');
    if (comma == std::string::npos) throw ConfigError("--pair: expected e.g. a2,m");
    try {
      pair = ModePair{parse_mode(opt.pair.substr(0, comma)), parse_mode(opt.pair.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (!pair) pair = ModePair{ModeId::A2, ModeId::M};
  const CriticalTemperature tc = find_critical_temperature(cfg.spec.base, pair->first, pair->second);
  for (const auto& w : tc.warnings) fmt::print(stderr, "warning: {}\n", w);
  OutputTarget target(opt.out_path);
  fmt::print(target.stream(), "pair,T_c[K],non_monotonic,saturated\n{}{},{:.17g},{},{}\n",
             mode_name(pair->first), mode_name(pair->second), tc.kelvin, tc.non_monotonic ? 1 : 0,
             tc.saturated ? 1 : 0);
  return 0;
}

int run_validate(const Options& opt) {
  Config cfg = base_config(opt);
  std::size_t checked = 0;
  std::size_t violations = 0;
  auto fail = [&](const SweepRecord& r, const std::string& what) {
    ++violations;
    std::string where;
    for (double v : r.axis_values) where += fmt::format(" {:.6g}", v);
    fmt::print(stderr, "violation at [{} ]: {}\n", where, what);
  };
  run_sweep(cfg.spec, cfg.jobs, [&](const SweepRecord& r) {
    ++checked;
    if (!r.stable) {
      for (const auto& e : r.entanglement) {
        if (e) fail(r, "measure reported at unstable point");
      }
      return;
    }
    if (r.lyapunov_residual >= 1e-10) fail(r, fmt::format("Lyapunov residual {:.3g}", r.lyapunov_residual));
    if (!r.negative_diffusion && r.physicality < -1e-9) {
      fail(r, fmt::format("unphysical covariance, min eig {:.3g}", r.physicality));
    }
    for (std::size_t k = 0; k < 6; ++k) {
      const auto& e = r.entanglement[k];
      for (std::size_t s : {2 * k, 2 * k + 1}) {
        const auto& z = r.steering[s];
        if (z && *z > 1e-9 && e && *e == 0.0) fail(r, "steering without entanglement");
      }
    }
  });
  OutputTarget target(opt.out_path);
  fmt::print(target.stream(), "checked {} points, {} violations\n", checked, violations);
  return violations == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement and steering sweeps for the passive-active magnomechanical system"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("--out", opt.out_path, "output file (default: stdout)");
  app.add_option("--diffusion", opt.diffusion, "as-printed|abs|physical");
  app.add_option("--drift", opt.drift, "derived|printed");
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* point = app.add_subcommand("point", "evaluate the configured parameter point");
  point->add_flag("--dump-matrices", opt.dump_matrices, "print A, D, V to stderr");
  app.add_subcommand("sweep", "run the sweep described by the config");
  auto* preset = app.add_subcommand("preset", "run a figure preset");
  preset->add_option("name", opt.preset, "preset name")->required();
  preset->add_option("--points", opt.points, "points per axis")->check(CLI::Range(2, 100000));
  auto* tc = app.add_subcommand("tc", "critical temperature of a mode pair");
  tc->add_option("--pair", opt.pair, "mode pair, e.g. a2,m");
  app.add_subcommand("validate", "check kernel invariants over the configured grid");
  app.add_subcommand("presets", "list preset names");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    const std::string verb = app.get_subcommands().front()->get_name();
    if (verb == "point") return run_point(opt);
    if (verb == "sweep") return run_sweep_verb(opt);
    if (verb == "preset") return run_preset(opt);
    if (verb == "tc") return run_tc(opt);
    if (verb == "validate") return run_validate(opt);
    for (auto name : preset_names()) fmt::print("{}\n", name);
    return 0;
  } catch (const ConfigError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitFailure;
  }
}
