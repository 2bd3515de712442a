// Copyright 2026 The netctl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netctl/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <system_error>
#include <vector>

#include "netctl/adjoint.hpp"
#include "netctl/config.hpp"
#include "netctl/csvio.hpp"
#include "netctl/errors.hpp"
#include "netctl/log.hpp"
#include "netctl/pipelines.hpp"
#include "netctl/rng.hpp"
#include "netctl/svg.hpp"
#include "netctl/workers.hpp"

namespace netctl {
namespace fs = std::filesystem;

namespace {

const std::set<std::string>& known_subcommands() {
  static const std::set<std::string> s = {"simulate", "select",  "compare",
                                          "exhaustive", "random", "gradcheck",
                                          "figure"};
  return s;
}

struct Failure {
  int code = exit_code::kInternal;
  std::string kind = "internal";
};

Failure classify(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return {exit_code::kConfig, "config"};
  if (dynamic_cast<const InfeasibleError*>(&e)) {
    return {exit_code::kInfeasible, "infeasible"};
  }
  if (dynamic_cast<const CapExceededError*>(&e)) {
    return {exit_code::kCapExceeded, "cap-exceeded"};
  }
  if (dynamic_cast<const SimulationError*>(&e)) {
    return {exit_code::kSolver, "simulation"};
  }
  if (dynamic_cast<const SolverError*>(&e)) return {exit_code::kSolver, "solver"};
  if (dynamic_cast<const BundleExistsError*>(&e)) {
    return {exit_code::kBundleExists, "bundle-exists"};
  }
  if (dynamic_cast<const IoError*>(&e)) return {exit_code::kIo, "io"};
  if (dynamic_cast<const fs::filesystem_error*>(&e)) {
    return {exit_code::kIo, "io"};
  }
  return {};
}

void print_method(const MethodResult& r) {
  std::printf("%s: pi=%s M=%d J=%s e=%s\n", r.method.c_str(),
              r.selection.bitstring().c_str(), r.selection.active_count(),
              fmt_g17(r.objective).c_str(), fmt_g17(r.error).c_str());
}

void print_baseline(const BaselineDistribution& dist) {
  std::vector<double> errors = dist.errors();
  const double lo = *std::min_element(errors.begin(), errors.end());
  std::printf("%s baseline: %zu selections, min e=%s\n", dist.method.c_str(),
              dist.entries.size(), fmt_g17(lo).c_str());
}

ErrorSeries method_series(const Experiment& ex, const MethodResult& r) {
  return {r.method, error_vs_steps(ex, r.selection, r.controls)};
}

void run_simulate(const Experiment& ex, const fs::path& dir) {
  const Scheme& sc = ex.sim_scheme;
  const int steps = ex.config.sim_steps;
  std::vector<Vec> states;
  states.reserve(static_cast<size_t>(steps) + 1);
  states.push_back(ex.x0_raw);
  const Vec zero_input = Vec::Zero(ex.model.state_dim());
  const std::string path = (dir / "trajectory.csv").string();
  try {
    for (int k = 1; k <= steps; ++k) {
      states.push_back(sc.kind == SchemeKind::kFe
                           ? fe_step_core(ex.model, states.back(), zero_input,
                                          sc.h, k)
                           : ti_step_core(ex.model, states.back(), zero_input,
                                          sc, k));
    }
  } catch (const SimulationError&) {
    write_trajectory_csv(path, states, sc.h);  // keep the partial response
    throw;
  }
  write_trajectory_csv(path, states, sc.h);
  std::printf("simulate: %d steps at h=%s, final sup|x|=%s\n", steps,
              fmt_g17(sc.h).c_str(),
              fmt_g17(states.back().cwiseAbs().maxCoeff()).c_str());
}

void run_select(const Experiment& ex, int workers, const fs::path& dir) {
  MethodResult res = algorithm1(ex, workers);
  write_result_csv((dir / "result.csv").string(), {res});
  write_trace_csv((dir / "trace.csv").string(), res.trace);
  write_error_steps_csv((dir / "error_steps.csv").string(),
                        {method_series(ex, res)});
  print_method(res);
}

void run_compare(const Experiment& ex, const fs::path& dir) {
  MethodResult res = relax_round_pipeline(ex);
  write_result_csv((dir / "result.csv").string(), {res});
  write_error_steps_csv((dir / "error_steps.csv").string(),
                        {method_series(ex, res)});
  print_method(res);
}

void run_exhaustive(const Experiment& ex, int workers, const fs::path& dir) {
  BaselineDistribution dist = exhaustive_baseline(ex, workers);
  write_baseline_csv((dir / "baseline.csv").string(), dist);
  print_baseline(dist);
}

void run_random(const Experiment& ex, int workers, const fs::path& dir) {
  BaselineDistribution dist =
      random_baseline(ex, ex.config.baseline_count, ex.budget, workers);
  write_baseline_csv((dir / "baseline.csv").string(), dist);
  print_baseline(dist);
}

void run_figure(const Experiment& ex, int workers, const fs::path& dir) {
  MethodResult alg = algorithm1(ex, workers);
  print_method(alg);
  MethodResult rel = relax_round_pipeline(ex);
  print_method(rel);

  BaselineDistribution dist;
  try {
    dist = exhaustive_baseline(ex, workers);
  } catch (const CapExceededError& e) {
    log_warn(std::string("falling back to the random baseline: ") + e.what());
    const int size = ex.mode == BudgetMode::kAtMost
                         ? alg.selection.active_count()
                         : ex.budget;
    dist = random_baseline(ex, ex.config.baseline_count, size, workers);
  }
  print_baseline(dist);

  write_result_csv((dir / "result.csv").string(), {alg, rel});
  write_trace_csv((dir / "trace.csv").string(), alg.trace);
  write_baseline_csv((dir / "baseline.csv").string(), dist);
  write_error_steps_csv((dir / "error_steps.csv").string(),
                        {method_series(ex, alg), method_series(ex, rel)});

  HistogramSpec hs;
  hs.bins = ex.config.histogram_bins;
  hs.markers = {{"algorithm1 e", alg.error, "red"},
                {"relax_round e", rel.error, "black"}};
  emit_histogram(dist.errors(), hs, (dir / "histogram.svg").string());
}

// Adjoint-vs-finite-difference sweep over both benchmark models and both
// schemes, at a random full-width control sequence.
void run_gradcheck(const ExperimentConfig& config, int workers,
                   const fs::path& dir) {
  struct Case {
    std::string name;
    std::string profile;
    std::string scheme;
    double h;
  };
  const std::vector<Case> cases = {{"duffing-fe", "duffing-n10", "fe", 1e-4},
                                   {"duffing-ti", "duffing-n10", "ti", 1e-4},
                                   {"memory-fe", "memory-n25", "fe", 1e-2},
                                   {"memory-ti", "memory-n25", "ti", 1e-2}};
  constexpr double kTol = 1e-5;
  double worst = 0.0;
  std::string worst_name;
  for (size_t ci = 0; ci < cases.size(); ++ci) {
    const Case& c = cases[ci];
    ExperimentConfig cc = profile_defaults(c.profile);
    cc.seed = config.seed;
    cc.scheme_kind = c.scheme;
    cc.h = c.h;
    cc.horizon = config.horizon;
    Experiment ex = resolve_experiment(cc, std::nullopt);

    Rng rng = substream(ex.seed(), "gradcheck", ci);
    Mat controls(ex.model.nodes, ex.spec.horizon + 1);
    for (Eigen::Index j = 0; j < controls.size(); ++j) {
      controls.data()[j] = rng.uniform(-1.0, 1.0);
    }
    const ActuationMap amap =
        ActuationMap::parametrized(ex.model, Vec::Ones(ex.model.nodes));
    GradientReport report = check_gradient(ex.model, ex.scheme, ex.x0,
                                           controls, amap, ex.spec, 1e-6,
                                           workers);
    write_gradcheck_csv((dir / ("gradcheck-" + c.name + ".csv")).string(),
                        report);
    std::printf("gradcheck %s: max_rel_error=%s\n", c.name.c_str(),
                fmt_g17(report.max_rel_error).c_str());
    if (report.max_rel_error > worst) {
      worst = report.max_rel_error;
      worst_name = c.name;
    }
  }
  if (worst >= kTol) {
    throw SolverError("gradient check failed: max_rel_error " +
                      fmt_g17(worst) + " on " + worst_name);
  }
}

void write_error_record(const fs::path& dir, const Failure& f,
                        const std::string& message) {
  try {
    write_text_file((dir / "error.txt").string(),
                    "error = " + f.kind + "\nexit_code = " +
                        std::to_string(f.code) + "\nmessage = " + message +
                        "\n");
  } catch (const std::exception&) {
    // Losing the record is acceptable; the exit code still reports it.
  }
}

}  // namespace

std::string exit_code_help() {
  return "Exit codes:\n"
         "  0   success\n"
         "  1   internal error\n"
         "  64  usage error\n"
         "  65  config file invalid\n"
         "  66  infeasible budget or selection\n"
         "  69  exhaustive enumeration above the cap\n"
         "  70  solver or simulation failure\n"
         "  73  output bundle already exists (use --force)\n"
         "  74  I/O error\n";
}

int run(const RunConfig& rc) {
  if (known_subcommands().count(rc.subcommand) == 0) {
    std::fprintf(stderr,
                 "netctl: unknown subcommand '%s'\nusage: netctl "
                 "<simulate|select|compare|exhaustive|random|gradcheck|figure>"
                 " --config <file> --seed <u64> --out <dir> [--workers N]"
                 " [--force]\n",
                 rc.subcommand.c_str());
    return exit_code::kUsage;
  }
  if (rc.config_path.empty() || rc.out_dir.empty()) {
    std::fprintf(stderr, "netctl: --config and --out are required\n");
    return exit_code::kUsage;
  }

  const fs::path out(rc.out_dir);
  fs::path staging;
  bool staged = false;

  try {
    ExperimentConfig config = load_config(rc.config_path);
    config.subcommand = rc.subcommand;
    if (rc.seed.has_value()) config.seed = rc.seed;

    if (fs::exists(out) && !rc.force) {
      throw BundleExistsError("results bundle '" + rc.out_dir +
                              "' already exists (use --force to replace)");
    }
    staging = out;
    staging += ".inprogress";
    fs::remove_all(staging);
    fs::create_directories(staging);
    staged = true;
    set_log_file((staging / "log.txt").string());
    log_info("netctl " + rc.subcommand + " --config " + rc.config_path);

    const int workers = rc.workers > 0 ? rc.workers : default_worker_count();

    if (rc.subcommand == "gradcheck") {
      if (!config.seed.has_value()) {
        throw ConfigError(0, "no seed: pass --seed or set `seed` in the config");
      }
      write_text_file((staging / "spec.cfg").string(),
                      serialize_config(config));
      run_gradcheck(config, workers, staging);
    } else {
      Experiment ex = resolve_experiment(config, std::nullopt);
      write_text_file((staging / "spec.cfg").string(),
                      serialize_config(ex.config));
      write_model_file((staging / "model.txt").string(), ex);
      if (rc.subcommand == "simulate") {
        run_simulate(ex, staging);
      } else if (rc.subcommand == "select") {
        run_select(ex, workers, staging);
      } else if (rc.subcommand == "compare") {
        run_compare(ex, staging);
      } else if (rc.subcommand == "exhaustive") {
        run_exhaustive(ex, workers, staging);
      } else if (rc.subcommand == "random") {
        run_random(ex, workers, staging);
      } else {
        run_figure(ex, workers, staging);
      }
    }

    set_log_file("");
    if (fs::exists(out)) fs::remove_all(out);  // permitted only under --force
    fs::rename(staging, out);
    return exit_code::kOk;
  } catch (const std::exception& e) {
    const Failure f = classify(e);
    log_error(e.what());
    if (staged) {
      write_error_record(staging, f, e.what());
      set_log_file("");
      try {
        if (fs::exists(out)) {
          if (rc.force) {
            fs::remove_all(out);
            fs::rename(staging, out);
          }
        } else {
          fs::rename(staging, out);
        }
      } catch (const std::exception&) {
        // Leave the staging directory behind rather than mask the error.
      }
    }
    return f.code;
  }
}

}  // namespace netctl
