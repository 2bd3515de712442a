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

#include "netctl/pipelines.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>

#include "netctl/adjoint.hpp"
#include "netctl/errors.hpp"
#include "netctl/graph.hpp"
#include "netctl/log.hpp"
#include "netctl/rng.hpp"
#include "netctl/workers.hpp"

namespace netctl {
namespace {

constexpr unsigned long long kCountSaturated = ULLONG_MAX;

SchemeKind kind_of(const std::string& name) {
  return name == "fe" ? SchemeKind::kFe : SchemeKind::kTi;
}

const Eigen::VectorXi& letter_by_name(const std::string& name) {
  static const Eigen::VectorXi h = letter_h();
  static const Eigen::VectorXi t = letter_t();
  static const Eigen::VectorXi l = letter_l();
  if (name == "H") return h;
  if (name == "T") return t;
  return l;
}

Vec explicit_state(const std::vector<double>& values, int dim,
                   const std::string& what) {
  if (static_cast<int>(values.size()) != dim) {
    throw ConfigError(0, what + " has " + std::to_string(values.size()) +
                             " entries; the model state has " +
                             std::to_string(dim));
  }
  Vec x(dim);
  for (int i = 0; i < dim; ++i) x[i] = values[static_cast<size_t>(i)];
  return x;
}

BudgetMode mode_of(const std::string& name) {
  return name == "exactly" ? BudgetMode::kExactly : BudgetMode::kAtMost;
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

// Solves the reduced problem from zero controls for one subset, recording
// the entry at `slot`; shared by both baselines.
void score_subset(const Experiment& ex, const std::vector<int>& subset,
                  long long index, const SolveOptions& options,
                  BaselineEntry& slot) {
  Selection sel = make_selection(ex.model.nodes, subset, ex.budget, ex.mode);
  const Mat zero =
      Mat::Zero(static_cast<Eigen::Index>(subset.size()), ex.spec.horizon + 1);
  ReducedSolve rs = solve_controls(ex.model, ex.scheme, ex.x0, ex.spec, sel,
                                   zero, options);
  slot = {index, std::move(sel), rs.objective, rs.error};
}

}  // namespace

unsigned long long binomial_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    const unsigned long long factor = static_cast<unsigned long long>(n - k + i);
    if (r > kCountSaturated / factor) return kCountSaturated;
    r = r * factor / static_cast<unsigned long long>(i);
  }
  return r;
}

std::vector<int> unrank_combination(long long rank, int n, int m) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(m));
  unsigned long long r = static_cast<unsigned long long>(rank);
  int v = 0;
  for (int pos = 0; pos < m; ++pos) {
    for (;; ++v) {
      const unsigned long long cnt = binomial_count(n - 1 - v, m - 1 - pos);
      if (r < cnt) {
        out.push_back(v++);
        break;
      }
      r -= cnt;
    }
  }
  return out;
}

SolveOptions solve_options(const ExperimentConfig& config) {
  SolveOptions o;
  o.tol_grad = config.tol_grad;
  o.max_iter = config.max_iter;
  return o;
}

SolveOptions relax_options(const ExperimentConfig& config) {
  SolveOptions o;
  o.tol_grad = config.relax_tol;
  o.max_iter = config.relax_max_iter;
  return o;
}

MinoOptions mino_options(const ExperimentConfig& config, int workers) {
  MinoOptions o;
  o.solve = solve_options(config);
  o.inner_iters = config.inner_iters;
  o.max_poll_rounds = config.max_poll_rounds;
  o.improve_rtol = config.improve_rtol;
  o.workers = workers;
  return o;
}

Experiment resolve_experiment(const ExperimentConfig& config_in,
                              std::optional<std::uint64_t> seed_override) {
  Experiment ex;
  ex.config = config_in;
  resolve_scheme_defaults(ex.config);
  if (seed_override.has_value()) ex.config.seed = seed_override;
  if (!ex.config.seed.has_value()) {
    throw ConfigError(0, "no seed: pass --seed or set `seed` in the config");
  }
  const std::uint64_t seed = *ex.config.seed;
  const ExperimentConfig& c = ex.config;

  if (c.model_kind == "duffing") {
    Graph graph = grg_graph(c.model_n, seed);
    ex.duffing = sample_duffing(graph, seed);
    ex.model = duffing_model(ex.duffing);
  } else {
    ex.memory = make_memory_params(letter_patterns(), c.epsilon);
    ex.model = memory_model(ex.memory);
  }
  const int dim = ex.model.state_dim();

  ex.scheme = {kind_of(c.scheme_kind), c.h, c.newton_tol, c.newton_max_iter};
  ex.settle_scheme = {kind_of(c.settle_kind), c.settle_h, c.newton_tol,
                      c.newton_max_iter};
  ex.sim_scheme = {kind_of(c.sim_kind), c.sim_h, c.newton_tol,
                   c.newton_max_iter};

  if (c.desired_policy == "uniform") {
    Rng rng = substream(seed, "desired-state");
    Vec xd(dim);
    for (int i = 0; i < dim; ++i) xd[i] = rng.uniform(c.desired_low, c.desired_high);
    ex.spec.x_desired = std::move(xd);
  } else if (c.desired_policy == "letter") {
    ex.spec.x_desired = pattern_phases(letter_by_name(c.desired_letter));
  } else {
    ex.spec.x_desired = explicit_state(c.desired_values, dim, "desired.values");
  }
  ex.spec.horizon = c.horizon;

  bool settle = true;
  if (c.init_policy == "steady-from-random") {
    Rng rng = substream(seed, "init-state");
    ex.x0_raw.resize(dim);
    for (int i = 0; i < dim; ++i) ex.x0_raw[i] = rng.uniform(0.0, 0.5);
  } else if (c.init_policy == "letter-noisy") {
    Rng rng = substream(seed, "noise");
    ex.x0_raw = pattern_phases(letter_by_name(c.init_letter));
    for (int i = 0; i < dim; ++i) ex.x0_raw[i] += c.noise_sigma * rng.normal();
  } else {
    ex.x0_raw = explicit_state(c.init_values, dim, "init.values");
    settle = false;
  }
  if (settle) {
    SteadyState ss = steady_state(ex.model, ex.settle_scheme, ex.x0_raw,
                                  c.settle_tol, c.settle_max_steps);
    if (!ss.converged) {
      log_warn("initial state did not settle within " +
               std::to_string(c.settle_max_steps) + " steps");
    }
    ex.x0 = std::move(ss.state);
  } else {
    ex.x0 = ex.x0_raw;
  }

  ex.budget = c.budget_count;
  ex.mode = mode_of(c.budget_mode);
  ex.spec.validate(dim);
  return ex;
}

MethodResult algorithm1(const Experiment& ex, int workers) {
  const int n = ex.model.nodes;
  const MinoOptions options = mino_options(ex.config, workers);

  Selection start = all_ones_selection(n, ex.budget, ex.mode);
  const Mat zero = Mat::Zero(n, ex.spec.horizon + 1);
  ReducedSolve warm = solve_controls(ex.model, ex.scheme, ex.x0, ex.spec,
                                     start, zero, options.solve);
  log_info("algorithm1: all-ones warm-up J = " + fmt_g(warm.objective));

  MinoResult mino =
      mino_search(ex.model, ex.scheme, ex.x0, ex.spec, ex.budget, ex.mode,
                  start, expand_controls(warm.controls, start), options);

  MethodResult out;
  out.method = "algorithm1";
  out.selection = std::move(mino.selection);
  out.controls = std::move(mino.controls);
  out.objective = mino.objective;
  out.error = mino.error;
  out.evaluations = mino.evaluations + 1;
  out.converged = mino.final_converged;
  out.trace = std::move(mino.trace);
  return out;
}

MethodResult relax_round_pipeline(const Experiment& ex) {
  const int n = ex.model.nodes;
  const int cols = ex.spec.horizon + 1;
  const Eigen::Index zlen = static_cast<Eigen::Index>(n) * cols;
  const double inf = std::numeric_limits<double>::infinity();

  Vec v0 = Vec::Zero(zlen + n);
  v0.tail(n).setConstant(0.5);
  Vec lower = Vec::Constant(zlen + n, -inf);
  Vec upper = Vec::Constant(zlen + n, inf);
  lower.tail(n).setZero();
  upper.tail(n).setOnes();

  auto eval = [&ex, n, cols, zlen](const Vec& v, Vec* grad) -> double {
    const Eigen::Map<const Mat> z(v.data(), n, cols);
    const Vec alpha = v.tail(n);
    try {
      RelaxedEval ev = relaxed_eval(ex.model, ex.scheme, ex.x0, z, alpha,
                                    ex.spec, grad != nullptr);
      if (grad != nullptr) {
        grad->resize(v.size());
        Eigen::Map<Mat>(grad->data(), n, cols) = ev.grad_controls;
        grad->tail(n) = ev.grad_alpha;
      }
      return ev.value;
    } catch (const SimulationError&) {
      if (grad != nullptr) *grad = Vec::Zero(v.size());
      return std::numeric_limits<double>::infinity();
    }
  };
  NlpResult relaxed = bounded_min(
      [&eval](const Vec& v, Vec& g) { return eval(v, &g); },
      [&eval](const Vec& v) { return eval(v, nullptr); }, v0, lower, upper,
      relax_options(ex.config));
  log_info("relax: relaxed J = " + fmt_g(relaxed.objective) +
           (relaxed.converged ? "" : " (not converged)"));

  const Eigen::Map<const Mat> z_star(relaxed.x.data(), n, cols);
  const Vec alpha_star = relaxed.x.tail(n);
  Selection sel = round_selection(alpha_star, ex.budget, ex.mode);

  Mat weighted = z_star;
  weighted.array().colwise() *= alpha_star.array();
  ReducedSolve fin =
      solve_controls(ex.model, ex.scheme, ex.x0, ex.spec, sel,
                     restrict_controls(weighted, sel), solve_options(ex.config));

  MethodResult out;
  out.method = "relax_round";
  out.selection = std::move(sel);
  out.controls = std::move(fin.controls);
  out.objective = fin.objective;
  out.error = fin.error;
  out.evaluations = relaxed.iterations + fin.nlp.iterations;
  out.converged = fin.nlp.converged;
  return out;
}

std::vector<double> BaselineDistribution::errors() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& entry : entries) out.push_back(entry.error);
  return out;
}

BaselineDistribution exhaustive_baseline(const Experiment& ex, int workers) {
  const int n = ex.model.nodes;
  const int m = ex.budget;
  const unsigned long long total = binomial_count(n, m);
  const unsigned long long cap =
      static_cast<unsigned long long>(ex.config.exhaustive_cap);
  if (total > cap || total > static_cast<unsigned long long>(INT_MAX)) {
    throw CapExceededError(
        "exhaustive enumeration needs " +
        (total == kCountSaturated ? std::string(">1e19")
                                  : std::to_string(total)) +
        " solves, above the cap of " + std::to_string(ex.config.exhaustive_cap) +
        "; use the random baseline");
  }
  const int count = static_cast<int>(total);
  const SolveOptions options = solve_options(ex.config);

  BaselineDistribution dist;
  dist.method = "exhaustive";
  dist.entries.resize(static_cast<size_t>(count));
  parallel_for(count, workers, [&](int i) {
    score_subset(ex, unrank_combination(i, n, m), i, options,
                 dist.entries[static_cast<size_t>(i)]);
  });
  return dist;
}

BaselineDistribution random_baseline(const Experiment& ex, int count,
                                     int subset_size, int workers) {
  const int n = ex.model.nodes;
  const int m = subset_size;
  if (count < 1) throw InfeasibleError("random baseline needs count >= 1");
  if (m < 0 || m > n ||
      (ex.mode == BudgetMode::kExactly && m != ex.budget) ||
      (ex.mode == BudgetMode::kAtMost && m > ex.budget)) {
    throw InfeasibleError("random baseline subset size " + std::to_string(m) +
                          " violates the budget");
  }
  const unsigned long long total = binomial_count(n, m);
  const bool allow_duplicates =
      total < static_cast<unsigned long long>(count);
  if (allow_duplicates) {
    log_warn("only " + std::to_string(total) + " distinct subsets exist; " +
             "sampling " + std::to_string(count) + " with replacement");
  }

  Rng rng = substream(ex.seed(), "baseline-sampling");
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> subsets;
  subsets.reserve(static_cast<size_t>(count));
  while (static_cast<int>(subsets.size()) < count) {
    for (int i = 0; i < m; ++i) {
      const int j =
          i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    std::vector<int> subset(pool.begin(), pool.begin() + m);
    std::sort(subset.begin(), subset.end());
    if (!allow_duplicates && !seen.insert(subset).second) continue;
    subsets.push_back(std::move(subset));
  }

  const SolveOptions options = solve_options(ex.config);
  BaselineDistribution dist;
  dist.method = "random";
  dist.entries.resize(static_cast<size_t>(count));
  parallel_for(count, workers, [&](int i) {
    score_subset(ex, subsets[static_cast<size_t>(i)], i, options,
                 dist.entries[static_cast<size_t>(i)]);
  });
  return dist;
}

std::vector<double> error_vs_steps(const Experiment& ex, const Selection& sel,
                                   const Mat& reduced_controls) {
  const ActuationMap amap = ActuationMap::reduced(ex.model, sel);
  Trajectory traj =
      simulate(ex.model, ex.scheme, ex.x0, reduced_controls, amap);
  return error_curve(traj, ex.spec.x_desired);
}

}  // namespace netctl
