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

#ifndef NETCTL_PIPELINES_HPP_
#define NETCTL_PIPELINES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netctl/config.hpp"
#include "netctl/cost.hpp"
#include "netctl/duffing.hpp"
#include "netctl/memory_net.hpp"
#include "netctl/mino.hpp"
#include "netctl/model.hpp"
#include "netctl/sim.hpp"

namespace netctl {

// A config resolved to concrete arrays: model built, states drawn and
// settled, schemes instantiated.  Everything downstream is deterministic in
// this struct.
struct Experiment {
  ExperimentConfig config;  // fully resolved; config.seed is set
  NetworkModel model;
  Scheme scheme;         // control-design discretization
  Scheme settle_scheme;  // steady-state runs
  Scheme sim_scheme;     // uncontrolled-response runs
  Vec x0;                // initial state after settling
  Vec x0_raw;            // as drawn, before settling
  CostSpec spec;
  int budget = 0;
  BudgetMode mode = BudgetMode::kAtMost;

  // Model provenance, kept for serialization; which one is meaningful
  // follows config.model_kind.
  DuffingParams duffing;
  MemoryParams memory;

  std::uint64_t seed() const { return *config.seed; }
};

// Materializes a config.  Randomness flows from the master seed (the
// override wins over the config's `seed` key; one of the two must be
// present) through fixed named substreams: "graph" and "params" for the
// Duffing benchmark, "desired-state" for a uniform desired draw,
// "init-state" for the random pre-settling start, "noise" for the perturbed
// letter start.  Settling failures are logged, not fatal.
Experiment resolve_experiment(const ExperimentConfig& config,
                              std::optional<std::uint64_t> seed_override);

// Option plumbing from the config.
SolveOptions solve_options(const ExperimentConfig& config);
SolveOptions relax_options(const ExperimentConfig& config);
MinoOptions mino_options(const ExperimentConfig& config, int workers);

// One method's final answer, comparable across methods.
struct MethodResult {
  std::string method;
  Selection selection;
  Mat controls;  // reduced, active_count x (T+1)
  double objective = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = false;
  std::vector<PollRecord> trace;  // populated by the search method only
};

// Control node selection, the primary method: solve the full-width problem
// at the all-ones selection from zero controls, run the mixed-variable
// search from there, and keep its reduced full-precision solve.
MethodResult algorithm1(const Experiment& ex, int workers);

// Comparison method: relax the selection to alpha in [0,1]^N, minimize over
// (z, alpha) jointly from z = 0, alpha = 1/2, round alpha to the closest
// feasible selection, and re-solve the reduced problem warm-started from the
// alpha-weighted rows of the relaxed controls.
MethodResult relax_round_pipeline(const Experiment& ex);

struct BaselineEntry {
  long long index = 0;  // lexicographic rank (exhaustive) or draw order
  Selection selection;
  double objective = 0.0;
  double error = 0.0;
};

struct BaselineDistribution {
  std::string method;  // "exhaustive" | "random"
  std::vector<BaselineEntry> entries;
  std::vector<double> errors() const;
};

// C(n, k), saturating instead of overflowing.
unsigned long long binomial_count(int n, int k);
// Rank-th m-subset of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(long long rank, int n, int m);

// Solves the reduced problem from zero controls for every selection at the
// exact budget, in lexicographic order.  Throws CapExceededError when
// C(N, M) exceeds the config cap — callers fall back to random_baseline.
BaselineDistribution exhaustive_baseline(const Experiment& ex, int workers);

// Same for `count` random subsets of `subset_size` nodes (rejection-sampled
// distinct unless C(N, size) < count), drawn from the "baseline-sampling"
// substream.  Pass the budget as subset_size unless comparing against a
// method that returned a smaller cardinality.
BaselineDistribution random_baseline(const Experiment& ex, int count,
                                     int subset_size, int workers);

// Per-step error curve e_k = ||x_D - x_k|| of a method's returned controls.
std::vector<double> error_vs_steps(const Experiment& ex, const Selection& sel,
                                   const Mat& reduced_controls);

}  // namespace netctl

#endif  // NETCTL_PIPELINES_HPP_
