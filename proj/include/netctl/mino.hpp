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

#ifndef NETCTL_MINO_HPP_
#define NETCTL_MINO_HPP_

#include <string>
#include <vector>

#include "netctl/adjoint.hpp"
#include "netctl/cost.hpp"
#include "netctl/model.hpp"
#include "netctl/selection.hpp"
#include "netctl/sim.hpp"
#include "netctl/solvers.hpp"

namespace netctl {

// Continuous subproblem: minimize the tracking cost over the reduced control
// sequence of a fixed selection.
struct ReducedSolve {
  NlpResult nlp;
  Mat controls;  // M x (T+1)
  double objective = 0.0;
  double error = 0.0;
};

// Solves min_u J(u; sel) from `warm_start` (M x (T+1); pass a zero matrix
// for a cold start).  Simulation failures inside the line search score as
// +inf; a failure at the initial point rethrows.
ReducedSolve solve_controls(const NetworkModel& model, const Scheme& scheme,
                            const Vec& x0, const CostSpec& spec,
                            const Selection& sel, const Mat& warm_start,
                            const SolveOptions& options);

struct MinoOptions {
  SolveOptions solve;        // final full-precision solve (and warm-up)
  int inner_iters = 100;     // iteration cap for candidate scoring
  int max_poll_rounds = 50;
  double improve_rtol = 1e-8;
  int workers = 1;
};

struct PollRecord {
  int round = 0;
  std::string pi;
  double inner_j = 0.0;
  bool accepted = false;
};

struct MinoResult {
  Selection selection;
  Mat controls;  // reduced, M x (T+1)
  double objective = 0.0;
  double error = 0.0;
  long evaluations = 0;
  std::vector<PollRecord> trace;
  bool final_converged = false;
};

// Mixed-variable local direct search for the joint selection/control
// problem.  The discrete poll explores single-bit flips that respect the
// budget plus all active/inactive swaps; each candidate is scored by an
// inner solve capped at inner_iters and warm-started from the incumbent
// controls (shared columns copied, fresh columns zero).  The best neighbor
// is accepted while it improves the incumbent cost by more than
// improve_rtol (relative); the incumbent selection then gets a final solve
// at full precision.
//
// `init` must be feasible, or all-ones: an over-budget all-ones start is
// repaired by greedily deactivating nodes (cheapest cost increase first,
// scored by re-simulating the incumbent controls without the candidate
// column) until the budget holds, re-solving the controls after each
// removal.  Repair steps are logged in the trace like poll rounds.
MinoResult mino_search(const NetworkModel& model, const Scheme& scheme,
                       const Vec& x0, const CostSpec& spec, int budget,
                       BudgetMode mode, const Selection& init,
                       const Mat& init_controls_full,
                       const MinoOptions& options);

}  // namespace netctl

#endif  // NETCTL_MINO_HPP_
