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

#include "netctl/mino.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "netctl/errors.hpp"
#include "netctl/log.hpp"
#include "netctl/workers.hpp"

namespace netctl {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Moves the incumbent controls onto a neighboring selection: shared nodes
// keep their rows, newly activated nodes start at zero.
Mat map_controls(const Mat& controls, const Selection& from,
                 const Selection& to) {
  const std::vector<int> from_active = from.active_indices();
  const std::vector<int> to_active = to.active_indices();
  Mat mapped = Mat::Zero(static_cast<Eigen::Index>(to_active.size()),
                         controls.cols());
  size_t src = 0;
  for (size_t dst = 0; dst < to_active.size(); ++dst) {
    while (src < from_active.size() && from_active[src] < to_active[dst]) {
      ++src;
    }
    if (src < from_active.size() && from_active[src] == to_active[dst]) {
      mapped.row(static_cast<Eigen::Index>(dst)) =
          controls.row(static_cast<Eigen::Index>(src));
    }
  }
  return mapped;
}

struct Candidate {
  Selection sel;
  double score = kInf;
  Mat controls;  // solved reduced controls, when scored by a solve
};

}  // namespace

ReducedSolve solve_controls(const NetworkModel& model, const Scheme& scheme,
                            const Vec& x0, const CostSpec& spec,
                            const Selection& sel, const Mat& warm_start,
                            const SolveOptions& options) {
  const ActuationMap actuation = ActuationMap::reduced(model, sel);
  if (warm_start.rows() != actuation.width ||
      warm_start.cols() != spec.horizon + 1) {
    throw SolverError("solve_controls: warm start has the wrong shape");
  }
  const Eigen::Index rows = warm_start.rows();
  const Eigen::Index cols = warm_start.cols();
  const bool ti = scheme.kind == SchemeKind::kTi;

  ValueGradFn value_grad = [&, rows, cols](const Vec& v, Vec& g) -> double {
    const Mat controls = Eigen::Map<const Mat>(v.data(), rows, cols);
    TiCache cache;
    Trajectory traj;
    try {
      traj = simulate(model, scheme, x0, controls, actuation,
                      ti ? &cache : nullptr);
    } catch (const SimulationError&) {
      g.setZero();
      return kInf;
    }
    const Mat grad = control_gradient(model, traj, controls, actuation, spec,
                                      ti ? &cache : nullptr);
    g = Eigen::Map<const Vec>(grad.data(), grad.size());
    return cost_value(traj, spec);
  };
  ValueFn value = [&, rows, cols](const Vec& v) -> double {
    const Mat controls = Eigen::Map<const Mat>(v.data(), rows, cols);
    try {
      return cost_value(simulate(model, scheme, x0, controls, actuation),
                        spec);
    } catch (const SimulationError&) {
      return kInf;
    }
  };

  const Vec v0 = Eigen::Map<const Vec>(warm_start.data(), warm_start.size());
  ReducedSolve out;
  out.nlp = quasi_newton_min(value_grad, value, v0, options);
  out.controls = Eigen::Map<const Mat>(out.nlp.x.data(), rows, cols);
  const Trajectory traj = simulate(model, scheme, x0, out.controls, actuation);
  out.objective = cost_value(traj, spec);
  out.error = control_error(traj, spec.x_desired);
  return out;
}

MinoResult mino_search(const NetworkModel& model, const Scheme& scheme,
                       const Vec& x0, const CostSpec& spec, int budget,
                       BudgetMode mode, const Selection& init,
                       const Mat& init_controls_full,
                       const MinoOptions& options) {
  const int n = model.nodes;
  if (budget < 0 || budget > n) {
    throw InfeasibleError("mino_search: budget outside 0..N");
  }
  Selection incumbent = init;
  incumbent.budget = budget;
  incumbent.mode = mode;
  if (!incumbent.feasible() && incumbent.active_count() != n) {
    throw InfeasibleError(
        "mino_search: initial selection must be feasible or all-ones");
  }
  if (init_controls_full.rows() != n ||
      init_controls_full.cols() != spec.horizon + 1) {
    throw SolverError("mino_search: initial controls must be full width");
  }

  SolveOptions inner = options.solve;
  inner.max_iter = options.inner_iters;

  MinoResult result;
  Mat controls = restrict_controls(init_controls_full, incumbent);
  double best_j = cost_value(
      simulate(model, scheme, x0, controls,
               ActuationMap::reduced(model, incumbent)),
      spec);
  int round = 0;

  // Repair an over-budget start: drop the node whose removal hurts least.
  while (!incumbent.feasible()) {
    ++round;
    const std::vector<int> active = incumbent.active_indices();
    int best_node = -1;
    double best_score = kInf;
    for (int i : active) {
      Selection cand = incumbent;
      cand.pi[i] = 0;
      const Mat cand_controls = map_controls(controls, incumbent, cand);
      double score = kInf;
      try {
        score = cost_value(
            simulate(model, scheme, x0, cand_controls,
                     ActuationMap::reduced(model, cand)),
            spec);
      } catch (const SimulationError&) {
      }
      ++result.evaluations;
      result.trace.push_back({round, cand.bitstring(), score, false});
      if (score < best_score) {
        best_score = score;
        best_node = i;
      }
    }
    if (best_node < 0) {
      throw SolverError("mino_search: every repair candidate failed");
    }
    Selection next = incumbent;
    next.pi[best_node] = 0;
    Mat warm = map_controls(controls, incumbent, next);
    const ReducedSolve solved =
        solve_controls(model, scheme, x0, spec, next, warm, inner);
    ++result.evaluations;
    incumbent = next;
    controls = solved.controls;
    best_j = solved.objective;
    for (auto it = result.trace.rbegin(); it != result.trace.rend(); ++it) {
      if (it->round == round && it->pi == incumbent.bitstring()) {
        it->accepted = true;
        it->inner_j = best_j;
        break;
      }
    }
    log_debug("mino repair: dropped node " + std::to_string(best_node) +
              ", J=" + std::to_string(best_j));
  }

  // Tighten the incumbent controls so poll scores compare against a solved
  // baseline rather than the raw warm start.
  {
    const ReducedSolve tightened =
        solve_controls(model, scheme, x0, spec, incumbent, controls, inner);
    ++result.evaluations;
    controls = tightened.controls;
    best_j = tightened.objective;
  }

  // Local poll over flips and swaps.
  for (int poll = 0; poll < options.max_poll_rounds; ++poll) {
    ++round;
    std::vector<Selection> neighbors;
    const std::vector<int> active = incumbent.active_indices();
    const int count = incumbent.active_count();
    if (mode == BudgetMode::kAtMost) {
      for (int i : active) {
        Selection cand = incumbent;
        cand.pi[i] = 0;
        neighbors.push_back(std::move(cand));
      }
      if (count + 1 <= budget) {
        for (int i = 0; i < n; ++i) {
          if (incumbent.pi[i] != 0) continue;
          Selection cand = incumbent;
          cand.pi[i] = 1;
          neighbors.push_back(std::move(cand));
        }
      }
    }
    for (int a : active) {
      for (int b = 0; b < n; ++b) {
        if (incumbent.pi[b] != 0) continue;
        Selection cand = incumbent;
        cand.pi[a] = 0;
        cand.pi[b] = 1;
        neighbors.push_back(std::move(cand));
      }
    }
    if (neighbors.empty()) break;

    std::vector<Candidate> scored(neighbors.size());
    parallel_for(static_cast<int>(neighbors.size()), options.workers,
                 [&](int idx) {
                   Candidate& cand = scored[static_cast<size_t>(idx)];
                   cand.sel = neighbors[static_cast<size_t>(idx)];
                   const Mat warm =
                       map_controls(controls, incumbent, cand.sel);
                   try {
                     ReducedSolve solved = solve_controls(
                         model, scheme, x0, spec, cand.sel, warm, inner);
                     cand.score = solved.objective;
                     cand.controls = std::move(solved.controls);
                   } catch (const SimulationError&) {
                   } catch (const SolverError&) {
                   }
                 });
    result.evaluations += static_cast<long>(scored.size());

    int best_idx = -1;
    double best_score = kInf;
    for (size_t i = 0; i < scored.size(); ++i) {
      result.trace.push_back(
          {round, scored[i].sel.bitstring(), scored[i].score, false});
      if (scored[i].score < best_score) {
        best_score = scored[i].score;
        best_idx = static_cast<int>(i);
      }
    }
    const double margin =
        options.improve_rtol * std::max(1.0, std::abs(best_j));
    if (best_idx < 0 || !(best_score < best_j - margin)) break;

    incumbent = scored[static_cast<size_t>(best_idx)].sel;
    controls = std::move(scored[static_cast<size_t>(best_idx)].controls);
    best_j = best_score;
    result.trace[result.trace.size() - scored.size() +
                 static_cast<size_t>(best_idx)]
        .accepted = true;
    log_debug("mino poll round " + std::to_string(round) +
              ": accepted " + incumbent.bitstring() +
              ", J=" + std::to_string(best_j));
  }

  // Full-precision solve at the incumbent selection.
  const ReducedSolve final_solve = solve_controls(
      model, scheme, x0, spec, incumbent, controls, options.solve);
  ++result.evaluations;
  result.selection = incumbent;
  result.controls = final_solve.controls;
  result.objective = final_solve.objective;
  result.error = final_solve.error;
  result.final_converged = final_solve.nlp.converged;
  return result;
}

}  // namespace netctl
