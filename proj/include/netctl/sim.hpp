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

#ifndef NETCTL_SIM_HPP_
#define NETCTL_SIM_HPP_

#include <Eigen/LU>
#include <vector>

#include "netctl/model.hpp"

namespace netctl {

enum class SchemeKind { kFe, kTi };

struct Scheme {
  SchemeKind kind = SchemeKind::kTi;
  double h = 1e-2;
  // Newton settings, used by the TI scheme only.
  double newton_tol = 1e-10;
  int newton_max_iter = 50;
};

struct Trajectory {
  std::vector<Vec> states;  // x_0 .. x_T
  Scheme scheme;
  int horizon() const { return static_cast<int>(states.size()) - 1; }
};

// Factorizations of the Newton matrices I - (h/2) J from a TI forward pass,
// one per step 1..T; the adjoint pass reuses them instead of refactorizing.
// valid[k-1] is false when step k converged before its first factorization.
struct TiCache {
  std::vector<Eigen::PartialPivLU<Mat>> lu;
  std::vector<char> valid;
};

// One explicit Euler step x + h (f(x) + B z).  `bz` is the already
// accumulated actuation term B z.  Throws SimulationError on a non-finite
// result, naming `step`.
Vec fe_step_core(const NetworkModel& model, const Vec& x, const Vec& bz,
                 double h, int step);
Vec fe_step(const NetworkModel& model, const Vec& x, const Vec& z,
            const Selection& sel, double h, int step = -1);

// One trapezoidal implicit step: solves
//   x = x_prev + (h/2) (f(x) + f(x_prev)) + (h/2) (B z_prev + B z_cur)
// by Newton's method warm-started at the forward-Euler predictor.  `bz_sum`
// is B z_prev + B z_cur.  On success optionally hands out the last Newton
// factorization through `cache` at slot `step - 1`.
Vec ti_step_core(const NetworkModel& model, const Vec& x_prev,
                 const Vec& bz_sum, const Scheme& scheme, int step,
                 TiCache* cache = nullptr);
Vec ti_step(const NetworkModel& model, const Vec& x_prev, const Vec& z_prev,
            const Vec& z_cur, const Selection& sel, const Scheme& scheme,
            int step = -1);

// Rolls the scheme forward for T = controls.cols() - 1 steps.  The control
// matrix has one column per grid point and its width must match the
// actuation map (N parametrized, M reduced).
Trajectory simulate(const NetworkModel& model, const Scheme& scheme,
                    const Vec& x0, const Mat& controls,
                    const ActuationMap& actuation, TiCache* cache = nullptr);
// Parametrized convenience overloads.
Trajectory simulate(const NetworkModel& model, const Scheme& scheme,
                    const Vec& x0, const Mat& controls, const Selection& sel);
Trajectory simulate(const NetworkModel& model, const Scheme& scheme,
                    const Vec& x0, const Mat& controls, const Vec& weights);

// Classic fixed-step RK4 accuracy oracle with zero-order-hold inputs.
// Integrates steps_out coarse steps of length h_out, each refined into
// h_out / h_fine RK4 substeps (the ratio must be integral), and returns the
// trajectory on the coarse grid.
Trajectory reference_solve(const NetworkModel& model, const Vec& x0,
                           const Mat& controls, const ActuationMap& actuation,
                           double h_fine, double h_out, int steps_out);

struct SteadyState {
  Vec state;
  bool converged = false;
  long steps = 0;
};

// Simulates the uncontrolled dynamics until the per-step increment drops
// below `tol` in sup norm, or `max_steps` is hit (flagged non-converged).
SteadyState steady_state(const NetworkModel& model, const Scheme& scheme,
                         const Vec& x_start, double tol = 1e-7,
                         long max_steps = 1000000);

}  // namespace netctl

#endif  // NETCTL_SIM_HPP_
