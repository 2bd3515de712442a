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

#ifndef NETCTL_ADJOINT_HPP_
#define NETCTL_ADJOINT_HPP_

#include "netctl/cost.hpp"
#include "netctl/model.hpp"
#include "netctl/sim.hpp"

namespace netctl {

// Exact gradient of cost_value(simulate(...)) with respect to the flattened
// control sequence, via the discrete adjoint of the chosen scheme.
//
// Forward Euler: with lambda_k = dJ/dx_k,
//   lambda_T = -2 Q_T (x_D - x_T)
//   lambda_k = (I + h J(x_k))^T lambda_{k+1} - 2 Q_k (x_D - x_k)
//   dJ/dz_k  = h B^T lambda_{k+1},  dJ/dz_T = 0.
//
// Trapezoidal implicit: with multipliers lambda_k of the step equations,
//   (I - (h/2) J(x_k))^T lambda_k = 2 Q_k (x_D - x_k)
//                                   + (I + (h/2) J(x_k))^T lambda_{k+1}
//   dJ/dz_k  = -(h/2) B^T (lambda_k + lambda_{k+1})
// with lambda_{T+1} = lambda_0 = 0; z_T picks up -(h/2) B^T lambda_T.
//
// `traj` must be the trajectory of `controls` under the same actuation map;
// `cache` (optional) reuses the forward pass's Newton factorizations.
Mat control_gradient(const NetworkModel& model, const Trajectory& traj,
                     const Mat& controls, const ActuationMap& actuation,
                     const CostSpec& spec, const TiCache* cache = nullptr);

// Simulates internally, then differentiates.
Mat control_gradient(const NetworkModel& model, const Scheme& scheme,
                     const Vec& x0, const Mat& controls,
                     const ActuationMap& actuation, const CostSpec& spec);

struct GradientReport {
  Mat gradient;
  Mat fd_gradient;
  double max_rel_error = 0.0;  // denominator max(1, |fd entry|)
};

// Central finite differences per flattened coordinate against the adjoint
// gradient.  `workers` parallelizes over coordinates.
GradientReport check_gradient(const NetworkModel& model, const Scheme& scheme,
                              const Vec& x0, const Mat& controls,
                              const ActuationMap& actuation,
                              const CostSpec& spec, double fd_step,
                              int workers = 1);

// Value and gradient of the relaxed joint problem: inputs enter as B(alpha) z
// with alpha in [0,1]^N.  grad_alpha_i accumulates the adjoint against the
// control history of node i.
struct RelaxedEval {
  double value = 0.0;
  Mat grad_controls;  // N x (T+1)
  Vec grad_alpha;     // N
};
RelaxedEval relaxed_eval(const NetworkModel& model, const Scheme& scheme,
                         const Vec& x0, const Mat& controls, const Vec& alpha,
                         const CostSpec& spec, bool with_gradient);

}  // namespace netctl

#endif  // NETCTL_ADJOINT_HPP_
