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

#ifndef NETCTL_COST_HPP_
#define NETCTL_COST_HPP_

#include <vector>

#include "netctl/model.hpp"
#include "netctl/sim.hpp"

namespace netctl {

// Tracking cost over a horizon of T steps:
//
//   J = sum_{i=1..T} (x_D - x_i)^T Q_i (x_D - x_i)
//
// The initial state x_0 is excluded.  `weights` holds Q_1..Q_T: empty means
// identity for every step, a single entry is shared across steps.
struct CostSpec {
  Vec x_desired;
  int horizon = 1;  // T
  std::vector<Mat> weights;

  // Q_i for step i in 1..T; nullptr encodes identity.
  const Mat* weight_at(int i) const {
    if (weights.empty()) return nullptr;
    if (weights.size() == 1) return &weights.front();
    return &weights[static_cast<size_t>(i - 1)];
  }
  void validate(int state_dim) const;
};

double cost_value(const Trajectory& traj, const CostSpec& spec);

// Final control error ||x_D - x_T||_2.
double control_error(const Trajectory& traj, const Vec& x_desired);

// Per-step error curve e_k = ||x_D - x_k||_2, k = 0..T.
std::vector<double> error_curve(const Trajectory& traj, const Vec& x_desired);

}  // namespace netctl

#endif  // NETCTL_COST_HPP_
