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

#include "netctl/cost.hpp"

#include "netctl/errors.hpp"

namespace netctl {

void CostSpec::validate(int state_dim) const {
  if (horizon < 1) throw Error("cost: horizon must be at least 1");
  if (x_desired.size() != state_dim) {
    throw Error("cost: desired state has the wrong dimension");
  }
  if (!weights.empty() && weights.size() != 1 &&
      weights.size() != static_cast<size_t>(horizon)) {
    throw Error("cost: need 0, 1, or T weight matrices");
  }
  for (const Mat& q : weights) {
    if (q.rows() != state_dim || q.cols() != state_dim) {
      throw Error("cost: weight matrix has the wrong dimension");
    }
    if ((q - q.transpose()).lpNorm<Eigen::Infinity>() >
        1e-12 * (1.0 + q.lpNorm<Eigen::Infinity>())) {
      throw Error("cost: weight matrix is not symmetric");
    }
  }
}

double cost_value(const Trajectory& traj, const CostSpec& spec) {
  const int t = traj.horizon();
  if (t != spec.horizon) {
    throw Error("cost: trajectory horizon does not match the cost spec");
  }
  double j = 0.0;
  for (int i = 1; i <= t; ++i) {
    const Vec r = spec.x_desired - traj.states[static_cast<size_t>(i)];
    const Mat* q = spec.weight_at(i);
    j += q == nullptr ? r.squaredNorm() : r.dot(*q * r);
  }
  return j;
}

double control_error(const Trajectory& traj, const Vec& x_desired) {
  return (x_desired - traj.states.back()).norm();
}

std::vector<double> error_curve(const Trajectory& traj, const Vec& x_desired) {
  std::vector<double> e;
  e.reserve(traj.states.size());
  for (const Vec& x : traj.states) e.push_back((x_desired - x).norm());
  return e;
}

}  // namespace netctl
