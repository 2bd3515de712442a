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

#ifndef NETCTL_SELECTION_HPP_
#define NETCTL_SELECTION_HPP_

#include <Eigen/Core>
#include <string>
#include <vector>

namespace netctl {

// Budget semantics: AtMost caps the number of control nodes, Exactly pins it
// (the fixed-fraction experiments).
enum class BudgetMode { kAtMost, kExactly };

// Binary actuation vector with its budget.
struct Selection {
  Eigen::VectorXi pi;  // entries in {0,1}
  int budget = 0;
  BudgetMode mode = BudgetMode::kAtMost;

  int size() const { return static_cast<int>(pi.size()); }
  int active_count() const { return pi.sum(); }
  std::vector<int> active_indices() const;
  bool feasible() const {
    int m = active_count();
    return mode == BudgetMode::kAtMost ? m <= budget : m == budget;
  }
  // "0"/"1" characters, node 0 first.
  std::string bitstring() const;
};

Selection make_selection(int n, const std::vector<int>& active, int budget,
                         BudgetMode mode);
Selection all_ones_selection(int n, int budget, BudgetMode mode);

// L1-closest feasible rounding of a relaxed selection: minimizes
// sum_i |pi_i - alpha_i| subject to the budget.  Activating node i changes
// the objective by 1 - 2*alpha_i, so the exact solution keeps the largest
// alphas: AtMost takes entries with alpha > 0.5 in decreasing-alpha order up
// to the budget, Exactly takes the top `budget` entries unconditionally.
// Ties broken by lowest node index.
Selection round_selection(const Eigen::VectorXd& alpha, int budget,
                          BudgetMode mode);

}  // namespace netctl

#endif  // NETCTL_SELECTION_HPP_
