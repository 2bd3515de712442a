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

#include "netctl/selection.hpp"

#include <algorithm>
#include <numeric>

#include "netctl/errors.hpp"

namespace netctl {

std::vector<int> Selection::active_indices() const {
  std::vector<int> idx;
  idx.reserve(static_cast<size_t>(active_count()));
  for (int i = 0; i < size(); ++i) {
    if (pi[i] != 0) idx.push_back(i);
  }
  return idx;
}

std::string Selection::bitstring() const {
  std::string s(static_cast<size_t>(size()), '0');
  for (int i = 0; i < size(); ++i) {
    if (pi[i] != 0) s[static_cast<size_t>(i)] = '1';
  }
  return s;
}

Selection make_selection(int n, const std::vector<int>& active, int budget,
                         BudgetMode mode) {
  Selection sel;
  sel.pi = Eigen::VectorXi::Zero(n);
  for (int i : active) {
    if (i < 0 || i >= n) throw InfeasibleError("selection index out of range");
    sel.pi[i] = 1;
  }
  sel.budget = budget;
  sel.mode = mode;
  return sel;
}

Selection all_ones_selection(int n, int budget, BudgetMode mode) {
  Selection sel;
  sel.pi = Eigen::VectorXi::Ones(n);
  sel.budget = budget;
  sel.mode = mode;
  return sel;
}

Selection round_selection(const Eigen::VectorXd& alpha, int budget,
                          BudgetMode mode) {
  const int n = static_cast<int>(alpha.size());
  if (budget < 0 || (mode == BudgetMode::kExactly && budget > n)) {
    throw InfeasibleError("round_selection: budget infeasible for N nodes");
  }
  for (int i = 0; i < n; ++i) {
    if (!(alpha[i] >= 0.0 && alpha[i] <= 1.0)) {
      throw InfeasibleError("round_selection: alpha outside the unit box");
    }
  }
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return alpha[a] > alpha[b]; });

  Selection sel;
  sel.pi = Eigen::VectorXi::Zero(n);
  sel.budget = budget;
  sel.mode = mode;
  int taken = 0;
  for (int i : order) {
    if (taken >= budget) break;
    if (mode == BudgetMode::kAtMost && !(alpha[i] > 0.5)) break;
    sel.pi[i] = 1;
    ++taken;
  }
  return sel;
}

}  // namespace netctl
