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

#ifndef NETCTL_SOLVERS_HPP_
#define NETCTL_SOLVERS_HPP_

#include <functional>

#include "netctl/model.hpp"

namespace netctl {

// f(x); may return +inf (or NaN) for points where the underlying simulation
// blows up — the line search treats both as "worse".
using ValueFn = std::function<double(const Vec&)>;
// f(x) with the gradient written to the second argument.
using ValueGradFn = std::function<double(const Vec&, Vec&)>;

struct SolveOptions {
  double tol_grad = 1e-6;  // sup norm of the (projected) gradient
  int max_iter = 500;
  int memory = 10;
  double armijo_c = 1e-4;
  int max_backtracks = 60;
};

struct NlpResult {
  Vec x;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  double grad_norm = 0.0;
};

// Limited-memory quasi-Newton descent (rank-two secant updates) with a
// backtracking Armijo line search; step halving, function-only trials,
// monotone non-increasing objective.  Stops at ||grad||_inf < tol_grad or
// max_iter; an exhausted line search returns the best iterate flagged
// not-converged.  `value`, when provided, avoids gradient work during line
// search trials.
NlpResult quasi_newton_min(const ValueGradFn& value_grad, const ValueFn& value,
                           const Vec& x_init, const SolveOptions& options);

// Same machinery projected onto box bounds (entries may be +-inf).
// Stationarity is the projected gradient norm ||x - P(x - g)||_inf.
NlpResult bounded_min(const ValueGradFn& value_grad, const ValueFn& value,
                      const Vec& x_init, const Vec& lower, const Vec& upper,
                      const SolveOptions& options);

}  // namespace netctl

#endif  // NETCTL_SOLVERS_HPP_
