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

#include "netctl/solvers.hpp"

#include <cmath>
#include <deque>
#include <limits>

#include "netctl/errors.hpp"

namespace netctl {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Pair {
  Vec s, y;
  double rho;
};

// Two-loop recursion: d = -H g with H built from the stored pairs and the
// gamma-scaled identity seed.
Vec lbfgs_direction(const Vec& g, const std::deque<Pair>& pairs,
                    double gamma) {
  Vec q = g;
  std::vector<double> a(pairs.size());
  for (size_t i = pairs.size(); i-- > 0;) {
    a[i] = pairs[i].rho * pairs[i].s.dot(q);
    q -= a[i] * pairs[i].y;
  }
  q *= gamma;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const double b = pairs[i].rho * pairs[i].y.dot(q);
    q += (a[i] - b) * pairs[i].s;
  }
  return -q;
}

double eval_value(const ValueGradFn& value_grad, const ValueFn& value,
                  const Vec& x) {
  if (value) return value(x);
  Vec scratch(x.size());
  return value_grad(x, scratch);
}

Vec project(const Vec& x, const Vec* lower, const Vec* upper) {
  if (lower == nullptr) return x;
  return x.cwiseMax(*lower).cwiseMin(*upper);
}

// Shared descent loop.  With bounds, iterates follow the projected path
// P(x + t d) and stationarity is the projected gradient norm.
NlpResult descend(const ValueGradFn& value_grad, const ValueFn& value,
                  const Vec& x_init, const Vec* lower, const Vec* upper,
                  const SolveOptions& opt) {
  Vec x = project(x_init, lower, upper);
  Vec g(x.size());
  double fx = value_grad(x, g);
  if (!std::isfinite(fx)) {
    throw SolverError("descent started at a point with non-finite objective");
  }

  auto stationarity = [&](const Vec& xc, const Vec& gc) {
    if (lower == nullptr) return gc.lpNorm<Eigen::Infinity>();
    return (xc - project(xc - gc, lower, upper)).lpNorm<Eigen::Infinity>();
  };

  NlpResult result;
  result.x = x;
  result.objective = fx;
  result.grad_norm = stationarity(x, g);
  if (result.grad_norm < opt.tol_grad) {
    result.converged = true;
    return result;
  }

  std::deque<Pair> pairs;
  double gamma = 1.0;
  bool steepest_retry = false;

  for (int iter = 1; iter <= opt.max_iter; ++iter) {
    Vec d = lbfgs_direction(g, pairs, gamma);
    if (!d.allFinite() || d.dot(g) >= 0.0) {
      pairs.clear();
      d = -g;
    }

    // Backtracking line search; trials are function-only.
    double t = 1.0;
    Vec x_new;
    double f_new = kInf;
    bool accepted = false;
    for (int bt = 0; bt <= opt.max_backtracks; ++bt) {
      x_new = lower == nullptr ? Vec(x + t * d)
                               : project(x + t * d, lower, upper);
      const double decrease = g.dot(x_new - x);
      if (decrease < 0.0) {
        f_new = eval_value(value_grad, value, x_new);
        if (f_new <= fx + opt.armijo_c * decrease) {
          accepted = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (!pairs.empty() && !steepest_retry) {
        // Retry once from a steepest-descent direction before giving up.
        pairs.clear();
        steepest_retry = true;
        --iter;
        continue;
      }
      result.iterations = iter - 1;
      result.converged = false;
      return result;
    }
    steepest_retry = false;

    Vec g_new(x.size());
    const double f_check = value_grad(x_new, g_new);
    // Line-search trials may have used a value-only callable; keep the
    // authoritative value from the gradient evaluation.
    f_new = f_check;

    const Vec s = x_new - x;
    const Vec y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      pairs.push_back({s, y, 1.0 / sy});
      if (static_cast<int>(pairs.size()) > opt.memory) pairs.pop_front();
      gamma = sy / y.squaredNorm();
    }

    x = x_new;
    g = g_new;
    fx = f_new;
    result.x = x;
    result.objective = fx;
    result.iterations = iter;
    result.grad_norm = stationarity(x, g);
    if (result.grad_norm < opt.tol_grad) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

}  // namespace

NlpResult quasi_newton_min(const ValueGradFn& value_grad, const ValueFn& value,
                           const Vec& x_init, const SolveOptions& options) {
  if (!x_init.allFinite()) {
    throw SolverError("quasi_newton_min: initial point is not finite");
  }
  return descend(value_grad, value, x_init, nullptr, nullptr, options);
}

NlpResult bounded_min(const ValueGradFn& value_grad, const ValueFn& value,
                      const Vec& x_init, const Vec& lower, const Vec& upper,
                      const SolveOptions& options) {
  if (lower.size() != x_init.size() || upper.size() != x_init.size()) {
    throw SolverError("bounded_min: bound dimensions do not match");
  }
  for (Eigen::Index i = 0; i < x_init.size(); ++i) {
    if (!(lower[i] <= x_init[i] && x_init[i] <= upper[i])) {
      throw SolverError("bounded_min: initial point violates the bounds");
    }
  }
  return descend(value_grad, value, x_init, &lower, &upper, options);
}

}  // namespace netctl
