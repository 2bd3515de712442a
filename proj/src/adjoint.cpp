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

#include "netctl/adjoint.hpp"

#include <algorithm>
#include <cmath>

#include "netctl/errors.hpp"
#include "netctl/workers.hpp"

namespace netctl {
namespace {

// Q_k r with identity fast path.
Vec apply_weight(const CostSpec& spec, int k, const Vec& r) {
  const Mat* q = spec.weight_at(k);
  return q == nullptr ? r : Vec(*q * r);
}

Mat fe_gradient(const NetworkModel& model, const Trajectory& traj,
                const ActuationMap& actuation, const CostSpec& spec) {
  const int t = traj.horizon();
  const double h = traj.scheme.h;
  Mat grad = Mat::Zero(actuation.width, t + 1);

  // lambda starts as dJ/dx_T and walks backward.
  Vec lambda = -2.0 * apply_weight(
                          spec, t, spec.x_desired - traj.states.back());
  for (int k = t - 1; k >= 0; --k) {
    actuation.accumulate_transpose(lambda, h, grad, k);
    if (k >= 1) {
      const Vec& xk = traj.states[static_cast<size_t>(k)];
      const Mat jac = model.jacobian(xk);
      lambda += h * (jac.transpose() * lambda);
      lambda -= 2.0 * apply_weight(spec, k, spec.x_desired - xk);
    }
  }
  return grad;
}

Mat ti_gradient(const NetworkModel& model, const Trajectory& traj,
                const ActuationMap& actuation, const CostSpec& spec,
                const TiCache* cache) {
  const int t = traj.horizon();
  const double h = traj.scheme.h;
  Mat grad = Mat::Zero(actuation.width, t + 1);

  // With M_k = I - (h/2) J(x_k), the multiplier recursion collapses onto
  // s_k = lambda_k + lambda_{k+1}:
  //   M_k^T s_k = 2 (Q_k r_k + lambda_{k+1}),  lambda_k = s_k - lambda_{k+1}
  // and dJ/dz_k = -(h/2) B^T s_k for k >= 1, dJ/dz_0 = -(h/2) B^T lambda_1.
  Vec lambda = Vec::Zero(traj.states.back().size());  // lambda_{T+1}
  for (int k = t; k >= 1; --k) {
    const Vec& xk = traj.states[static_cast<size_t>(k)];
    Vec rhs = 2.0 * (apply_weight(spec, k, spec.x_desired - xk) + lambda);
    Vec s;
    if (cache != nullptr && cache->valid[static_cast<size_t>(k - 1)]) {
      s = cache->lu[static_cast<size_t>(k - 1)].transpose().solve(rhs);
    } else {
      Mat m = -(h / 2.0) * model.jacobian(xk);
      m.diagonal().array() += 1.0;
      s = m.transpose().partialPivLu().solve(rhs);
    }
    actuation.accumulate_transpose(s, -h / 2.0, grad, k);
    lambda = s - lambda;  // now lambda_k
  }
  actuation.accumulate_transpose(lambda, -h / 2.0, grad, 0);
  return grad;
}

}  // namespace

Mat control_gradient(const NetworkModel& model, const Trajectory& traj,
                     const Mat& controls, const ActuationMap& actuation,
                     const CostSpec& spec, const TiCache* cache) {
  if (controls.cols() != traj.horizon() + 1 ||
      controls.rows() != actuation.width) {
    throw Error("control_gradient: control shape does not match trajectory");
  }
  return traj.scheme.kind == SchemeKind::kFe
             ? fe_gradient(model, traj, actuation, spec)
             : ti_gradient(model, traj, actuation, spec, cache);
}

Mat control_gradient(const NetworkModel& model, const Scheme& scheme,
                     const Vec& x0, const Mat& controls,
                     const ActuationMap& actuation, const CostSpec& spec) {
  TiCache cache;
  Trajectory traj = simulate(model, scheme, x0, controls, actuation,
                             scheme.kind == SchemeKind::kTi ? &cache : nullptr);
  return control_gradient(model, traj, controls, actuation, spec,
                          scheme.kind == SchemeKind::kTi ? &cache : nullptr);
}

GradientReport check_gradient(const NetworkModel& model, const Scheme& scheme,
                              const Vec& x0, const Mat& controls,
                              const ActuationMap& actuation,
                              const CostSpec& spec, double fd_step,
                              int workers) {
  if (fd_step <= 0.0) throw Error("check_gradient: fd_step must be positive");

  GradientReport report;
  report.gradient = control_gradient(model, scheme, x0, controls, actuation,
                                     spec);
  report.fd_gradient = Mat::Zero(controls.rows(), controls.cols());

  const auto total =
      static_cast<int>(controls.rows()) * static_cast<int>(controls.cols());
  const auto width = static_cast<int>(controls.rows());
  parallel_for(total, workers, [&](int idx) {
    const int row = idx % width;
    const int col = idx / width;
    Mat perturbed = controls;
    perturbed(row, col) = controls(row, col) + fd_step;
    const double plus = cost_value(
        simulate(model, scheme, x0, perturbed, actuation), spec);
    perturbed(row, col) = controls(row, col) - fd_step;
    const double minus = cost_value(
        simulate(model, scheme, x0, perturbed, actuation), spec);
    report.fd_gradient(row, col) = (plus - minus) / (2.0 * fd_step);
  });

  double worst = 0.0;
  for (int c = 0; c < controls.cols(); ++c) {
    for (int r = 0; r < width; ++r) {
      const double fd = report.fd_gradient(r, c);
      const double err = std::abs(report.gradient(r, c) - fd) /
                         std::max(1.0, std::abs(fd));
      worst = std::max(worst, err);
    }
  }
  report.max_rel_error = worst;
  return report;
}

RelaxedEval relaxed_eval(const NetworkModel& model, const Scheme& scheme,
                         const Vec& x0, const Mat& controls, const Vec& alpha,
                         const CostSpec& spec, bool with_gradient) {
  const ActuationMap actuation = ActuationMap::parametrized(model, alpha);
  TiCache cache;
  const bool ti = scheme.kind == SchemeKind::kTi;
  Trajectory traj =
      simulate(model, scheme, x0, controls, actuation, ti ? &cache : nullptr);

  RelaxedEval eval;
  eval.value = cost_value(traj, spec);
  if (!with_gradient) return eval;

  eval.grad_controls = control_gradient(model, traj, controls, actuation,
                                        spec, ti ? &cache : nullptr);
  eval.grad_alpha = Vec::Zero(model.nodes);

  const int t = traj.horizon();
  const double h = scheme.h;
  // Replay the adjoint recursion to collect the per-node multipliers.
  if (!ti) {
    Vec lambda = -2.0 * apply_weight(
                            spec, t, spec.x_desired - traj.states.back());
    for (int k = t - 1; k >= 0; --k) {
      for (int i = 0; i < model.nodes; ++i) {
        eval.grad_alpha[i] += h * controls(i, k) * lambda[model.input_row(i)];
      }
      if (k >= 1) {
        const Vec& xk = traj.states[static_cast<size_t>(k)];
        const Mat jac = model.jacobian(xk);
        lambda += h * (jac.transpose() * lambda);
        lambda -= 2.0 * apply_weight(spec, k, spec.x_desired - xk);
      }
    }
  } else {
    Vec lambda = Vec::Zero(x0.size());  // lambda_{T+1}
    for (int k = t; k >= 1; --k) {
      const Vec& xk = traj.states[static_cast<size_t>(k)];
      Vec rhs = 2.0 * (apply_weight(spec, k, spec.x_desired - xk) + lambda);
      Vec s;
      if (cache.valid[static_cast<size_t>(k - 1)]) {
        s = cache.lu[static_cast<size_t>(k - 1)].transpose().solve(rhs);
      } else {
        Mat m = -(h / 2.0) * model.jacobian(xk);
        m.diagonal().array() += 1.0;
        s = m.transpose().partialPivLu().solve(rhs);
      }
      lambda = s - lambda;  // lambda_k
      for (int i = 0; i < model.nodes; ++i) {
        eval.grad_alpha[i] += -(h / 2.0) *
                              (controls(i, k - 1) + controls(i, k)) *
                              lambda[model.input_row(i)];
      }
    }
  }
  return eval;
}

}  // namespace netctl
