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

#include "netctl/sim.hpp"

#include <cmath>
#include <string>

#include "netctl/errors.hpp"

namespace netctl {
namespace {

bool all_finite(const Vec& x) { return x.allFinite(); }

std::string step_tag(int step) {
  return step >= 0 ? " at step " + std::to_string(step) : "";
}

Vec weights_of(const Selection& sel) { return sel.pi.cast<double>(); }

}  // namespace

Vec fe_step_core(const NetworkModel& model, const Vec& x, const Vec& bz,
                 double h, int step) {
  Vec fx = model.drift(x);
  fx += bz;
  Vec next = x + h * fx;
  if (!all_finite(next)) {
    throw SimulationError(
        SimulationError::Kind::kOverflow, step,
        "forward Euler overflow (non-finite state)" + step_tag(step) +
            "; the explicit scheme is unstable at this step size");
  }
  return next;
}

Vec fe_step(const NetworkModel& model, const Vec& x, const Vec& z,
            const Selection& sel, double h, int step) {
  ActuationMap map = ActuationMap::parametrized(model, weights_of(sel));
  Vec bz = Vec::Zero(model.state_dim());
  Mat zc = z;
  map.accumulate(zc, 0, bz);
  return fe_step_core(model, x, bz, h, step);
}

Vec ti_step_core(const NetworkModel& model, const Vec& x_prev,
                 const Vec& bz_sum, const Scheme& scheme, int step,
                 TiCache* cache) {
  const double h = scheme.h;
  const Vec f_prev = model.drift(x_prev);
  // Constant part of the residual: x_prev + (h/2) (f(x_prev) + bz_sum).
  Vec c = x_prev + (h / 2.0) * (f_prev + bz_sum);
  // Forward-Euler predictor with the averaged input.
  Vec x = x_prev + h * (f_prev + 0.5 * bz_sum);

  bool factored = false;
  Eigen::PartialPivLU<Mat> lu;
  double res_norm = 0.0;
  for (int iter = 0; iter <= scheme.newton_max_iter; ++iter) {
    Vec r = x - c - (h / 2.0) * model.drift(x);
    if (!all_finite(r)) {
      throw SimulationError(
          SimulationError::Kind::kOverflow, step,
          "trapezoidal step produced a non-finite residual" + step_tag(step));
    }
    res_norm = r.lpNorm<Eigen::Infinity>();
    if (res_norm < scheme.newton_tol) {
      if (cache != nullptr && factored && step >= 1) {
        cache->lu[static_cast<size_t>(step - 1)] = std::move(lu);
        cache->valid[static_cast<size_t>(step - 1)] = 1;
      }
      return x;
    }
    if (iter == scheme.newton_max_iter) break;
    Mat m = -(h / 2.0) * model.jacobian(x);
    m.diagonal().array() += 1.0;
    lu.compute(m);
    factored = true;
    Vec dx = lu.solve(r);
    if (!all_finite(dx)) {
      throw SimulationError(
          SimulationError::Kind::kSingularMatrix, step,
          "singular Newton matrix in trapezoidal step" + step_tag(step));
    }
    x -= dx;
  }
  throw SimulationError(
      SimulationError::Kind::kNewtonDivergence, step,
      "Newton iteration did not converge" + step_tag(step) +
          " (last residual " + std::to_string(res_norm) + ")");
}

Vec ti_step(const NetworkModel& model, const Vec& x_prev, const Vec& z_prev,
            const Vec& z_cur, const Selection& sel, const Scheme& scheme,
            int step) {
  ActuationMap map = ActuationMap::parametrized(model, weights_of(sel));
  Vec bz = Vec::Zero(model.state_dim());
  Mat zp = z_prev;
  Mat zc = z_cur;
  map.accumulate(zp, 0, bz);
  map.accumulate(zc, 0, bz);
  return ti_step_core(model, x_prev, bz, scheme, step);
}

Trajectory simulate(const NetworkModel& model, const Scheme& scheme,
                    const Vec& x0, const Mat& controls,
                    const ActuationMap& actuation, TiCache* cache) {
  if (controls.cols() < 1) {
    throw Error("simulate: controls must span at least one grid point");
  }
  if (controls.rows() != actuation.width) {
    throw Error("simulate: control width does not match the actuation map");
  }
  if (x0.size() != model.state_dim()) {
    throw Error("simulate: initial state has the wrong dimension");
  }
  const int horizon = static_cast<int>(controls.cols()) - 1;

  Trajectory traj;
  traj.scheme = scheme;
  traj.states.reserve(static_cast<size_t>(horizon) + 1);
  traj.states.push_back(x0);
  if (cache != nullptr) {
    cache->lu.assign(static_cast<size_t>(horizon), {});
    cache->valid.assign(static_cast<size_t>(horizon), 0);
  }

  for (int k = 1; k <= horizon; ++k) {
    const Vec& prev = traj.states.back();
    Vec bz = Vec::Zero(model.state_dim());
    if (scheme.kind == SchemeKind::kFe) {
      actuation.accumulate(controls, k - 1, bz);
      traj.states.push_back(fe_step_core(model, prev, bz, scheme.h, k));
    } else {
      actuation.accumulate(controls, k - 1, bz);
      actuation.accumulate(controls, k, bz);
      traj.states.push_back(ti_step_core(model, prev, bz, scheme, k, cache));
    }
  }
  return traj;
}

Trajectory simulate(const NetworkModel& model, const Scheme& scheme,
                    const Vec& x0, const Mat& controls, const Selection& sel) {
  return simulate(model, scheme, x0, controls,
                  ActuationMap::parametrized(model, weights_of(sel)));
}

Trajectory simulate(const NetworkModel& model, const Scheme& scheme,
                    const Vec& x0, const Mat& controls, const Vec& weights) {
  return simulate(model, scheme, x0, controls,
                  ActuationMap::parametrized(model, weights));
}

Trajectory reference_solve(const NetworkModel& model, const Vec& x0,
                           const Mat& controls, const ActuationMap& actuation,
                           double h_fine, double h_out, int steps_out) {
  if (h_fine <= 0.0 || h_out <= 0.0) {
    throw Error("reference_solve: step sizes must be positive");
  }
  const double ratio = h_out / h_fine;
  const long sub = std::lround(ratio);
  if (sub < 1 || std::abs(ratio - static_cast<double>(sub)) > 1e-9 * ratio) {
    throw Error("reference_solve: h_fine must divide the output step");
  }
  if (controls.cols() < steps_out + 1) {
    throw Error("reference_solve: controls shorter than the output horizon");
  }

  Trajectory traj;
  traj.scheme.kind = SchemeKind::kFe;  // tag only; states come from RK4
  traj.scheme.h = h_out;
  traj.states.reserve(static_cast<size_t>(steps_out) + 1);
  traj.states.push_back(x0);

  Vec x = x0;
  for (int k = 0; k < steps_out; ++k) {
    Vec bu = Vec::Zero(model.state_dim());
    actuation.accumulate(controls, k, bu);
    for (long s = 0; s < sub; ++s) {
      const Vec k1 = model.drift(x) + bu;
      const Vec k2 = model.drift(x + (h_fine / 2.0) * k1) + bu;
      const Vec k3 = model.drift(x + (h_fine / 2.0) * k2) + bu;
      const Vec k4 = model.drift(x + h_fine * k3) + bu;
      x += (h_fine / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (!all_finite(x)) {
      throw SimulationError(SimulationError::Kind::kOverflow, k + 1,
                            "reference integrator overflow at step " +
                                std::to_string(k + 1));
    }
    traj.states.push_back(x);
  }
  return traj;
}

SteadyState steady_state(const NetworkModel& model, const Scheme& scheme,
                         const Vec& x_start, double tol, long max_steps) {
  SteadyState out;
  out.state = x_start;
  const Vec bz = Vec::Zero(model.state_dim());
  for (long k = 0; k < max_steps; ++k) {
    Vec next = scheme.kind == SchemeKind::kFe
                   ? fe_step_core(model, out.state, bz, scheme.h,
                                  static_cast<int>(k + 1))
                   : ti_step_core(model, out.state, bz, scheme,
                                  static_cast<int>(k + 1));
    const double inc = (next - out.state).lpNorm<Eigen::Infinity>();
    out.state = std::move(next);
    out.steps = k + 1;
    if (inc < tol) {
      out.converged = true;
      return out;
    }
  }
  out.converged = false;
  return out;
}

}  // namespace netctl
