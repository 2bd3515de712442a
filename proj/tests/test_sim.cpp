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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "netctl/duffing.hpp"
#include "netctl/errors.hpp"
#include "netctl/model.hpp"
#include "netctl/rng.hpp"
#include "netctl/sim.hpp"

using netctl::Mat;
using netctl::NetworkModel;
using netctl::Scheme;
using netctl::SchemeKind;
using netctl::Selection;
using netctl::SimulationError;
using netctl::Trajectory;
using netctl::Vec;

namespace {

// Single scalar node x' = a x + u.
NetworkModel linear_node(double a) {
  NetworkModel m;
  m.nodes = 1;
  m.node_dim = 1;
  m.drift = [a](const Vec& x) {
    Vec f(1);
    f[0] = a * x[0];
    return f;
  };
  m.jacobian = [a](const Vec&) {
    Mat j(1, 1);
    j(0, 0) = a;
    return j;
  };
  return m;
}

// Single scalar node x' = -x^3 (smooth, contracting on x > 0).
NetworkModel cubic_node() {
  NetworkModel m;
  m.nodes = 1;
  m.node_dim = 1;
  m.drift = [](const Vec& x) {
    Vec f(1);
    f[0] = -x[0] * x[0] * x[0];
    return f;
  };
  m.jacobian = [](const Vec& x) {
    Mat j(1, 1);
    j(0, 0) = -3.0 * x[0] * x[0];
    return j;
  };
  return m;
}

Selection full_selection(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return netctl::make_selection(n, all, n, netctl::BudgetMode::kExactly);
}

Vec x_scalar(double v) {
  Vec x(1);
  x[0] = v;
  return x;
}

}  // namespace

TEST_CASE("forward Euler reproduces the hand recursion on a linear node") {
  const double a = -2.0, h = 0.05;
  const NetworkModel m = linear_node(a);
  const Selection sel = full_selection(1);
  const int t_steps = 12;
  Mat controls(1, t_steps + 1);
  netctl::Rng rng(4);
  for (int k = 0; k <= t_steps; ++k) controls(0, k) = rng.uniform(-1.0, 1.0);

  Scheme fe{SchemeKind::kFe, h, 1e-10, 50};
  const Trajectory traj = simulate(m, fe, x_scalar(1.0), controls, sel);
  REQUIRE(traj.horizon() == t_steps);
  double x = 1.0;
  for (int k = 0; k < t_steps; ++k) {
    x = x + h * (a * x + controls(0, k));
    CHECK(traj.states[k + 1][0] == x);
  }
}

TEST_CASE("trapezoidal step solves the linear update exactly") {
  const double a = -3.0, h = 0.1;
  const NetworkModel m = linear_node(a);
  const Selection sel = full_selection(1);
  const int t_steps = 10;
  Mat controls(1, t_steps + 1);
  netctl::Rng rng(8);
  for (int k = 0; k <= t_steps; ++k) controls(0, k) = rng.uniform(-1.0, 1.0);

  Scheme ti{SchemeKind::kTi, h, 1e-12, 50};
  const Trajectory traj = simulate(m, ti, x_scalar(0.7), controls, sel);
  double x = 0.7;
  for (int k = 0; k < t_steps; ++k) {
    // (1 - ha/2) x' = (1 + ha/2) x + (h/2)(u_k + u_{k+1})
    const double rhs = (1.0 + 0.5 * h * a) * x +
                       0.5 * h * (controls(0, k) + controls(0, k + 1));
    x = rhs / (1.0 - 0.5 * h * a);
    CHECK(traj.states[k + 1][0] == doctest::Approx(x).epsilon(1e-13));
  }
}

TEST_CASE("stiff decay: explicit scheme overflows, implicit scheme is stable") {
  const double lambda = 1e4, h = 1e-2;
  const NetworkModel m = linear_node(-lambda);
  const Selection sel = full_selection(1);
  const Mat controls = Mat::Zero(1, 301);

  Scheme fe{SchemeKind::kFe, h, 1e-10, 50};
  CHECK_THROWS_AS(simulate(m, fe, x_scalar(1.0), controls, sel),
                  SimulationError);
  try {
    simulate(m, fe, x_scalar(1.0), controls, sel);
  } catch (const SimulationError& e) {
    CHECK(e.kind() == SimulationError::Kind::kOverflow);
    CHECK(e.step() > 0);
  }

  Scheme ti{SchemeKind::kTi, h, 1e-10, 50};
  const Trajectory traj = simulate(m, ti, x_scalar(1.0), controls, sel);
  // |(1 - 50)/(1 + 50)| < 1: the iterates must contract.
  for (int k = 1; k <= traj.horizon(); ++k) {
    CHECK(std::abs(traj.states[k][0]) < std::abs(traj.states[k - 1][0]) + 1e-300);
  }
  CHECK(std::abs(traj.states.back()[0]) < 1.0);
}

TEST_CASE("global error scales at first order for FE and second for TI") {
  const NetworkModel m = cubic_node();
  const Selection sel = full_selection(1);
  const double t_final = 1.0;
  const Vec x0 = x_scalar(1.5);

  const auto pmap = netctl::ActuationMap::reduced(m, sel);
  const Trajectory truth =
      netctl::reference_solve(m, x0, Mat::Zero(1, 2), pmap, 1e-5, t_final, 1);
  const double x_true = truth.states.back()[0];

  auto final_error = [&](SchemeKind kind, double h) {
    const int steps = static_cast<int>(std::lround(t_final / h));
    Scheme s{kind, h, 1e-13, 50};
    const Trajectory traj =
        simulate(m, s, x0, Mat::Zero(1, steps + 1), sel);
    return std::abs(traj.states.back()[0] - x_true);
  };

  const double fe_ratio =
      final_error(SchemeKind::kFe, 0.02) / final_error(SchemeKind::kFe, 0.01);
  const double ti_ratio =
      final_error(SchemeKind::kTi, 0.02) / final_error(SchemeKind::kTi, 0.01);
  // Halving h should scale the error by 2 resp. 4, within +-0.3 in log2.
  CHECK(std::abs(std::log2(fe_ratio) - 1.0) < 0.3);
  CHECK(std::abs(std::log2(ti_ratio) - 2.0) < 0.3);
}

TEST_CASE("reference solver reproduces the exact zero-order-hold response") {
  const double a = -1.3;
  const NetworkModel m = linear_node(a);
  const Selection sel = full_selection(1);
  const auto amap = netctl::ActuationMap::reduced(m, sel);
  const double h_out = 0.1;
  const int steps = 8;
  Mat controls(1, steps + 1);
  netctl::Rng rng(17);
  for (int k = 0; k <= steps; ++k) controls(0, k) = rng.uniform(-1.0, 1.0);

  const Trajectory traj =
      netctl::reference_solve(m, x_scalar(2.0), controls, amap, 1e-4, h_out,
                              steps);
  REQUIRE(traj.horizon() == steps);
  double x = 2.0;
  for (int k = 0; k < steps; ++k) {
    // x' = e^{ah} x + (e^{ah} - 1)/a * u_k for piecewise-constant input.
    x = std::exp(a * h_out) * x +
        (std::exp(a * h_out) - 1.0) / a * controls(0, k);
    CHECK(traj.states[k + 1][0] == doctest::Approx(x).epsilon(1e-10));
  }

  // The fine step must divide the coarse one.
  CHECK_THROWS_AS(
      netctl::reference_solve(m, x_scalar(2.0), controls, amap, 0.03, h_out,
                              steps),
      netctl::Error);
}

TEST_CASE("steady state settles the Duffing network onto an equilibrium") {
  const auto g = netctl::grg_graph(10, 50);
  const NetworkModel m = netctl::duffing_model(netctl::sample_duffing(g, 51));
  netctl::Rng rng(52);
  Vec x0(m.state_dim());
  for (int i = 0; i < x0.size(); ++i) x0[i] = rng.uniform(0.0, 0.5);

  Scheme ti{SchemeKind::kTi, 1e-2, 1e-10, 50};
  const auto ss = netctl::steady_state(m, ti, x0, 1e-7, 1000000);
  REQUIRE(ss.converged);
  CHECK(ss.steps > 0);
  // The settled point is an approximate equilibrium of the vector field.
  CHECK(m.drift(ss.state).lpNorm<Eigen::Infinity>() < 1e-4);

  const auto capped = netctl::steady_state(m, ti, x0, 1e-7, 3);
  CHECK_FALSE(capped.converged);
  CHECK(capped.steps == 3);
}

TEST_CASE("oscillator network overflows under a too-coarse explicit step") {
  const auto g = netctl::grg_graph(10, 3);
  const NetworkModel m = netctl::duffing_model(netctl::sample_duffing(g, 4));
  netctl::Rng rng(5);
  Vec x0(m.state_dim());
  for (int i = 0; i < x0.size(); ++i) x0[i] = rng.uniform(0.0, 0.5);

  Scheme coarse{SchemeKind::kFe, 0.25, 1e-10, 50};
  const Mat zero = Mat::Zero(10, 2001);
  CHECK_THROWS_AS(simulate(m, coarse, x0, zero, full_selection(10)),
                  SimulationError);

  // The same trajectory is tame at the benchmark step size.
  Scheme fine{SchemeKind::kFe, 1e-2, 1e-10, 50};
  const Mat zero_short = Mat::Zero(10, 201);
  const Trajectory ok = simulate(m, fine, x0, zero_short, full_selection(10));
  CHECK(ok.states.back().lpNorm<Eigen::Infinity>() < 10.0);
}

TEST_CASE("reduced and parametrized simulation paths are bitwise equal") {
  const auto g = netctl::grg_graph(6, 60);
  const NetworkModel m = netctl::duffing_model(netctl::sample_duffing(g, 61));
  const Selection sel =
      netctl::make_selection(6, {0, 2, 5}, 3, netctl::BudgetMode::kExactly);
  const int t_steps = 7;
  Mat reduced(3, t_steps + 1);
  netctl::Rng rng(62);
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k <= t_steps; ++k) reduced(r, k) = rng.uniform(-1.0, 1.0);
  }
  const Mat full = netctl::expand_controls(reduced, sel);

  for (SchemeKind kind : {SchemeKind::kFe, SchemeKind::kTi}) {
    Scheme s{kind, 1e-2, 1e-10, 50};
    netctl::Rng rx(63);
    Vec x0(m.state_dim());
    for (int i = 0; i < x0.size(); ++i) x0[i] = rx.uniform(0.0, 0.5);

    const Trajectory a =
        simulate(m, s, x0, reduced, netctl::ActuationMap::reduced(m, sel));
    const Trajectory b =
        simulate(m, s, x0, full, sel.pi.cast<double>().eval());
    REQUIRE(a.states.size() == b.states.size());
    for (size_t k = 0; k < a.states.size(); ++k) {
      for (int i = 0; i < a.states[k].size(); ++i) {
        CHECK(a.states[k][i] == b.states[k][i]);
      }
    }
  }
}

TEST_CASE("implicit runs hand their factorizations to the cache") {
  const auto g = netctl::grg_graph(5, 70);
  const NetworkModel m = netctl::duffing_model(netctl::sample_duffing(g, 71));
  const Selection sel = full_selection(5);
  const int t_steps = 6;
  const Mat controls = Mat::Constant(5, t_steps + 1, 0.1);
  Vec x0 = Vec::Constant(m.state_dim(), 0.2);

  Scheme ti{SchemeKind::kTi, 1e-2, 1e-10, 50};
  netctl::TiCache cache;
  const auto amap = netctl::ActuationMap::reduced(m, sel);
  const Trajectory traj = simulate(m, ti, x0, controls, amap, &cache);
  REQUIRE(traj.horizon() == t_steps);
  REQUIRE(cache.lu.size() == static_cast<size_t>(t_steps));
  REQUIRE(cache.valid.size() == static_cast<size_t>(t_steps));
}

TEST_CASE("simulate validates its shapes") {
  const NetworkModel m = linear_node(-1.0);
  const Selection sel = full_selection(1);
  Scheme fe{SchemeKind::kFe, 0.1, 1e-10, 50};
  // Wrong control width for the actuation map.
  CHECK_THROWS_AS(simulate(m, fe, x_scalar(1.0), Mat::Zero(2, 5), sel),
                  netctl::Error);
  // Wrong state dimension.
  CHECK_THROWS_AS(simulate(m, fe, Vec::Zero(3), Mat::Zero(1, 5), sel),
                  netctl::Error);
  // A control sequence needs at least the initial column.
  CHECK_THROWS_AS(simulate(m, fe, x_scalar(1.0), Mat::Zero(1, 0), sel),
                  netctl::Error);
}
