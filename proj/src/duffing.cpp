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

#include "netctl/duffing.hpp"

#include <memory>

#include "netctl/rng.hpp"

namespace netctl {

DuffingParams sample_duffing(const Graph& graph, std::uint64_t seed) {
  Rng rng(seed);
  DuffingParams p;
  p.graph = graph;
  const int n = graph.n;
  const auto ne = static_cast<Eigen::Index>(graph.edges.size());
  p.alpha_self.resize(n);
  p.beta_self.resize(n);
  p.gamma_self.resize(n);
  p.alpha_edge.resize(ne);
  p.beta_edge.resize(ne);
  p.gamma_edge.resize(ne);
  for (int i = 0; i < n; ++i) p.alpha_self[i] = rng.uniform(10.0, 20.0);
  for (int i = 0; i < n; ++i) p.beta_self[i] = rng.uniform(1.0, 2.0);
  for (int i = 0; i < n; ++i) p.gamma_self[i] = rng.uniform(1.0, 2.0);
  for (Eigen::Index e = 0; e < ne; ++e)
    p.alpha_edge[e] = rng.uniform(10.0, 20.0);
  for (Eigen::Index e = 0; e < ne; ++e) p.beta_edge[e] = rng.uniform(1.0, 2.0);
  for (Eigen::Index e = 0; e < ne; ++e)
    p.gamma_edge[e] = rng.uniform(1.0, 2.0);
  return p;
}

NetworkModel duffing_model(const DuffingParams& params) {
  auto p = std::make_shared<DuffingParams>(params);
  const int n = params.graph.n;

  NetworkModel model;
  model.nodes = n;
  model.node_dim = 2;

  model.drift = [p, n](const Vec& x) {
    Vec f(2 * n);
    for (int i = 0; i < n; ++i) {
      const double pos = x[2 * i];
      const double vel = x[2 * i + 1];
      f[2 * i] = vel;
      f[2 * i + 1] = -p->alpha_self[i] * pos +
                     p->beta_self[i] * pos * pos * pos -
                     p->gamma_self[i] * vel;
    }
    for (size_t e = 0; e < p->graph.edges.size(); ++e) {
      const auto [i, j] = p->graph.edges[e];
      const auto k = static_cast<Eigen::Index>(e);
      const double d1 = x[2 * i] - x[2 * j];
      const double d2 = x[2 * i + 1] - x[2 * j + 1];
      const double t = -p->alpha_edge[k] * d1 + p->beta_edge[k] * d1 * d1 * d1 -
                       p->gamma_edge[k] * d2;
      f[2 * i + 1] += t;
      f[2 * j + 1] -= t;
    }
    return f;
  };

  model.jacobian = [p, n](const Vec& x) {
    Mat jac = Mat::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      const double pos = x[2 * i];
      jac(2 * i, 2 * i + 1) = 1.0;
      jac(2 * i + 1, 2 * i) = -p->alpha_self[i] + 3.0 * p->beta_self[i] * pos * pos;
      jac(2 * i + 1, 2 * i + 1) = -p->gamma_self[i];
    }
    for (size_t e = 0; e < p->graph.edges.size(); ++e) {
      const auto [i, j] = p->graph.edges[e];
      const auto k = static_cast<Eigen::Index>(e);
      const double d1 = x[2 * i] - x[2 * j];
      const double u = -p->alpha_edge[k] + 3.0 * p->beta_edge[k] * d1 * d1;
      const double v = -p->gamma_edge[k];
      jac(2 * i + 1, 2 * i) += u;
      jac(2 * i + 1, 2 * j) -= u;
      jac(2 * i + 1, 2 * i + 1) += v;
      jac(2 * i + 1, 2 * j + 1) -= v;
      jac(2 * j + 1, 2 * j) += u;
      jac(2 * j + 1, 2 * i) -= u;
      jac(2 * j + 1, 2 * j + 1) += v;
      jac(2 * j + 1, 2 * i + 1) -= v;
    }
    return jac;
  };

  return model;
}

}  // namespace netctl
