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

#ifndef NETCTL_DUFFING_HPP_
#define NETCTL_DUFFING_HPP_

#include <cstdint>

#include "netctl/graph.hpp"
#include "netctl/model.hpp"

namespace netctl {

// Network of Duffing oscillators coupled by nonlinear spring-damper links
// along the graph edges.  Node i carries (position, velocity) = (x_i1, x_i2):
//
//   x_i1' = x_i2
//   x_i2' = -alpha_ii x_i1 + beta_ii x_i1^3 - gamma_ii x_i2
//           - sum_j alpha_ij (x_i1 - x_j1) + sum_j beta_ij (x_i1 - x_j1)^3
//           - sum_j gamma_ij (x_i2 - x_j2)
//
// with the input on the velocity row.  Coupling parameters are symmetric per
// undirected edge; alpha_self/alpha(e) store the diagonal and per-edge values
// in the graph's edge order.
struct DuffingParams {
  Graph graph;
  Vec alpha_self, beta_self, gamma_self;  // size N
  Vec alpha_edge, beta_edge, gamma_edge;  // size |E|, graph edge order
};

// alpha ~ U[10,20]; beta, gamma ~ U[1,2]; one draw per node and per
// undirected edge.
DuffingParams sample_duffing(const Graph& graph, std::uint64_t seed);

NetworkModel duffing_model(const DuffingParams& params);

}  // namespace netctl

#endif  // NETCTL_DUFFING_HPP_
