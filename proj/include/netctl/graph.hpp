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

#ifndef NETCTL_GRAPH_HPP_
#define NETCTL_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace netctl {

// Undirected geometric random graph on the unit square.  Coordinates are
// retained so a generated instance can be serialized and audited.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;         // i < j, sorted
  std::vector<std::array<double, 2>> coords;      // unit-square positions
  std::vector<std::vector<int>> neighbors;        // adjacency lists, sorted

  bool has_edge(int i, int j) const;
  bool connected() const;
};

// Rebuilds adjacency lists from the edge list.
void build_neighbors(Graph& g);

// Samples node positions i.i.d. uniform on the unit square and connects
// pairs closer than sqrt(1.44/N) (strict inequality).  Disconnected samples
// are discarded and redrawn from the next substream; gives up after
// max_attempts draws.
Graph grg_graph(int n, std::uint64_t seed, int max_attempts = 1000);

}  // namespace netctl

#endif  // NETCTL_GRAPH_HPP_
