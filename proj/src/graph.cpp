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

#include "netctl/graph.hpp"

#include <algorithm>
#include <cmath>

#include "netctl/errors.hpp"
#include "netctl/rng.hpp"

namespace netctl {

bool Graph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool Graph::connected() const {
  if (n == 0) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

void build_neighbors(Graph& g) {
  g.neighbors.assign(static_cast<size_t>(g.n), {});
  for (const auto& [i, j] : g.edges) {
    g.neighbors[static_cast<size_t>(i)].push_back(j);
    g.neighbors[static_cast<size_t>(j)].push_back(i);
  }
  for (auto& list : g.neighbors) std::sort(list.begin(), list.end());
}

Graph grg_graph(int n, std::uint64_t seed, int max_attempts) {
  if (n < 2) throw Error("grg_graph: need at least 2 nodes");
  const double radius = std::sqrt(1.44 / static_cast<double>(n));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng = substream(seed, "graph", static_cast<std::uint64_t>(attempt));
    Graph g;
    g.n = n;
    g.coords.resize(static_cast<size_t>(n));
    for (auto& c : g.coords) {
      c[0] = rng.uniform();
      c[1] = rng.uniform();
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dx = g.coords[static_cast<size_t>(i)][0] -
                          g.coords[static_cast<size_t>(j)][0];
        const double dy = g.coords[static_cast<size_t>(i)][1] -
                          g.coords[static_cast<size_t>(j)][1];
        if (std::sqrt(dx * dx + dy * dy) < radius) g.edges.emplace_back(i, j);
      }
    }
    build_neighbors(g);
    if (g.connected()) return g;
  }
  throw Error("grg_graph: no connected sample within the attempt limit");
}

}  // namespace netctl
