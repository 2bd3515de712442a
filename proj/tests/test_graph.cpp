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

#include <algorithm>
#include <cmath>
#include <queue>

#include "netctl/errors.hpp"
#include "netctl/graph.hpp"

using netctl::Graph;
using netctl::grg_graph;

namespace {

double dist(const Graph& g, int i, int j) {
  const double dx = g.coords[i][0] - g.coords[j][0];
  const double dy = g.coords[i][1] - g.coords[j][1];
  return std::sqrt(dx * dx + dy * dy);
}

// Independent connectivity check by breadth-first search over the edge list.
bool bfs_connected(const Graph& g) {
  if (g.n == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (const auto& [a, b] : g.edges) {
      const int v = a == u ? b : (b == u ? a : -1);
      if (v >= 0 && !seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == g.n;
}

}  // namespace

TEST_CASE("edges are exactly the pairs within the geometric radius") {
  for (int n : {5, 10, 25}) {
    const Graph g = grg_graph(n, 1234);
    const double radius = std::sqrt(1.44 / n);
    REQUIRE(g.n == n);
    REQUIRE(static_cast<int>(g.coords.size()) == n);
    for (const auto& c : g.coords) {
      CHECK(c[0] >= 0.0);
      CHECK(c[0] < 1.0);
      CHECK(c[1] >= 0.0);
      CHECK(c[1] < 1.0);
    }
    // Brute-force every pair against the rule.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CHECK(g.has_edge(i, j) == (dist(g, i, j) < radius));
      }
    }
    for (const auto& [i, j] : g.edges) CHECK(i < j);
    CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
  }
}

TEST_CASE("generated graphs are connected") {
  for (std::uint64_t seed : {1ULL, 2ULL, 42ULL, 1000ULL}) {
    const Graph g = grg_graph(10, seed);
    CHECK(g.connected());
    CHECK(bfs_connected(g));
  }
  const Graph big = grg_graph(60, 42);
  CHECK(big.connected());
  CHECK(bfs_connected(big));
}

TEST_CASE("adjacency lists mirror the edge list") {
  const Graph g = grg_graph(15, 7);
  REQUIRE(static_cast<int>(g.neighbors.size()) == g.n);
  int total = 0;
  for (int i = 0; i < g.n; ++i) {
    CHECK(std::is_sorted(g.neighbors[i].begin(), g.neighbors[i].end()));
    for (int j : g.neighbors[i]) {
      CHECK(g.has_edge(i, j));
      CHECK(g.has_edge(j, i));
      // Symmetry: i shows up in j's list too.
      const auto& back = g.neighbors[j];
      CHECK(std::binary_search(back.begin(), back.end(), i));
    }
    total += static_cast<int>(g.neighbors[i].size());
  }
  CHECK(total == 2 * static_cast<int>(g.edges.size()));
  CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("connectivity predicate on hand-built graphs") {
  Graph path;
  path.n = 4;
  path.edges = {{0, 1}, {1, 2}, {2, 3}};
  netctl::build_neighbors(path);
  CHECK(path.connected());

  Graph split;
  split.n = 4;
  split.edges = {{0, 1}, {2, 3}};
  netctl::build_neighbors(split);
  CHECK_FALSE(split.connected());

  Graph lonely;
  lonely.n = 3;
  lonely.edges = {{0, 1}};
  netctl::build_neighbors(lonely);
  CHECK_FALSE(lonely.connected());
}

TEST_CASE("same seed reproduces the instance, different seeds move it") {
  const Graph a = grg_graph(12, 99);
  const Graph b = grg_graph(12, 99);
  REQUIRE(a.edges == b.edges);
  for (int i = 0; i < a.n; ++i) {
    CHECK(a.coords[i][0] == b.coords[i][0]);
    CHECK(a.coords[i][1] == b.coords[i][1]);
  }
  const Graph c = grg_graph(12, 100);
  bool same_coords = true;
  for (int i = 0; i < a.n; ++i) {
    same_coords = same_coords && a.coords[i][0] == c.coords[i][0] &&
                  a.coords[i][1] == c.coords[i][1];
  }
  CHECK_FALSE(same_coords);
}

TEST_CASE("giving the generator no attempts raises") {
  CHECK_THROWS_AS(grg_graph(10, 1, 0), netctl::Error);
}
