// Copyright 2026 The copsrob Authors
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

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

/// knots[v][i] is the vertex of v's knot matched with the i-th smallest
/// neighbor of v in the original graph.
struct KnotMap {
  std::vector<std::vector<Vertex>> knots;

  /// The knot vertex of `v` facing its original neighbor `u`.
  Vertex facing(const Graph& original, Vertex v, Vertex u) const {
    auto nb = original.neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), u);
    if (it == nb.end() || *it != u) throw std::invalid_argument("facing: vertices are not adjacent");
    return knots[v][static_cast<std::size_t>(it - nb.begin())];
  }
};

struct CliqueSubstitution {
  Graph graph;
  KnotMap knots;
};

/// Replaces every vertex by a clique of its degree and joins the two knots of
/// each original edge by a single edge. Isolated vertices vanish.
inline CliqueSubstitution clique_substitution(const Graph& g) {
  CliqueSubstitution out;
  out.knots.knots.resize(static_cast<std::size_t>(g.order()));
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int i = 0; i < g.degree(v); ++i) out.knots.knots[v].push_back(next++);
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& knot = out.knots.knots[v];
    for (std::size_t i = 0; i < knot.size(); ++i)
      for (std::size_t j = i + 1; j < knot.size(); ++j) edges.emplace_back(knot[i], knot[j]);
  }
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(out.knots.facing(g, u, v), out.knots.facing(g, v, u));
  }
  out.graph = Graph(next, edges);
  return out;
}

/// Puts k new vertices inside every edge. Original vertices keep their
/// indices; the internal vertices of the e-th edge (ascending (u, v), u < v)
/// are n + e*k .. n + e*k + k-1, numbered from the u end.
inline Graph subdivide(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("subdivide needs k >= 0");
  auto original = g.edges();
  std::vector<Edge> edges;
  Vertex next = g.order();
  for (auto [u, v] : original) {
    Vertex prev = u;
    for (int i = 0; i < k; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph(next, edges);
}

}  // namespace copsrob
