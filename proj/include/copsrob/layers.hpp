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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

/// Distance layers of u0 after deleting every neighbor of u0 except u1.
struct LayeredDecomposition {
  Vertex u0 = 0;
  Vertex u1 = 0;
  VertexSet removed{0};   // U = N(u0) minus u1
  InducedSubgraph h;      // host - U
  VertexSet hprime{0};    // component of u0 in h, host labels
  std::vector<std::vector<Vertex>> layers;
  std::vector<int> layer_of;  // -1 outside hprime

  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

inline LayeredDecomposition layered_decomposition(const Graph& g, Vertex u0, Vertex u1) {
  g.check(u0);
  g.check(u1);
  if (!g.adjacent(u0, u1)) {
    throw std::invalid_argument("layered_decomposition: " + std::to_string(u0) + " and " +
                                std::to_string(u1) + " are not adjacent");
  }
  LayeredDecomposition out;
  out.u0 = u0;
  out.u1 = u1;
  out.removed = VertexSet(g.order());
  for (Vertex w : g.neighbors(u0))
    if (w != u1) out.removed.insert(w);
  VertexSet keep = VertexSet::all(g.order());
  for (Vertex w : out.removed.members()) keep.erase(w);
  out.h = induced(g, keep);
  out.layer_of = bfs_distances(g, u0, &keep);
  out.hprime = VertexSet(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    int d = out.layer_of[v];
    if (d < 0) continue;
    out.hprime.insert(v);
    if (static_cast<int>(out.layers.size()) <= d) out.layers.resize(static_cast<std::size_t>(d) + 1);
    out.layers[d].push_back(v);
  }
  return out;
}

enum class LayerVariant { A, B, C, D };

inline LayerVariant parse_layer_variant(std::string_view s) {
  if (s == "a") return LayerVariant::A;
  if (s == "b") return LayerVariant::B;
  if (s == "c") return LayerVariant::C;
  if (s == "d") return LayerVariant::D;
  throw std::invalid_argument("unknown layer variant '" + std::string(s) + "'");
}

struct LayerCheck {
  int layer = 0;
  bool ok = true;
  std::vector<Vertex> witness;
};

struct LayerReport {
  bool passed = true;
  std::vector<LayerCheck> layers;

  std::optional<LayerCheck> first_failure() const {
    for (const auto& c : layers)
      if (!c.ok) return c;
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<Vertex> non_clique_pair(const Graph& g, const std::vector<Vertex>& layer) {
  for (std::size_t i = 0; i < layer.size(); ++i)
    for (std::size_t j = i + 1; j < layer.size(); ++j)
      if (!g.adjacent(layer[i], layer[j])) return {layer[i], layer[j]};
  return {};
}

inline bool dominates(const Graph& g, Vertex x, const std::vector<Vertex>& targets) {
  for (Vertex t : targets)
    if (t != x && !g.adjacent(x, t)) return false;
  return true;
}

}  // namespace detail

/// Checks one structural variant layer by layer. Failing layers carry a
/// witness: a non-adjacent pair for (a)-(c), an independent triple for (d).
inline LayerReport validate_layers(const Graph& g, const LayeredDecomposition& L, LayerVariant variant) {
  LayerReport report;
  const auto& N = L.layers;
  for (std::size_t i = 0; i < N.size(); ++i) {
    LayerCheck check;
    check.layer = static_cast<int>(i);
    switch (variant) {
      case LayerVariant::A:
        if (i < 2) break;
        for (std::size_t a = 0; a < N[i].size() && check.ok; ++a) {
          for (std::size_t b = a + 1; b < N[i].size() && check.ok; ++b) {
            Vertex x = N[i][a], y = N[i][b];
            if (g.adjacent(x, y)) continue;
            for (Vertex w : N[i - 1]) {
              if (g.adjacent(w, x) && g.adjacent(w, y)) {
                check.ok = false;
                check.witness = {x, y};
                break;
              }
            }
          }
        }
        break;
      case LayerVariant::B:
        check.witness = detail::non_clique_pair(g, N[i]);
        if (check.witness.empty() && i >= 1) {
          for (Vertex x : N[i]) {
            for (Vertex y : N[i - 1]) {
              if (!g.adjacent(x, y)) {
                check.witness = {y, x};
                break;
              }
            }
            if (!check.witness.empty()) break;
          }
        }
        check.ok = check.witness.empty();
        break;
      case LayerVariant::C:
        check.witness = detail::non_clique_pair(g, N[i]);
        if (check.witness.empty() && i + 1 < N.size()) {
          bool found = false;
          for (Vertex x : N[i]) found = found || detail::dominates(g, x, N[i + 1]);
          if (!found) {
            Vertex x = N[i].front();
            for (Vertex y : N[i + 1]) {
              if (!g.adjacent(x, y)) {
                check.witness = {x, y};
                break;
              }
            }
          }
        }
        check.ok = check.witness.empty();
        break;
      case LayerVariant::D: {
        const auto& s = N[i];
        for (std::size_t a = 0; a < s.size() && check.ok; ++a)
          for (std::size_t b = a + 1; b < s.size() && check.ok; ++b) {
            if (g.adjacent(s[a], s[b])) continue;
            for (std::size_t c = b + 1; c < s.size(); ++c) {
              if (!g.adjacent(s[a], s[c]) && !g.adjacent(s[b], s[c])) {
                check.ok = false;
                check.witness = {s[a], s[b], s[c]};
                break;
              }
            }
          }
        break;
      }
    }
    report.passed = report.passed && check.ok;
    report.layers.push_back(std::move(check));
  }
  return report;
}

}  // namespace copsrob
