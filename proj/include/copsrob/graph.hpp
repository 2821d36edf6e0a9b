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
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace copsrob {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ordered vertex sequence; consecutive entries adjacent in the host graph.
using PathSeq = std::vector<Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored twice: sorted neighbor lists for iteration and a dense
/// n*n matrix for constant-time adjacency tests. Desk-scale graphs only.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges are merged; loops and
  /// out-of-range endpoints throw std::invalid_argument.
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), {});
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                    std::to_string(v));
      }
      if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
      if (matrix_[index(u, v)]) continue;
      matrix_[index(u, v)] = matrix_[index(v, u)] = 1;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      ++m_;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return matrix_[index(u, v)] != 0;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
  }

  /// Edges with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    for (const auto& list : adj_) d.push_back(static_cast<int>(list.size()));
    return d;
  }

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  void check(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

/// Membership set over the vertices 0..universe-1 of a host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe), 0) {}
  VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

  static VertexSet all(int universe) {
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    s.count_ = universe;
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe() && bits_[static_cast<std::size_t>(v)] != 0;
  }
  void insert(Vertex v) {
    range_check(v);
    if (!bits_[v]) {
      bits_[v] = 1;
      ++count_;
    }
  }
  void erase(Vertex v) {
    range_check(v);
    if (bits_[v]) {
      bits_[v] = 0;
      --count_;
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (Vertex v = 0; v < universe(); ++v) {
      if (bits_[v]) out.push_back(v);
    }
    return out;
  }

  bool operator==(const VertexSet& other) const { return bits_ == other.bits_; }

 private:
  void range_check(Vertex v) const {
    if (v < 0 || v >= universe()) {
      throw std::out_of_range("vertex out of range for set: " + std::to_string(v));
    }
  }

  std::vector<std::uint8_t> bits_;
  int count_ = 0;
};

/// Returns a description of the first violated invariant, or nullopt.
inline std::optional<std::string> check_invariants(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex v = nb[i];
      if (v < 0 || v >= g.order()) return "neighbor out of range at " + std::to_string(u);
      if (v == u) return "loop at " + std::to_string(u);
      if (i > 0 && nb[i - 1] >= v) return "unsorted or duplicate neighbor at " + std::to_string(u);
      if (!g.adjacent(v, u)) return "asymmetric edge " + std::to_string(u) + "-" + std::to_string(v);
      auto back = g.neighbors(v);
      if (!std::binary_search(back.begin(), back.end(), u)) {
        return "asymmetric list " + std::to_string(u) + "-" + std::to_string(v);
      }
    }
  }
  return std::nullopt;
}

/// BFS distances from `source`, optionally restricted to the induced subgraph
/// on `within`. Unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source,
                                      const VertexSet* within = nullptr) {
  g.check(source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (within && !within->contains(source)) return dist;
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] >= 0 || (within && !within->contains(v))) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

/// Shortest-path length; nullopt when u and v lie in different components.
inline std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.check(v);
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

/// Deterministic shortest u->v path: starting from u, every step moves to the
/// smallest-index neighbor that is one step closer to v.
inline PathSeq geodesic(const Graph& g, Vertex u, Vertex v, const VertexSet* within = nullptr) {
  g.check(u);
  auto to_target = bfs_distances(g, v, within);
  if (to_target[u] < 0) {
    throw std::invalid_argument("no path between " + std::to_string(u) + " and " +
                                std::to_string(v));
  }
  PathSeq path{u};
  Vertex cur = u;
  while (cur != v) {
    for (Vertex w : g.neighbors(cur)) {
      if (to_target[w] == to_target[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

/// Vertices of the component containing `v` (restricted to `within` if given),
/// ascending.
inline std::vector<Vertex> component_of(const Graph& g, Vertex v,
                                        const VertexSet* within = nullptr) {
  auto dist = bfs_distances(g, v, within);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] >= 0) out.push_back(u);
  }
  return out;
}

/// Partition into connected components, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v]) continue;
    auto comp = component_of(g, v);
    for (Vertex u : comp) seen[u] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Eccentricity maximum; nullopt for disconnected graphs.
inline std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // new index -> host vertex
  std::vector<Vertex> from_host;  // host vertex -> new index, or -1
};

/// Subgraph on `members` keeping exactly the host edges inside it. New
/// indices follow ascending host order.
inline InducedSubgraph induced(const Graph& g, const VertexSet& members) {
  InducedSubgraph out;
  out.to_host = members.members();
  out.from_host.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    g.check(out.to_host[i]);
    out.from_host[out.to_host[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : out.to_host) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && out.from_host[v] >= 0) edges.emplace_back(out.from_host[u], out.from_host[v]);
    }
  }
  out.graph = Graph(static_cast<int>(out.to_host.size()), edges);
  return out;
}

inline InducedSubgraph induced(const Graph& g, std::span<const Vertex> members) {
  return induced(g, VertexSet(g.order(), members));
}

/// Disjoint union; block i is shifted by the total order of blocks 0..i-1.
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& part : parts) {
    for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
    offset += part.order();
  }
  return Graph(offset, edges);
}

/// True when `path` is non-empty, repeat-free and consecutively adjacent.
inline bool is_path_in(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.order() || seen[path[i]]) return false;
    seen[path[i]] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

/// True when `path` is a path whose only internal edges join consecutive
/// entries.
inline bool is_induced_path(const Graph& g, std::span<const Vertex> path) {
  if (!is_path_in(g, path)) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 2; j < path.size(); ++j) {
      if (g.adjacent(path[i], path[j])) return false;
    }
  }
  return true;
}

}  // namespace copsrob
