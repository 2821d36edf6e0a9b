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

#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

inline constexpr int kEnumerateMaxOrder = 7;
inline constexpr int kCanonicalMaxOrder = 11;

/// Adjacency bits of the upper triangle in column order (0,1),(0,2),(1,2),
/// (0,3),... with the first pair most significant. Same bit order as graph6.
inline std::uint64_t adjacency_code(const Graph& g, std::span<const Vertex> order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  }
  return code;
}

namespace detail {

// Lexicographic minimisation over all vertex orders. The code is a sequence
// of fixed-width column blocks, so for a fixed prefix the minimum must place
// a vertex with the smallest next block; the search branches only on ties.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    used_.assign(static_cast<std::size_t>(n_), 0);
    best_cols_.assign(static_cast<std::size_t>(n_), std::numeric_limits<std::uint64_t>::max());
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    order_.clear();
    cols_.assign(static_cast<std::size_t>(n_), 0);
    search();
    std::uint64_t code = 0;
    for (int j = 1; j < n_; ++j) code = (code << j) | best_cols_[j];
    return code;
  }

 private:
  std::uint64_t column(Vertex v) const {
    std::uint64_t c = 0;
    for (Vertex u : order_) c = (c << 1) | (g_.adjacent(u, v) ? 1u : 0u);
    return c;
  }

  // Lexicographic comparison of the column blocks 1..upto against the best.
  int compare_prefix(int upto) const {
    for (int i = 1; i <= upto; ++i) {
      if (cols_[i] != best_cols_[i]) return cols_[i] < best_cols_[i] ? -1 : 1;
    }
    return 0;
  }

  void search() {
    int j = static_cast<int>(order_.size());
    if (j == n_) {
      if (compare_prefix(n_ - 1) < 0) best_cols_ = cols_;
      return;
    }
    std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
    std::vector<Vertex> ties;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint64_t c = column(v);
      if (c < lo) {
        lo = c;
        ties.assign(1, v);
      } else if (c == lo) {
        ties.push_back(v);
      }
    }
    cols_[j] = lo;
    for (Vertex v : ties) {
      // The best can improve inside an earlier tie branch.
      if (compare_prefix(j) > 0) return;
      used_[v] = 1;
      order_.push_back(v);
      search();
      order_.pop_back();
      used_[v] = 0;
      cols_[j] = lo;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint64_t> best_cols_;
};

}  // namespace detail

/// Minimum adjacency_code over all n! vertex orders; equal for two graphs
/// exactly when they are isomorphic.
inline std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) throw std::invalid_argument("canonical_code supports n <= 11");
  return detail::CanonicalSearch(g).run();
}

/// Rebuilds the graph on n vertices whose adjacency_code in identity order is
/// `code`.
inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2 - 1;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

/// Connected graphs on 1..n vertices for which `keep` holds, one per
/// isomorphism class; entry m-1 lists order m in ascending canonical-code
/// order. `keep` must be closed under taking connected induced subgraphs:
/// every member is grown from a member on m-1 vertices by adding a vertex,
/// since deleting a non-cut vertex keeps a connected graph connected.
inline std::vector<std::vector<Graph>> enumerate_connected_levels(int n, const std::function<bool(const Graph&)>& keep,
                                                                  int max_order = 9) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > max_order) throw std::invalid_argument("enumeration capped at n <= " + std::to_string(max_order));
  std::vector<std::vector<Graph>> levels(1);
  Graph single(1, std::span<const Edge>{});
  if (keep(single)) levels[0].push_back(single);
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> codes;
    for (const Graph& base : levels.back()) {
      auto base_edges = base.edges();
      for (std::uint32_t mask = 1; mask < (1u << (m - 1)); ++mask) {
        auto edges = base_edges;
        for (Vertex v = 0; v < m - 1; ++v) {
          if ((mask >> v) & 1u) edges.emplace_back(v, m - 1);
        }
        Graph candidate(m, edges);
        if (!keep(candidate)) continue;
        codes.insert(canonical_code(candidate));
      }
    }
    auto& level = levels.emplace_back();
    for (auto code : codes) level.push_back(graph_from_code(m, code));
  }
  return levels;
}

/// Order-n slice of enumerate_connected_levels.
inline std::vector<Graph> enumerate_connected_where(int n, const std::function<bool(const Graph&)>& keep,
                                                    int max_order = 9) {
  return std::move(enumerate_connected_levels(n, keep, max_order).back());
}

/// Every connected graph on n <= 7 vertices, one per isomorphism class.
inline std::vector<Graph> enumerate_connected(int n) {
  if (n > kEnumerateMaxOrder) throw std::invalid_argument("enumerate_connected supports n <= 7");
  return enumerate_connected_where(n, [](const Graph&) { return true; }, kEnumerateMaxOrder);
}

}  // namespace copsrob
