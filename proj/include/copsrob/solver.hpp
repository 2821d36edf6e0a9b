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
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mover : std::uint8_t { Cops = 0, Robber = 1 };

/// Cops are interchangeable, so their positions form a sorted multiset.
struct GameState {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Mover mover = Mover::Cops;

  bool captured() const { return std::find(cops.begin(), cops.end(), robber) != cops.end(); }
};

struct SolveOptions {
  std::uint64_t state_budget = 50'000'000;
};

/// Ranks sorted k-multisets over 0..n-1 in colexicographic order via the
/// bijection c_i -> c_i + i onto k-subsets of 0..n+k-2.
class MultisetIndexer {
 public:
  MultisetIndexer(int n, int k) : n_(n), k_(k) {
    int top = n + k;
    binom_.assign(static_cast<std::size_t>(top + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(k + 2), 0));
    for (int a = 0; a <= top; ++a) {
      binom_[a][0] = 1;
      for (int b = 1; b <= std::min(a, k + 1); ++b) {
        std::uint64_t x = binom_[a - 1][b - 1];
        std::uint64_t y = b <= a - 1 ? binom_[a - 1][b] : 0;
        binom_[a][b] = (x > std::numeric_limits<std::uint64_t>::max() - y) ? std::numeric_limits<std::uint64_t>::max() : x + y;
      }
    }
  }

  std::uint64_t count() const { return binom_[n_ + k_ - 1][k_]; }

  std::uint64_t rank(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) r += binom_[sorted[i] + i][i + 1];
    return r;
  }

  std::vector<Vertex> unrank(std::uint64_t r) const {
    std::vector<Vertex> out(static_cast<std::size_t>(k_));
    int hi = n_ + k_ - 2;
    for (int i = k_ - 1; i >= 0; --i) {
      int b = hi;
      while (binom_[b][i + 1] > r) --b;
      r -= binom_[b][i + 1];
      out[i] = b - i;
      hi = b - 1;
    }
    return out;
  }

 private:
  int n_;
  int k_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

inline std::uint64_t state_count(int n, int k) {
  MultisetIndexer idx(n, k);
  double total = static_cast<double>(idx.count()) * n * 2.0;
  if (total > 1e18) return std::numeric_limits<std::uint64_t>::max();
  return idx.count() * static_cast<std::uint64_t>(n) * 2u;
}

/// Exact labeling of every state of the k-cop game on one graph.
class SolveResult {
 public:
  static constexpr std::uint32_t kUnresolved = std::numeric_limits<std::uint32_t>::max();

  int cops() const { return k_; }
  const Graph& graph() const { return graph_; }
  const MultisetIndexer& indexer() const { return index_; }

  bool is_cop_win(const GameState& s) const { return depth_[index(s)] != kUnresolved; }

  /// Remaining cop turns to capture under optimal play; nullopt on robber-win
  /// states.
  std::optional<int> depth(const GameState& s) const {
    auto d = depth_[index(s)];
    if (d == kUnresolved) return std::nullopt;
    return static_cast<int>(d);
  }

  /// A cop placement that wins against every robber placement, minimising the
  /// worst-case capture time (ties: smallest colex rank).
  const std::optional<std::vector<Vertex>>& best_initial() const { return best_initial_; }
  bool cop_win() const { return best_initial_.has_value(); }
  std::optional<int> capture_time() const { return capture_time_; }

  /// Worst-case capture time for a given placement; nullopt if the robber has
  /// a surviving placement.
  std::optional<int> placement_value(std::vector<Vertex> cops) const {
    std::sort(cops.begin(), cops.end());
    int worst = 0;
    for (Vertex r = 0; r < graph_.order(); ++r) {
      auto d = depth({cops, r, Mover::Cops});
      if (!d) return std::nullopt;
      worst = std::max(worst, *d);
    }
    return worst;
  }

  std::size_t index(const GameState& s) const {
    if (static_cast<int>(s.cops.size()) != k_) throw std::invalid_argument("state has wrong cop count");
    for (std::size_t i = 0; i < s.cops.size(); ++i) {
      graph_.check(s.cops[i]);
      if (i > 0 && s.cops[i - 1] > s.cops[i]) throw std::invalid_argument("cop positions must be sorted");
    }
    graph_.check(s.robber);
    return slot(index_.rank(s.cops), s.robber, s.mover);
  }

 private:
  friend SolveResult solve(const Graph& g, int k, const SolveOptions& options);

  SolveResult(const Graph& g, int k) : graph_(g), k_(k), index_(g.order(), k) {}

  std::size_t slot(std::uint64_t cop_rank, Vertex robber, Mover m) const {
    return (static_cast<std::size_t>(cop_rank) * static_cast<std::size_t>(graph_.order()) +
            static_cast<std::size_t>(robber)) * 2 + static_cast<std::size_t>(m);
  }

  Graph graph_;
  int k_;
  MultisetIndexer index_;
  std::vector<std::uint32_t> depth_;
  std::optional<std::vector<Vertex>> best_initial_;
  std::optional<int> capture_time_;
};

namespace detail {

// Distinct sorted multisets reachable when every cop moves within its closed
// neighborhood. The relation is symmetric, so this is also the predecessor set.
inline std::vector<std::uint32_t> cop_moves(const Graph& g, const MultisetIndexer& idx,
                                            const std::vector<Vertex>& cops) {
  std::size_t k = cops.size();
  std::vector<std::vector<Vertex>> options(k);
  for (std::size_t i = 0; i < k; ++i) {
    options[i].push_back(cops[i]);
    for (Vertex w : g.neighbors(cops[i])) options[i].push_back(w);
  }
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> pick(k, 0);
  std::vector<Vertex> tuple(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = options[i][pick[i]];
    std::sort(tuple.begin(), tuple.end());
    out.push_back(static_cast<std::uint32_t>(idx.rank(tuple)));
    std::size_t i = 0;
    while (i < k && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Retrograde analysis of the k-cop game. Capture states are seeded with depth
/// 0; a cop-to-move state resolves as soon as one successor is cop-win, a
/// robber-to-move state once all of its successors are. Processing in
/// nondecreasing depth order (0-1 BFS) makes the recorded depths optimal.
inline SolveResult solve(const Graph& g, int k, const SolveOptions& options = {}) {
  if (k < 1) throw std::invalid_argument("solve needs k >= 1");
  if (g.order() < 1) throw std::invalid_argument("solve needs a non-empty graph");
  if (!is_connected(g)) throw std::invalid_argument("solve needs a connected graph");
  std::uint64_t total = state_count(g.order(), k);
  if (total > options.state_budget) {
    throw BudgetExceeded("k=" + std::to_string(k) + " needs " + std::to_string(total) +
                         " states, budget is " + std::to_string(options.state_budget));
  }

  SolveResult res(g, k);
  const int n = g.order();
  const std::uint64_t placements = res.index_.count();
  res.depth_.assign(static_cast<std::size_t>(total), SolveResult::kUnresolved);

  std::vector<std::vector<Vertex>> unranked(static_cast<std::size_t>(placements));
  std::vector<std::vector<std::uint32_t>> moves(static_cast<std::size_t>(placements));
  for (std::uint64_t c = 0; c < placements; ++c) {
    unranked[c] = res.index_.unrank(c);
    moves[c] = detail::cop_moves(g, res.index_, unranked[c]);
  }

  // Unresolved successor counts of robber-to-move states, indexed c*n + r.
  std::vector<std::uint16_t> pending(static_cast<std::size_t>(placements) * static_cast<std::size_t>(n));
  std::deque<std::size_t> queue;
  for (std::uint64_t c = 0; c < placements; ++c) {
    for (Vertex r = 0; r < n; ++r) {
      pending[c * n + r] = static_cast<std::uint16_t>(g.degree(r) + 1);
      if (std::binary_search(unranked[c].begin(), unranked[c].end(), r)) {
        for (Mover m : {Mover::Cops, Mover::Robber}) {
          res.depth_[res.slot(c, r, m)] = 0;
          queue.push_back(res.slot(c, r, m));
        }
      }
    }
  }

  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    std::uint32_t d = res.depth_[s];
    Mover m = static_cast<Mover>(s % 2);
    std::size_t cr = s / 2;
    Vertex r = static_cast<Vertex>(cr % n);
    std::uint64_t c = cr / n;
    if (m == Mover::Robber) {
      // Predecessors: the cops moved into c from some c'.
      for (std::uint32_t c2 : moves[c]) {
        std::size_t p = res.slot(c2, r, Mover::Cops);
        if (res.depth_[p] != SolveResult::kUnresolved) continue;
        res.depth_[p] = d + 1;
        queue.push_back(p);
      }
    } else {
      // Predecessors: the robber moved into r from some neighbor r'.
      auto relax = [&](Vertex r2) {
        std::size_t p = res.slot(c, r2, Mover::Robber);
        if (res.depth_[p] != SolveResult::kUnresolved) return;
        if (--pending[c * n + r2] == 0) {
          res.depth_[p] = d;
          queue.push_front(p);
        }
      };
      relax(r);
      for (Vertex r2 : g.neighbors(r)) relax(r2);
    }
  }

  for (std::uint64_t c = 0; c < placements; ++c) {
    std::uint32_t worst = 0;
    for (Vertex r = 0; r < n && worst != SolveResult::kUnresolved; ++r) {
      worst = std::max(worst, res.depth_[res.slot(c, r, Mover::Cops)]);
    }
    if (worst == SolveResult::kUnresolved) continue;
    if (!res.capture_time_ || static_cast<int>(worst) < *res.capture_time_) {
      res.capture_time_ = static_cast<int>(worst);
      res.best_initial_ = unranked[c];
    }
  }
  return res;
}

/// Least k for which the cops win; at most n.
inline int cop_number(const Graph& g, int k_max = -1, const SolveOptions& options = {}) {
  if (k_max < 0) k_max = g.order();
  for (int k = 1; k <= k_max; ++k) {
    if (solve(g, k, options).cop_win()) return k;
  }
  throw BudgetExceeded("no k <= " + std::to_string(k_max) + " wins");
}

inline std::optional<int> capture_time(const Graph& g, int k, const SolveOptions& options = {}) {
  return solve(g, k, options).capture_time();
}

/// Robber move from a robber-to-move state: any robber-win successor first,
/// otherwise the deepest cop-win one; ties go to the smallest vertex. Moving
/// onto a cop is never chosen while staying is possible.
inline Vertex optimal_robber_reply(const SolveResult& res, const GameState& s) {
  if (s.mover != Mover::Robber) throw std::invalid_argument("not the robber's turn");
  if (s.captured()) throw std::invalid_argument("robber already captured");
  const Graph& g = res.graph();
  std::vector<Vertex> options{s.robber};
  for (Vertex w : g.neighbors(s.robber)) options.push_back(w);
  std::sort(options.begin(), options.end());
  Vertex best = -1;
  int best_score = -1;
  for (Vertex w : options) {
    if (std::binary_search(s.cops.begin(), s.cops.end(), w)) continue;
    auto d = res.depth({s.cops, w, Mover::Cops});
    int score = d ? *d : std::numeric_limits<int>::max();
    if (score > best_score) {
      best_score = score;
      best = w;
    }
  }
  return best;
}

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Independent reference: cops as an ordered tuple (no multiset reduction),
/// states in a std::map, labels grown by forward fixpoint sweeps. Each sweep
/// recomputes every state from its successors; the fixpoint is reached within
/// `depth_cap` sweeps (default twice the state count) or the call throws.
inline bool naive_oracle(const Graph& g, int k, long depth_cap = 0) {
  if (k < 1 || g.order() < 1) throw std::invalid_argument("naive_oracle needs k >= 1 and n >= 1");
  const int n = g.order();
  using Key = std::pair<std::vector<Vertex>, std::pair<Vertex, int>>;
  std::map<Key, bool> win;
  std::vector<std::vector<Vertex>> tuples{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& t : tuples) {
      for (Vertex v = 0; v < n; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    }
    tuples = std::move(next);
  }
  auto closed = [&](Vertex v) {
    std::vector<Vertex> out{v};
    for (Vertex w : g.neighbors(v)) out.push_back(w);
    return out;
  };
  auto on_cop = [](const std::vector<Vertex>& t, Vertex r) { return std::find(t.begin(), t.end(), r) != t.end(); };
  for (const auto& t : tuples)
    for (Vertex r = 0; r < n; ++r)
      for (int m = 0; m < 2; ++m) win[{t, {r, m}}] = on_cop(t, r);
  if (depth_cap <= 0) depth_cap = 2 * static_cast<long>(win.size());

  for (long sweep = 0;; ++sweep) {
    if (sweep > depth_cap) throw OracleCapExceeded("naive_oracle: no fixpoint within the sweep cap");
    bool changed = false;
    for (const auto& t : tuples) {
      for (Vertex r = 0; r < n; ++r) {
        if (on_cop(t, r)) continue;
        // Robber to move: every reply must lose.
        bool all = true;
        for (Vertex w : closed(r)) all = all && win[{t, {w, 0}}];
        if (all && !win[{t, {r, 1}}]) win[{t, {r, 1}}] = changed = true;
        // Cops to move: some joint move must win.
        if (win[{t, {r, 0}}]) continue;
        std::vector<Vertex> target(static_cast<std::size_t>(k));
        bool any = false;
        std::function<void(int)> rec = [&](int i) {
          if (any) return;
          if (i == k) {
            any = win[{target, {r, 1}}];
            return;
          }
          for (Vertex w : closed(t[i])) {
            target[i] = w;
            rec(i + 1);
          }
        };
        rec(0);
        if (any) win[{t, {r, 0}}] = changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& t : tuples) {
    bool all = true;
    for (Vertex r = 0; r < n && all; ++r) all = win[{t, {r, 0}}];
    if (all) return true;
  }
  return false;
}

}  // namespace copsrob
