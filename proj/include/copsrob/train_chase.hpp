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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

/// Chasing function: the smallest-index neighbor of u on a (u,v)-geodesic
/// inside `within` (whole graph when null). Needs distance at least 2.
inline Vertex theta(const Graph& g, Vertex u, Vertex v, const VertexSet* within = nullptr) {
  g.check(u);
  g.check(v);
  if (within && (!within->contains(u) || !within->contains(v))) {
    throw std::invalid_argument("theta: endpoint outside the subgraph");
  }
  auto dist = bfs_distances(g, v, within);
  if (dist[u] < 0) throw std::invalid_argument("theta: endpoints disconnected");
  if (dist[u] < 2) throw std::invalid_argument("theta: endpoints at distance < 2");
  for (Vertex w : g.neighbors(u)) {
    if (dist[w] == dist[u] - 1) return w;
  }
  throw std::logic_error("theta: no geodesic step");  // unreachable
}

inline Vertex theta(Vertex u, Vertex v, const Graph& h) { return theta(h, u, v); }

/// Anchors v_1..v_j, cuts X_1..X_{j-1} and the territory H_j, which is
/// stored as a vertex set of the host.
struct TrainChaseState {
  std::vector<Vertex> anchors;
  std::vector<std::vector<Vertex>> cuts;
  VertexSet territory{0};

  int step() const { return static_cast<int>(anchors.size()); }
  Vertex tip() const { return anchors.back(); }
};

inline TrainChaseState train_chase_start(const Graph& g, Vertex v1) {
  g.check(v1);
  TrainChaseState s;
  s.anchors = {v1};
  s.territory = VertexSet::all(g.order());
  return s;
}

namespace detail {

// Cut X_i keeps both path neighbors of v_i so that v_1 stays attached.
inline void advance_chase(const Graph& g, TrainChaseState& s, Vertex next) {
  Vertex tip = s.tip();
  Vertex prev = s.anchors.size() >= 2 ? s.anchors[s.anchors.size() - 2] : -1;
  std::vector<Vertex> cut;
  for (Vertex x : g.neighbors(tip))
    if (s.territory.contains(x) && x != prev && x != next) cut.push_back(x);
  VertexSet rest = s.territory;
  for (Vertex x : cut) rest.erase(x);
  s.territory = VertexSet(g.order(), component_of(g, s.anchors.front(), &rest));
  s.cuts.push_back(std::move(cut));
  s.anchors.push_back(next);
}

}  // namespace detail

/// Appends the anchor chosen towards the robber at w and cuts the territory.
inline Vertex train_chase_extend(const Graph& g, TrainChaseState& s, Vertex w) {
  Vertex next = theta(g, s.tip(), w, &s.territory);
  detail::advance_chase(g, s, next);
  return next;
}

/// Replays the cut recursion along a known anchor sequence.
inline TrainChaseState train_chase_replay(const Graph& g, std::span<const Vertex> anchors) {
  if (anchors.empty()) throw std::invalid_argument("train_chase_replay: no anchors");
  TrainChaseState s = train_chase_start(g, anchors[0]);
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (!g.adjacent(s.tip(), anchors[i]) || !s.territory.contains(anchors[i])) {
      throw std::invalid_argument("train_chase_replay: anchor " + std::to_string(anchors[i]) +
                                  " cannot follow " + std::to_string(s.tip()));
    }
    detail::advance_chase(g, s, anchors[i]);
  }
  return s;
}

/// Returns a description of the first violated item, nullopt when the state
/// is sound. `cops` are the cop positions on the cops' turn, `robber` the
/// robber position at that moment.
inline std::optional<std::string> check_train_chase_invariants(const Graph& g, const TrainChaseState& s,
                                                               std::span<const Vertex> cops,
                                                               Vertex robber) {
  const auto& a = s.anchors;
  if (a.empty()) return "no anchors";
  // (a) territory: connected, holds v_1 and every anchor.
  if (!s.territory.contains(a.front())) return "(a) v_1 outside territory";
  if (static_cast<int>(component_of(g, a.front(), &s.territory).size()) != s.territory.size()) {
    return "(a) territory disconnected";
  }
  for (Vertex v : a)
    if (!s.territory.contains(v)) return "(a) anchor " + std::to_string(v) + " outside territory";
  // (b) every edge leaving the territory ends in a cut.
  VertexSet cut_union(g.order());
  for (std::size_t i = 0; i < s.cuts.size(); ++i) {
    for (Vertex x : s.cuts[i]) {
      if (!g.adjacent(x, a[i])) return "(b) cut vertex " + std::to_string(x) + " not next to its anchor";
      cut_union.insert(x);
    }
  }
  for (Vertex u : s.territory.members())
    for (Vertex v : g.neighbors(u))
      if (!s.territory.contains(v) && !cut_union.contains(v)) {
        return "(b) edge " + std::to_string(u) + "-" + std::to_string(v) + " escapes the cuts";
      }
  // (c) anchors induce a path.
  if (!is_induced_path(g, a)) return "(c) anchors do not induce a path";
  // (d) cop i sits on v_(i+1), the trailing cops on the tip.
  for (std::size_t i = 0; i < cops.size(); ++i) {
    Vertex want = a[std::min(i, a.size() - 1)];
    if (cops[i] != want) return "(d) cop " + std::to_string(i) + " off its anchor";
  }
  // (e) robber inside the territory unless already within reach of a cop.
  bool in_reach = false;
  for (Vertex c : cops) in_reach = in_reach || c == robber || g.adjacent(c, robber);
  if (!in_reach && !s.territory.contains(robber)) return "(e) robber outside territory";
  return std::nullopt;
}

/// Robber policy: current cops and robber position -> next robber position.
using RobberPolicy = std::function<Vertex(std::span<const Vertex> cops, Vertex robber)>;

struct TrainChasePhase {
  TrainChaseState state;
  std::vector<Vertex> cops;  // on the cops' turn, before moving
  Vertex robber = 0;
};

struct TrainChaseRun {
  bool captured = false;
  int cop_turns = 0;
  TrainChaseState state;
  std::vector<TrainChasePhase> phases;
  Vertex robber = 0;
};

/// Plays k train-chase turns: cops start together on v1, the robber on w1.
/// Phase i is recorded on the cops' turn, before the move of turn i.
inline TrainChaseRun train_chase(const Graph& g, int k, Vertex v1, Vertex w1, const RobberPolicy& robber) {
  if (k < 1) throw std::invalid_argument("train_chase: need at least one cop");
  g.check(w1);
  TrainChaseRun run;
  run.state = train_chase_start(g, v1);
  std::vector<Vertex> cops(static_cast<std::size_t>(k), v1);
  Vertex w = w1;
  for (int turn = 1; turn <= k; ++turn) {
    run.phases.push_back({run.state, cops, w});
    run.cop_turns = turn;
    for (Vertex c : cops) {
      if (c == w || g.adjacent(c, w)) {
        run.captured = true;
        run.robber = w;
        return run;
      }
    }
    Vertex next = train_chase_extend(g, run.state, w);
    if (turn < k)
      for (int i = turn; i < k; ++i) cops[i] = next;
    Vertex moved = robber(cops, w);
    if (moved != w && (moved < 0 || moved >= g.order() || !g.adjacent(moved, w))) {
      throw std::invalid_argument("train_chase: illegal robber move " + std::to_string(w) + "->" +
                                  std::to_string(moved));
    }
    w = moved;
    if (std::find(cops.begin(), cops.end(), w) != cops.end()) {
      run.captured = true;
      run.robber = w;
      return run;
    }
  }
  run.robber = w;
  run.phases.push_back({run.state, cops, w});
  return run;
}

}  // namespace copsrob
