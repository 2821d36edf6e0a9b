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

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrob/generators.hpp"
#include "copsrob/layers.hpp"
#include "copsrob/patterns.hpp"
#include "copsrob/strategy.hpp"
#include "copsrob/train_chase.hpp"

namespace copsrob {

namespace detail {

inline void require_free(const Graph& g, const Family& family, const std::string& who) {
  if (g.order() < 1 || !is_connected(g)) throw std::invalid_argument(who + ": graph must be connected and non-empty");
  for (const auto& p : family) {
    if (auto hit = find_induced(g, p)) {
      std::string where;
      for (Vertex v : *hit) where += (where.empty() ? "" : ",") + std::to_string(v);
      throw std::invalid_argument(who + ": graph contains an induced " + p.name + " on {" + where + "}");
    }
  }
}

/// Common skeleton of the layer strategies: every cop waits on u0 = 0, the
/// first robber position picks u1, and C1 never leaves u0 afterwards.
/// data = {u1, progress...}; empty before the robber has been seen.
class LayerStrategyBase : public CopStrategy {
 public:
  const Graph& graph() const override { return g_; }
  int cop_count() const override { return k_; }
  StrategyState initial() const override { return {{}, std::vector<Vertex>(static_cast<std::size_t>(k_), 0)}; }

  StrategyState respond(const StrategyState& s, Vertex robber) const override {
    if (auto cap = capture_move(g_, s, robber)) return *cap;
    if (s.data.empty()) {
      Vertex u1 = geodesic(g_, 0, robber)[1];
      return open(u1, s);
    }
    const auto& L = decomposition(s.data[0]);
    if (!L.hprime.contains(robber)) throw StrategyError(name() + ": robber left the component of u0");
    return advance(s, robber);
  }

 protected:
  LayerStrategyBase(Graph g, int k) : g_(std::move(g)), k_(k) {}

  void build_decompositions() {
    for (Vertex u1 : g_.neighbors(0)) decomps_.emplace(u1, layered_decomposition(g_, 0, u1));
  }
  const LayeredDecomposition& decomposition(Vertex u1) const { return decomps_.at(u1); }

  virtual StrategyState open(Vertex u1, const StrategyState& s) const = 0;
  virtual StrategyState advance(const StrategyState& s, Vertex robber) const = 0;

  Graph g_;
  int k_;

 private:
  std::map<Vertex, LayeredDecomposition> decomps_;
};

}  // namespace detail

/// Two cops on claw- and bull-free graphs. C2 walks one layer deeper every
/// turn; layers are cliques completely joined to their neighbors, so C2
/// controls its own layer and both adjacent ones.
/// data = {u1, layer of C2}.
class Cl1Strategy : public detail::LayerStrategyBase {
 public:
  explicit Cl1Strategy(Graph g) : LayerStrategyBase(std::move(g), 2) {
    detail::require_free(g_, {named_pattern("claw"), named_pattern("bull")}, "cl1");
    build_decompositions();
  }
  std::string name() const override { return "cl1"; }

 protected:
  StrategyState open(Vertex u1, const StrategyState& s) const override {
    StrategyState next = s;
    next.data = {u1, 1};
    next.cops[1] = u1;
    return next;
  }
  StrategyState advance(const StrategyState& s, Vertex) const override {
    const auto& L = decomposition(s.data[0]);
    int layer = s.data[1] + 1;
    if (layer > L.depth()) throw StrategyError("cl1: C2 ran out of layers");
    Vertex target = L.layers[layer].front();
    if (!g_.adjacent(s.cops[1], target)) throw StrategyError("cl1: consecutive layers not joined");
    StrategyState next = s;
    next.data[1] = layer;
    next.cops[1] = target;
    return next;
  }
};

/// Three cops on claw-, net- and antenna-free graphs. Each layer N_j has a
/// vertex x_j dominating N_{j+1}; at step i, C2 stands on x_{i-1} and C3 on
/// x_i. data = {u1, i}.
class Cl2Strategy : public detail::LayerStrategyBase {
 public:
  explicit Cl2Strategy(Graph g) : LayerStrategyBase(std::move(g), 3) {
    detail::require_free(g_, {named_pattern("claw"), named_pattern("net"), named_pattern("antenna")}, "cl2");
    build_decompositions();
    for (Vertex u1 : g_.neighbors(0)) {
      const auto& L = decomposition(u1);
      std::vector<Vertex> x;
      for (int j = 0; j < L.depth(); ++j) {
        Vertex pick = -1;
        for (Vertex v : L.layers[j]) {
          if (detail::dominates(g_, v, L.layers[j + 1])) {
            pick = v;
            break;
          }
        }
        x.push_back(pick);
      }
      spine_.emplace(u1, std::move(x));
    }
  }
  std::string name() const override { return "cl2"; }

  /// x_0..x_{k-1} for a given u1; -1 marks a layer without a dominating vertex.
  const std::vector<Vertex>& spine(Vertex u1) const { return spine_.at(u1); }

 protected:
  StrategyState open(Vertex u1, const StrategyState& s) const override { return step(u1, 1, s); }
  StrategyState advance(const StrategyState& s, Vertex) const override { return step(s.data[0], s.data[1] + 1, s); }

 private:
  StrategyState step(Vertex u1, int i, const StrategyState& s) const {
    const auto& x = spine(u1);
    if (i >= static_cast<int>(x.size())) throw StrategyError("cl2: dominating path exhausted");
    if (x[i - 1] < 0 || x[i] < 0) throw StrategyError("cl2: layer has no dominating vertex");
    StrategyState next = s;
    next.data = {u1, i};
    next.cops[1] = x[i - 1];
    next.cops[2] = x[i];
    return next;
  }

  std::map<Vertex, std::vector<Vertex>> spine_;
};

/// Five cops on claw- and net-free graphs. A_j is the lexicographically least
/// maximal independent set of N_j, which dominates N_j. Two pairs of cops
/// alternate: the front pair holds A_i while the rear pair walks, one cop at
/// a time along geodesics inside H', to A_{i+1}.
/// data = {u1, i, front pair}; pair 0 is cops 1,2 and pair 1 is cops 3,4.
class Cl3Strategy : public detail::LayerStrategyBase {
 public:
  explicit Cl3Strategy(Graph g) : LayerStrategyBase(std::move(g), 5) {
    detail::require_free(g_, {named_pattern("claw"), named_pattern("net")}, "cl3");
    build_decompositions();
    for (Vertex u1 : g_.neighbors(0)) {
      const auto& L = decomposition(u1);
      std::vector<std::vector<Vertex>> a;
      for (const auto& layer : L.layers) {
        std::vector<Vertex> mis;
        for (Vertex v : layer) {
          bool free = true;
          for (Vertex m : mis) free = free && !g_.adjacent(v, m);
          if (free) mis.push_back(v);
        }
        a.push_back(std::move(mis));
      }
      anchors_.emplace(u1, std::move(a));
    }
  }
  std::string name() const override { return "cl3"; }

  const std::vector<std::vector<Vertex>>& anchor_sets(Vertex u1) const { return anchors_.at(u1); }

 protected:
  StrategyState open(Vertex u1, const StrategyState& s) const override {
    StrategyState next = s;
    next.data = {u1, 1, 1};
    next.cops[3] = next.cops[4] = u1;
    return next;
  }

  StrategyState advance(const StrategyState& s, Vertex) const override {
    Vertex u1 = s.data[0];
    int i = s.data[1], front = s.data[2];
    const auto& A = anchor_sets(u1);
    StrategyState next = s;
    auto rear_targets = [&](int layer) {
      if (layer >= static_cast<int>(A.size())) throw StrategyError("cl3: ran out of layers");
      const auto& t = A[layer];
      if (t.size() > 2) throw StrategyError("cl3: layer with independence number above 2");
      return std::vector<Vertex>{t.front(), t.back()};
    };
    int rear = 1 - front;
    auto targets = rear_targets(i + 1);
    if (next.cops[1 + 2 * rear] == targets[0] && next.cops[2 + 2 * rear] == targets[1]) {
      ++i;
      front = rear;
      rear = 1 - front;
      targets = rear_targets(i + 1);
    }
    const auto& L = decomposition(u1);
    for (int m = 0; m < 2; ++m) {
      Vertex& cop = next.cops[1 + 2 * rear + m];
      if (cop == targets[m]) continue;
      cop = geodesic(g_, cop, targets[m], &L.hprime)[1];
      break;
    }
    next.data = {u1, i, front};
    return next;
  }

 private:
  std::map<Vertex, std::vector<std::vector<Vertex>>> anchors_;
};

/// k-2 cops on P_k-free graphs: train-chase from vertex 0. Once every cop
/// holds an anchor the path dominates the territory, so capture is due.
/// data = anchors v_1..v_j.
class PkFreeStrategy : public CopStrategy {
 public:
  PkFreeStrategy(Graph g, int k) : g_(std::move(g)), k_(k) {
    if (k < 3) throw std::invalid_argument("pkfree: k must be >= 3");
    Pattern pk{gen::path(k), "P" + std::to_string(k)};
    detail::require_free(g_, {pk}, "pkfree");
  }
  std::string name() const override { return "pkfree:" + std::to_string(k_); }
  const Graph& graph() const override { return g_; }
  int cop_count() const override { return k_ - 2; }
  StrategyState initial() const override {
    return {{0}, std::vector<Vertex>(static_cast<std::size_t>(k_ - 2), 0)};
  }
  StrategyState respond(const StrategyState& s, Vertex robber) const override {
    if (auto cap = detail::capture_move(g_, s, robber)) return *cap;
    int placed = static_cast<int>(s.data.size());
    if (placed >= cop_count()) throw StrategyError("pkfree: anchor path does not dominate the territory");
    TrainChaseState chase = train_chase_replay(g_, s.data);
    if (!chase.territory.contains(robber)) throw StrategyError("pkfree: robber outside the territory");
    Vertex next_anchor = train_chase_extend(g_, chase, robber);
    StrategyState next = s;
    next.data.push_back(next_anchor);
    for (int i = placed; i < cop_count(); ++i) next.cops[i] = next_anchor;
    return next;
  }

 private:
  Graph g_;
  int k_;
};

/// 4n cops on graphs without an induced n-claw or n-net.
///
/// Cops form four groups of n; group g holds segment seg[g] of the anchor
/// path (anchors seg*n .. seg*n+n-1). After the initial train-chase the loop
/// is: release the group on the third-from-last segment, walk it along the
/// path to the tip, then train-chase n new anchors from the tip. Releasing is
/// only sound when the robber's region is unchanged without that group; a
/// mismatch raises StrategyError.
///
/// data = {phase, e, free group, seg[0..3], anchors...}.
class ClawNetStrategy : public CopStrategy {
 public:
  enum Phase { kTrain = 0, kWalk = 1, kExtend = 2, kRelease = 3 };

  ClawNetStrategy(Graph g, int n) : g_(std::move(g)), n_(n) {
    if (n < 1) throw std::invalid_argument("clawnet: n must be >= 1");
    detail::require_free(g_, {gen_claw(n, n, n), gen_net(n, n, n)}, "clawnet");
  }
  std::string name() const override { return "clawnet:" + std::to_string(n_); }
  const Graph& graph() const override { return g_; }
  int cop_count() const override { return 4 * n_; }
  StrategyState initial() const override {
    return {{kTrain, 0, -1, 0, 1, 2, 3, 0}, std::vector<Vertex>(static_cast<std::size_t>(4 * n_), 0)};
  }

  StrategyState respond(const StrategyState& s, Vertex robber) const override {
    if (auto cap = detail::capture_move(g_, s, robber)) return *cap;
    StrategyState next = s;
    std::vector<Vertex> anchors(s.data.begin() + kHeader, s.data.end());
    int phase = s.data[0];
    int m = static_cast<int>(anchors.size());

    if (phase == kTrain) {
      if (m < 4 * n_) {
        TrainChaseState chase = train_chase_replay(g_, anchors);
        if (!chase.territory.contains(robber)) throw StrategyError("clawnet: robber outside the territory");
        Vertex v = train_chase_extend(g_, chase, robber);
        for (int i = m; i < 4 * n_; ++i) next.cops[i] = v;
        next.data.push_back(v);
        return next;
      }
      phase = kRelease;
    }

    if (phase == kRelease) {
      int segments = m / n_;
      int group = group_on(s, segments - 3);
      if (group < 0) throw StrategyError("clawnet: no group on the segment to release");
      std::vector<Vertex> held;
      for (int c = 0; c < cop_count(); ++c)
        if (c / n_ != group) held.push_back(s.cops[c]);
      if (region(held, robber) != region(s.cops, robber)) {
        throw StrategyError("clawnet: releasing segment " + std::to_string(segments - 3) +
                            " opens the robber's region");
      }
      next.data[0] = phase = kWalk;
      next.data[2] = group;
      next.data[3 + group] = -1;
    }

    int group = next.data[2];
    if (phase == kWalk) {
      bool arrived = true;
      for (int t = 0; t < n_; ++t) arrived = arrived && next.cops[group * n_ + t] == anchors.back();
      if (!arrived) {
        for (int t = 0; t < n_; ++t) {
          Vertex& cop = next.cops[group * n_ + t];
          if (cop == anchors.back()) continue;
          auto at = std::find(anchors.begin(), anchors.end(), cop);
          if (at == anchors.end()) throw StrategyError("clawnet: walking cop left the anchor path");
          cop = *(at + 1);
        }
        return next;
      }
      next.data[0] = phase = kExtend;
      next.data[1] = 0;
    }

    // kExtend: cops e..n-1 of the free group stand on the tip.
    int e = next.data[1];
    TrainChaseState chase = train_chase_replay(g_, anchors);
    if (!chase.territory.contains(robber)) throw StrategyError("clawnet: robber outside the territory");
    Vertex v = train_chase_extend(g_, chase, robber);
    for (int t = e; t < n_; ++t) next.cops[group * n_ + t] = v;
    next.data.push_back(v);
    if (e + 1 == n_) {
      next.data[0] = kRelease;
      next.data[1] = 0;
      next.data[3 + group] = m / n_;
      next.data[2] = -1;
    } else {
      next.data[1] = e + 1;
    }
    return next;
  }

 private:
  static constexpr int kHeader = 7;

  int group_on(const StrategyState& s, int segment) const {
    for (int g = 0; g < 4; ++g)
      if (s.data[3 + g] == segment) return g;
    return -1;
  }

  // Component of the robber after deleting the closed neighborhoods of `cops`.
  VertexSet region(const std::vector<Vertex>& cops, Vertex robber) const {
    VertexSet open = VertexSet::all(g_.order());
    for (Vertex c : cops) {
      open.erase(c);
      for (Vertex w : g_.neighbors(c)) open.erase(w);
    }
    return VertexSet(g_.order(), component_of(g_, robber, &open));
  }

  Graph g_;
  int n_;
};

/// Builds a strategy from its CLI name: cl1, cl2, cl3, pkfree:k, clawnet:n,
/// stationary.
inline std::unique_ptr<CopStrategy> make_strategy(std::string_view spec, const Graph& g) {
  std::string s(spec);
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  auto param = [&] {
    if (colon == std::string::npos) throw std::invalid_argument("strategy '" + s + "' needs a parameter");
    return gen::detail::to_int(s.substr(colon + 1));
  };
  if (head == "cl1") return std::make_unique<Cl1Strategy>(g);
  if (head == "cl2") return std::make_unique<Cl2Strategy>(g);
  if (head == "cl3") return std::make_unique<Cl3Strategy>(g);
  if (head == "pkfree") return std::make_unique<PkFreeStrategy>(g, param());
  if (head == "clawnet") return std::make_unique<ClawNetStrategy>(g, param());
  if (head == "stationary") return std::make_unique<StationaryStrategy>(g);
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

}  // namespace copsrob
