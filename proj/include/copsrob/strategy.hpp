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
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

/// Internal state of a deterministic cop strategy. Cops are labeled; `data`
/// holds whatever bookkeeping the strategy needs. Two states with equal
/// encodings must behave identically.
struct StrategyState {
  std::vector<int> data;
  std::vector<Vertex> cops;

  bool operator==(const StrategyState&) const = default;
};

inline std::string encode(const StrategyState& s) {
  std::string out;
  auto put = [&](std::int32_t x) {
    char buf[4];
    std::memcpy(buf, &x, 4);
    out.append(buf, 4);
  };
  put(static_cast<std::int32_t>(s.data.size()));
  for (int x : s.data) put(x);
  for (Vertex c : s.cops) put(c);
  return out;
}

/// A structural guarantee the strategy relies on did not hold.
class StrategyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  virtual const Graph& graph() const = 0;
  virtual int cop_count() const = 0;
  virtual StrategyState initial() const = 0;
  /// Cops' move against a robber standing on `robber`. Must be deterministic.
  virtual StrategyState respond(const StrategyState& s, Vertex robber) const = 0;
};

namespace detail {

/// Moves the first cop that can reach the robber onto it.
inline std::optional<StrategyState> capture_move(const Graph& g, const StrategyState& s, Vertex robber) {
  for (std::size_t i = 0; i < s.cops.size(); ++i) {
    Vertex c = s.cops[i];
    if (c == robber || g.adjacent(c, robber)) {
      StrategyState next = s;
      next.cops[i] = robber;
      return next;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// One cop parked on vertex 0 forever.
class StationaryStrategy : public CopStrategy {
 public:
  explicit StationaryStrategy(Graph g, int cops = 1) : g_(std::move(g)), k_(cops) {
    if (g_.order() < 1 || k_ < 1) throw std::invalid_argument("stationary: empty graph or no cops");
  }
  std::string name() const override { return "stationary"; }
  const Graph& graph() const override { return g_; }
  int cop_count() const override { return k_; }
  StrategyState initial() const override { return {{}, std::vector<Vertex>(static_cast<std::size_t>(k_), 0)}; }
  StrategyState respond(const StrategyState& s, Vertex robber) const override {
    if (auto cap = detail::capture_move(g_, s, robber)) return *cap;
    return s;
  }

 private:
  Graph g_;
  int k_;
};

enum class Outcome { Captured, RobberSurvives, BudgetExceeded, StrategyFailure };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Captured: return "captured";
    case Outcome::RobberSurvives: return "robber_survives";
    case Outcome::BudgetExceeded: return "budget_exceeded";
    case Outcome::StrategyFailure: return "strategy_failure";
  }
  return "?";
}

/// max_steps counts cop turns up to and including the capturing move.
/// witness lists the robber positions of a repeating line of play.
struct Verdict {
  Outcome outcome = Outcome::Captured;
  int max_steps = 0;
  std::vector<Vertex> witness;
  std::size_t states_explored = 0;
  std::string message;

  bool captured() const { return outcome == Outcome::Captured; }
};

namespace detail {

class Verifier {
 public:
  Verifier(const Graph& g, const CopStrategy& strat, int budget, std::size_t max_states)
      : g_(g), strat_(strat), budget_(budget), max_states_(max_states) {}

  struct Survives {
    std::vector<Vertex> cycle;
  };
  struct OverBudget {
    std::string why;
  };
  struct Failure {
    std::string why;
  };

  // Cop turns until capture with the cops to move and the robber on r.
  int value(const StrategyState& s, Vertex r, int depth) {
    std::string key = encode(s);
    key.append(reinterpret_cast<const char*>(&r), sizeof r);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (depth + it->second > budget_) throw OverBudget{"line longer than step budget"};
      return it->second;
    }
    if (on_stack_.count(key)) {
      auto pos = std::find(stack_keys_.begin(), stack_keys_.end(), key) - stack_keys_.begin();
      throw Survives{{stack_robbers_.begin() + pos, stack_robbers_.end()}};
    }
    if (depth >= budget_) throw OverBudget{"line longer than step budget"};
    if (memo_.size() >= max_states_) throw OverBudget{"state cap reached"};
    ++explored_;
    StrategyState next;
    try {
      next = strat_.respond(s, r);
    } catch (const StrategyError& e) {
      throw Failure{e.what()};
    }
    check_legal(s, next);
    int v = 1;
    if (std::find(next.cops.begin(), next.cops.end(), r) == next.cops.end()) {
      on_stack_.insert(key);
      stack_keys_.push_back(key);
      stack_robbers_.push_back(r);
      int worst = 0;
      auto consider = [&](Vertex w) {
        if (std::find(next.cops.begin(), next.cops.end(), w) != next.cops.end()) return;
        worst = std::max(worst, value(next, w, depth + 1));
      };
      consider(r);
      for (Vertex w : g_.neighbors(r)) consider(w);
      stack_robbers_.pop_back();
      stack_keys_.pop_back();
      on_stack_.erase(key);
      v = 1 + worst;
    }
    memo_.emplace(std::move(key), v);
    return v;
  }

  std::size_t explored() const { return explored_; }

 private:
  void check_legal(const StrategyState& before, const StrategyState& after) const {
    if (after.cops.size() != before.cops.size()) throw Failure{"cop count changed"};
    for (std::size_t i = 0; i < after.cops.size(); ++i) {
      Vertex a = before.cops[i], b = after.cops[i];
      if (b < 0 || b >= g_.order() || (a != b && !g_.adjacent(a, b))) {
        throw Failure{"illegal move of cop " + std::to_string(i) + ": " + std::to_string(a) + "->" +
                      std::to_string(b)};
      }
    }
  }

  const Graph& g_;
  const CopStrategy& strat_;
  int budget_;
  std::size_t max_states_;
  std::unordered_map<std::string, int> memo_;
  std::unordered_set<std::string> on_stack_;
  std::vector<std::string> stack_keys_;
  std::vector<Vertex> stack_robbers_;
  std::size_t explored_ = 0;
};

}  // namespace detail

/// Plays the strategy against every robber placement and every robber line.
inline Verdict adversarial_verify(const Graph& g, const CopStrategy& strat, int step_budget,
                                  std::size_t max_states = 4'000'000) {
  if (step_budget < 1) throw std::invalid_argument("adversarial_verify: step budget must be >= 1");
  Verdict out;
  detail::Verifier search(g, strat, step_budget, max_states);
  try {
    StrategyState start = strat.initial();
    if (static_cast<int>(start.cops.size()) != strat.cop_count()) {
      throw detail::Verifier::Failure{"initial placement has the wrong number of cops"};
    }
    for (Vertex c : start.cops)
      if (c < 0 || c >= g.order()) throw detail::Verifier::Failure{"initial cop off the graph"};
    for (Vertex r = 0; r < g.order(); ++r) {
      if (std::find(start.cops.begin(), start.cops.end(), r) != start.cops.end()) continue;
      out.max_steps = std::max(out.max_steps, search.value(start, r, 0));
    }
  } catch (const detail::Verifier::Survives& s) {
    out.outcome = Outcome::RobberSurvives;
    out.witness = s.cycle;
    out.message = "robber repeats a position";
  } catch (const detail::Verifier::OverBudget& b) {
    out.outcome = Outcome::BudgetExceeded;
    out.message = b.why;
  } catch (const detail::Verifier::Failure& f) {
    out.outcome = Outcome::StrategyFailure;
    out.message = f.why;
  }
  out.states_explored = search.explored();
  return out;
}

}  // namespace copsrob
