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
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "copsrob/enumerate.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/graph_io.hpp"
#include "copsrob/layers.hpp"
#include "copsrob/patterns.hpp"
#include "copsrob/solver.hpp"
#include "copsrob/strategies.hpp"
#include "copsrob/train_chase.hpp"
#include "copsrob/transforms.hpp"

namespace copsrob {

/// Runs body(i) for i in [0, count) on `jobs` worker threads. Each index is
/// handled exactly once; results must be written to per-index slots.
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct InstanceResult {
  bool ok = true;
  bool budget = false;
  int steps = 0;
  std::string reason;
};

struct CampaignFailure {
  std::string graph6;
  std::string reason;
};

struct CampaignReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t budget_hits = 0;
  int max_steps = 0;
  double seconds = 0;
  std::vector<CampaignFailure> failures;  // in instance order

  bool ok() const { return passed == instances; }
};

/// Family-freeness as an enumeration filter.
inline std::function<bool(const Graph&)> free_of(Family family) {
  return [family = std::move(family)](const Graph& g) { return is_family_free(g, family); };
}

namespace detail {

inline CampaignReport collect(std::string name, const std::vector<Graph>& graphs,
                              const std::vector<InstanceResult>& results, double seconds) {
  CampaignReport r;
  r.name = std::move(name);
  r.instances = graphs.size();
  r.seconds = seconds;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& res = results[i];
    r.max_steps = std::max(r.max_steps, res.steps);
    if (res.budget) ++r.budget_hits;
    if (res.ok) {
      ++r.passed;
    } else {
      r.failures.push_back({emit_graph6(graphs[i]), res.reason});
    }
  }
  return r;
}

inline std::vector<Graph> flatten(const std::vector<std::vector<Graph>>& levels, int min_order) {
  std::vector<Graph> out;
  for (const auto& level : levels)
    for (const auto& g : level)
      if (g.order() >= min_order) out.push_back(g);
  return out;
}

// Cop-win with k cops; smaller k are tried first since winning is monotone.
inline bool cops_suffice(const Graph& g, int k) {
  for (int j = 1; j <= k; ++j)
    if (solve(g, j).cop_win()) return true;
  return false;
}

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace detail

/// Runs `check` on every graph and gathers the outcome.
inline CampaignReport run_over(std::string name, const std::vector<Graph>& graphs, int jobs,
                               const std::function<InstanceResult(const Graph&)>& check) {
  auto t0 = detail::Clock::now();
  std::vector<InstanceResult> results(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    try {
      results[i] = check(graphs[i]);
    } catch (const BudgetExceeded& e) {
      results[i] = {false, true, 0, e.what()};
    } catch (const std::exception& e) {
      results[i] = {false, false, 0, e.what()};
    }
  });
  return detail::collect(std::move(name), graphs, results, detail::since(t0));
}

struct StrategyCampaign {
  std::string name;
  Family family;          // class = connected family-free graphs
  std::string strategy;   // make_strategy spec
  int nmax = 7;
  int max_turns = 0;      // 0: no bound on capture time
  int solver_cops = 0;    // 0: skip the exact cross-check
  int step_budget = 500;
};

/// Adversarial verification of a strategy on every member of its class,
/// cross-checked against the exact solver.
inline CampaignReport run_strategy_campaign(const StrategyCampaign& c, int jobs) {
  auto graphs = detail::flatten(enumerate_connected_levels(c.nmax, free_of(c.family)), 1);
  return run_over(c.name, graphs, jobs, [&](const Graph& g) {
    InstanceResult res;
    auto strat = make_strategy(c.strategy, g);
    Verdict v = adversarial_verify(g, *strat, c.step_budget);
    res.steps = v.max_steps;
    if (!v.captured()) {
      res.ok = false;
      res.budget = v.outcome == Outcome::BudgetExceeded;
      res.reason = std::string(to_string(v.outcome)) + ": " + v.message;
      return res;
    }
    if (c.max_turns > 0 && v.max_steps > c.max_turns) {
      res.ok = false;
      res.reason = "capture took " + std::to_string(v.max_steps) + " cop turns";
      return res;
    }
    if (c.solver_cops > 0 && !detail::cops_suffice(g, c.solver_cops)) {
      res.ok = false;
      res.reason = "exact solver: robber wins against " + std::to_string(c.solver_cops) + " cops";
    }
    return res;
  });
}

/// cop_number(K(G)) and cop_number(S_k(G)), k = 1, 2, against cop_number(G).
inline CampaignReport run_monotone_campaign(int nmax, int jobs) {
  auto graphs = detail::flatten(enumerate_connected_levels(nmax, [](const Graph&) { return true; }), 1);
  return run_over("monotone", graphs, jobs, [](const Graph& g) {
    InstanceResult res;
    int c = cop_number(g);
    auto fail = [&](const std::string& what, int got) {
      res.ok = false;
      res.reason += what + " has cop number " + std::to_string(got) + " < " + std::to_string(c) + "; ";
    };
    if (g.size() > 0) {
      int ck = cop_number(clique_substitution(g).graph);
      if (ck < c) fail("K(G)", ck);
    }
    for (int k : {1, 2}) {
      int cs = cop_number(subdivide(g, k));
      if (cs < c) fail("S_" + std::to_string(k) + "(G)", cs);
    }
    return res;
  });
}

/// Class whose members each layer variant is stated for.
inline Family layer_class(LayerVariant v) {
  switch (v) {
    case LayerVariant::A: return {named_pattern("claw")};
    case LayerVariant::B: return {named_pattern("claw"), named_pattern("bull")};
    case LayerVariant::C: return {named_pattern("claw"), named_pattern("net"), named_pattern("antenna")};
    case LayerVariant::D: return {named_pattern("claw"), named_pattern("net")};
  }
  return {};
}

/// validate_layers over every ordered adjacent pair (u0, u1) of every member.
inline CampaignReport run_layers_campaign(LayerVariant variant, int nmax, int jobs) {
  auto graphs = detail::flatten(enumerate_connected_levels(nmax, free_of(layer_class(variant))), 2);
  std::string name = "layers:";
  name += static_cast<char>('a' + static_cast<int>(variant));
  return run_over(name, graphs, jobs, [variant](const Graph& g) {
    InstanceResult res;
    for (Vertex u0 = 0; u0 < g.order() && res.ok; ++u0) {
      for (Vertex u1 : g.neighbors(u0)) {
        auto report = validate_layers(g, layered_decomposition(g, u0, u1), variant);
        if (auto bad = report.first_failure()) {
          res.ok = false;
          res.reason = "(u0,u1)=(" + std::to_string(u0) + "," + std::to_string(u1) + ") layer " +
                       std::to_string(bad->layer) + " witness";
          for (Vertex w : bad->witness) res.reason += " " + std::to_string(w);
          break;
        }
      }
    }
    return res;
  });
}

/// {claw + P2, net + P2}: predicted cop-bounded; every free connected graph
/// on at most nmax vertices should need at most 4 cops.
inline CampaignReport run_predict_campaign(int nmax, int jobs) {
  Family family = parse_family("claw+p2,net+p2");
  auto graphs = detail::flatten(enumerate_connected_levels(nmax, free_of(family)), 1);
  bool predicted = predict_cop_bounded_components(family, 4);
  return run_over("predict", graphs, jobs, [predicted](const Graph& g) {
    InstanceResult res;
    if (!predicted) {
      res.ok = false;
      res.reason = "predicate says unbounded";
      return res;
    }
    int c = cop_number(g, 4);
    if (c > 4) {
      res.ok = false;
      res.reason = "cop number " + std::to_string(c);
    }
    return res;
  });
}

/// Random connected instance for the train-chase campaign: the largest
/// component of G(n, p).
inline Graph largest_component(const Graph& g) {
  auto comps = components(g);
  auto best = std::max_element(comps.begin(), comps.end(),
                               [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return induced(g, std::span<const Vertex>(*best)).graph;
}

struct TrainChaseCampaign {
  int count = 500;
  std::uint64_t seed = 1;
  int max_order = 40;
};

/// Chase invariants (a)-(e) after every train-chase phase, against the exact
/// robber (two cops, optimal replies) and a random legal mover (1 to 5 cops).
inline CampaignReport run_train_chase_campaign(const TrainChaseCampaign& c, int jobs) {
  std::vector<Graph> graphs(static_cast<std::size_t>(c.count), Graph(1, std::span<const Edge>{}));
  std::vector<std::uint64_t> seeds(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    seeds[i] = c.seed * 1'000'003ULL + i;
    std::mt19937_64 rng(seeds[i]);
    int n = std::uniform_int_distribution<int>(2, c.max_order)(rng);
    double p = i % 2 == 0 ? 0.1 : 0.3;
    graphs[i] = largest_component(gen::gnp(n, p, rng()));
  }
  auto t0 = detail::Clock::now();
  std::vector<InstanceResult> results(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    std::mt19937_64 rng(seeds[i] ^ 0x9e3779b97f4a7c15ULL);
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    InstanceResult& res = results[i];
    auto audit = [&](const TrainChaseRun& run, const std::string& who) {
      for (std::size_t ph = 0; ph < run.phases.size() && res.ok; ++ph) {
        const auto& phase = run.phases[ph];
        if (auto bad = check_train_chase_invariants(g, phase.state, phase.cops, phase.robber)) {
          res.ok = false;
          res.reason = who + " phase " + std::to_string(ph) + ": " + *bad;
        }
      }
      res.steps = std::max(res.steps, run.cop_turns);
    };
    try {
      // Exact adversary: 2 cops, robber starts where it survives longest.
      SolveResult solved = solve(g, 2);
      Vertex v1 = pick(g.order());
      std::vector<Vertex> start{v1, v1};
      Vertex w1 = 0;
      int best = -1;
      for (Vertex r = 0; r < g.order(); ++r) {
        if (r == v1) continue;
        auto d = solved.depth({start, r, Mover::Cops});
        int score = d ? *d : std::numeric_limits<int>::max();
        if (score > best) best = score, w1 = r;
      }
      if (best < 0) w1 = v1;
      RobberPolicy optimal = [&](std::span<const Vertex> cops, Vertex r) {
        std::vector<Vertex> sorted(cops.begin(), cops.end());
        std::sort(sorted.begin(), sorted.end());
        return optimal_robber_reply(solved, {sorted, r, Mover::Robber});
      };
      audit(train_chase(g, 2, v1, w1, optimal), "optimal");
      // Random adversary with 1..5 cops.
      int k = 1 + pick(5);
      Vertex rv1 = pick(g.order());
      RobberPolicy random = [&](std::span<const Vertex> cops, Vertex r) {
        std::vector<Vertex> moves{r};
        for (Vertex w : g.neighbors(r))
          if (std::find(cops.begin(), cops.end(), w) == cops.end()) moves.push_back(w);
        return moves[static_cast<std::size_t>(pick(static_cast<int>(moves.size())))];
      };
      audit(train_chase(g, k, rv1, pick(g.order()), random), "random");
    } catch (const std::exception& e) {
      res.ok = false;
      res.reason = e.what();
    }
  });
  return detail::collect("trainchase", graphs, results, detail::since(t0));
}

/// Campaign named on the command line.
inline CampaignReport run_theorem(std::string_view theorem, int nmax, int jobs, std::uint64_t seed) {
  std::string t(theorem);
  auto colon = t.find(':');
  std::string head = t.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : t.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw std::invalid_argument("theorem '" + t + "' needs a parameter");
    return gen::detail::to_int(arg);
  };
  auto p = [](const char* n) { return named_pattern(n); };
  if (head == "cl1") return run_strategy_campaign({t, {p("claw"), p("bull")}, "cl1", nmax, 0, 2}, jobs);
  if (head == "cl2") return run_strategy_campaign({t, {p("claw"), p("net"), p("antenna")}, "cl2", nmax, 0, 3}, jobs);
  if (head == "cl3") return run_strategy_campaign({t, {p("claw"), p("net")}, "cl3", nmax, 0, 5}, jobs);
  if (head == "pkfree") {
    int k = need_arg();
    if (k < 3) throw std::invalid_argument("pkfree needs k >= 3");
    Pattern pk{gen::path(k), "P" + std::to_string(k)};
    return run_strategy_campaign({t, {pk}, t, nmax, k - 1, k - 2}, jobs);
  }
  if (head == "clawnet") {
    int n = need_arg();
    if (n < 1) throw std::invalid_argument("clawnet needs n >= 1");
    int cops = nmax <= 7 ? 4 * n : 0;
    return run_strategy_campaign({t, {gen_claw(n, n, n), gen_net(n, n, n)}, t, nmax, 0, cops}, jobs);
  }
  if (head == "monotone") return run_monotone_campaign(nmax, jobs);
  if (head == "layers") {
    if (arg.empty()) throw std::invalid_argument("layers needs a variant a|b|c|d");
    return run_layers_campaign(parse_layer_variant(arg), nmax, jobs);
  }
  if (head == "predict") return run_predict_campaign(nmax, jobs);
  if (head == "trainchase") {
    int count = arg.empty() ? 500 : need_arg();
    return run_train_chase_campaign({count, seed, std::min(nmax, 40)}, jobs);
  }
  throw std::invalid_argument("unknown theorem '" + t + "'");
}

}  // namespace copsrob
