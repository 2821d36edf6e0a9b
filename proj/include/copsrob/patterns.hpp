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
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copsrob/generators.hpp"
#include "copsrob/graph.hpp"

namespace copsrob {

struct Pattern {
  Graph graph;
  std::string name;
};

using Family = std::vector<Pattern>;

/// Thrown when a characterization predicate is applied to a family outside
/// its hypothesis (disconnected member, or diameter too large).
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Construction

/// Center 0 with pendant paths of n1, n2, n3 vertices.
inline Pattern gen_claw(int n1, int n2, int n3) {
  return {gen::spider(n1, n2, n3),
          "genclaw:" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3)};
}

/// Triangle 0,1,2 with a pendant path of n_i vertices at triangle vertex i-1.
inline Pattern gen_net(int n1, int n2, int n3) {
  if (n1 < 0 || n2 < 0 || n3 < 0) throw std::invalid_argument("gen_net lengths must be >= 0");
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  Vertex next = 3;
  Vertex corner = 0;
  for (int len : {n1, n2, n3}) {
    Vertex prev = corner++;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return {Graph(next, e),
          "gennet:" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3)};
}

/// Antenna: a house (triangle 1,2,3 on top of the square 2,3,5,4) with a
/// pendant vertex 0 on the roof apex 1.
/// Edges: 0-1, 1-2, 1-3, 2-3, 2-4, 3-5, 4-5.
inline Pattern antenna() {
  return {Graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}), "antenna"};
}

/// One of claw, bull, net, antenna, or pK / pathK for the path on K vertices.
inline Pattern named_pattern(std::string_view name) {
  if (name == "claw") return {gen::star(3), "claw"};
  if (name == "bull") return {gen_net(1, 1, 0).graph, "bull"};
  if (name == "net") return {gen_net(1, 1, 1).graph, "net"};
  if (name == "antenna") return antenna();
  std::string_view digits;
  if (name.size() > 1 && name[0] == 'p' && name.substr(0, 4) != "path") digits = name.substr(1);
  if (name.substr(0, 4) == "path") digits = name.substr(4);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int k = std::stoi(std::string(digits));
    if (k < 1) throw std::invalid_argument("path pattern needs k >= 1");
    return {gen::path(k), "p" + std::to_string(k)};
  }
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

inline Pattern disjoint_union(std::span<const Pattern> parts) {
  std::vector<Graph> graphs;
  std::string name;
  for (const auto& p : parts) {
    graphs.push_back(p.graph);
    if (!name.empty()) name += "+";
    name += p.name;
  }
  return {disjoint_union(std::span<const Graph>(graphs)), name};
}

inline Pattern disjoint_union(std::initializer_list<Pattern> parts) {
  return disjoint_union(std::span<const Pattern>(parts.begin(), parts.size()));
}

namespace detail {

inline Pattern parse_atom(const std::string& atom) {
  auto colon = atom.find(':');
  if (colon != std::string::npos) {
    std::string head = atom.substr(0, colon);
    auto args = gen::detail::split(std::string_view(atom).substr(colon + 1), ',');
    if (args.size() != 3) throw std::invalid_argument("'" + head + "' expects three lengths");
    int a = gen::detail::to_int(args[0]);
    int b = gen::detail::to_int(args[1]);
    int c = gen::detail::to_int(args[2]);
    if (head == "genclaw") return gen_claw(a, b, c);
    if (head == "gennet") return gen_net(a, b, c);
    throw std::invalid_argument("unknown pattern '" + head + "'");
  }
  return named_pattern(atom);
}

}  // namespace detail

/// Parses a family spec: members separated by ',' or ';', each member a '+'
/// union of atoms (claw, bull, net, antenna, pK, genclaw:a,b,c, gennet:a,b,c).
/// Numeric tokens after a comma continue the parameter list of the previous
/// atom, so "genclaw:1,1,1,net" has two members.
inline Family parse_family(std::string_view spec) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    tokens.push_back(cur);
    cur.clear();
  };
  for (char c : spec) {
    if (c == ' ') continue;
    if (c == ';') {
      flush();
      tokens.push_back(";");
    } else if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  std::vector<std::string> members;
  for (const auto& t : tokens) {
    if (t == ";") {
      members.emplace_back();
      continue;
    }
    bool numeric = !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (numeric && !members.empty() && !members.back().empty()) {
      members.back() += "," + t;
    } else {
      members.push_back(t);
    }
  }
  Family family;
  for (const auto& m : members) {
    if (m.empty()) continue;
    std::vector<Pattern> parts;
    for (const auto& atom : gen::detail::split(m, '+')) {
      if (atom.empty()) throw std::invalid_argument("empty pattern in '" + m + "'");
      parts.push_back(detail::parse_atom(atom));
    }
    family.push_back(parts.size() == 1 ? parts[0] : disjoint_union(std::span<const Pattern>(parts)));
  }
  if (family.empty()) throw std::invalid_argument("empty family spec");
  return family;
}

// ---------------------------------------------------------------------------
// Induced-subgraph search

namespace detail {

class InducedSearch {
 public:
  InducedSearch(const Graph& host, const Graph& pattern)
      : host_(host), pattern_(pattern), map_(static_cast<std::size_t>(pattern.order()), -1),
        used_(static_cast<std::size_t>(host.order()), 0) {}

  std::optional<std::vector<Vertex>> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  // Pattern vertices are placed in index order and host candidates tried in
  // ascending order, so the first complete map is the lexicographically
  // least witness.
  bool extend(Vertex a) {
    if (a == pattern_.order()) return true;
    for (Vertex x = 0; x < host_.order(); ++x) {
      if (used_[x] || host_.degree(x) < pattern_.degree(a)) continue;
      bool ok = true;
      for (Vertex b = 0; b < a && ok; ++b) ok = host_.adjacent(map_[b], x) == pattern_.adjacent(b, a);
      if (!ok) continue;
      map_[a] = x;
      used_[x] = 1;
      if (extend(a + 1)) return true;
      used_[x] = 0;
    }
    map_[a] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace detail

/// Lexicographically least injective map phi (indexed by pattern vertex) with
/// phi(a)phi(b) an edge of `host` exactly when ab is an edge of the pattern.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern) {
  return detail::InducedSearch(host, pattern).run();
}

inline std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Pattern& pattern) {
  return find_induced(host, pattern.graph);
}

inline bool is_family_free(const Graph& host, const Family& family) {
  return std::none_of(family.begin(), family.end(),
                      [&](const Pattern& p) { return find_induced(host, p).has_value(); });
}

// ---------------------------------------------------------------------------
// Classification

enum class PatternKind { Path, GeneralizedClaw, GeneralizedNet, ForestOfPaths, Other };

inline std::string_view to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Path: return "Path";
    case PatternKind::GeneralizedClaw: return "GeneralizedClaw";
    case PatternKind::GeneralizedNet: return "GeneralizedNet";
    case PatternKind::ForestOfPaths: return "ForestOfPaths";
    case PatternKind::Other: return "Other";
  }
  return "Other";
}

struct PatternClass {
  PatternKind kind = PatternKind::Other;
  std::array<int, 3> params{0, 0, 0};  // descending; claw/net only

  bool operator==(const PatternClass&) const = default;
};

namespace detail {

inline bool is_path_graph(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order()) &&
         g.max_degree() <= 2;
}

// Number of vertices on the pendant path leaving `from` through `first`.
inline int pendant_length(const Graph& g, Vertex from, Vertex first) {
  int len = 0;
  Vertex prev = from;
  Vertex cur = first;
  while (true) {
    ++len;
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev) next = w;
    }
    if (next < 0) return len;
    prev = cur;
    cur = next;
  }
}

inline std::optional<PatternClass> as_generalized_claw(const Graph& g) {
  if (!is_connected(g) || g.size() + 1 != static_cast<std::size_t>(g.order())) return std::nullopt;
  Vertex center = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (d > 3) return std::nullopt;
    if (d == 3) {
      if (center >= 0) return std::nullopt;
      center = v;
    }
  }
  if (center < 0) return std::nullopt;
  PatternClass c{PatternKind::GeneralizedClaw, {}};
  auto nb = g.neighbors(center);
  for (int i = 0; i < 3; ++i) c.params[i] = pendant_length(g, center, nb[i]);
  std::sort(c.params.begin(), c.params.end(), std::greater<>());
  return c;
}

inline std::optional<PatternClass> as_generalized_net(const Graph& g) {
  if (!is_connected(g) || g.size() != static_cast<std::size_t>(g.order())) return std::nullopt;
  // Strip leaves until only the unique cycle remains.
  std::vector<int> deg = g.degree_sequence();
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.order(); ++v)
    if (deg[v] == 1) stack.push_back(v);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<Vertex> cycle;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) cycle.push_back(v);
  if (cycle.size() != 3) return std::nullopt;
  PatternClass c{PatternKind::GeneralizedNet, {}};
  for (int i = 0; i < 3; ++i) {
    Vertex t = cycle[i];
    std::vector<Vertex> outside;
    for (Vertex w : g.neighbors(t))
      if (removed[w]) outside.push_back(w);
    if (outside.size() > 1) return std::nullopt;
    c.params[i] = outside.empty() ? 0 : pendant_length(g, t, outside[0]);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (removed[v] && g.degree(v) > 2) return std::nullopt;
  }
  std::sort(c.params.begin(), c.params.end(), std::greater<>());
  return c;
}

}  // namespace detail

/// Path > GeneralizedClaw / GeneralizedNet > ForestOfPaths > Other.
inline PatternClass classify_pattern(const Graph& g) {
  if (detail::is_path_graph(g)) return {PatternKind::Path, {}};
  if (auto c = detail::as_generalized_claw(g)) return *c;
  if (auto c = detail::as_generalized_net(g)) return *c;
  auto comps = components(g);
  if (comps.size() >= 2 && std::all_of(comps.begin(), comps.end(), [&](const auto& comp) {
        return detail::is_path_graph(induced(g, comp).graph);
      })) {
    return {PatternKind::ForestOfPaths, {}};
  }
  return {PatternKind::Other, {}};
}

inline PatternClass classify_pattern(const Pattern& p) { return classify_pattern(p.graph); }

// ---------------------------------------------------------------------------
// Cop-boundedness characterizations

/// Connected members of diameter < k: the class of family-free graphs is
/// cop-bounded iff the family has a path, or both a generalized claw and a
/// generalized net.
inline bool predict_cop_bounded(const Family& family, int k) {
  if (family.empty()) throw HypothesisViolation("empty family");
  bool path = false, claw = false, net = false;
  for (const auto& p : family) {
    auto d = diameter(p.graph);
    if (p.graph.order() == 0 || !d) throw HypothesisViolation("member '" + p.name + "' is disconnected");
    if (*d >= k) {
      throw HypothesisViolation("member '" + p.name + "' has diameter " + std::to_string(*d) +
                                " >= " + std::to_string(k));
    }
    auto kind = classify_pattern(p).kind;
    path |= kind == PatternKind::Path;
    claw |= kind == PatternKind::GeneralizedClaw;
    net |= kind == PatternKind::GeneralizedNet;
  }
  return path || (claw && net);
}

/// Members whose components all have diameter < k: cop-bounded iff some member
/// is a forest of paths, or some member F1 and some member F2 (possibly the
/// same) each have a degree-3 vertex, with every component of F1 a path or
/// generalized claw and every component of F2 a path or generalized net.
inline bool predict_cop_bounded_components(const Family& family, int k) {
  if (family.empty()) throw HypothesisViolation("empty family");
  bool forest = false, f1 = false, f2 = false;
  for (const auto& p : family) {
    bool all_claw_like = true, all_net_like = true;
    auto comps = components(p.graph);
    if (comps.empty()) throw HypothesisViolation("member '" + p.name + "' is empty");
    for (const auto& comp : comps) {
      Graph c = induced(p.graph, comp).graph;
      int d = diameter(c).value();
      if (d >= k) {
        throw HypothesisViolation("member '" + p.name + "' has a component of diameter " +
                                  std::to_string(d) + " >= " + std::to_string(k));
      }
      auto kind = classify_pattern(c).kind;
      all_claw_like &= kind == PatternKind::Path || kind == PatternKind::GeneralizedClaw;
      all_net_like &= kind == PatternKind::Path || kind == PatternKind::GeneralizedNet;
    }
    auto kind = classify_pattern(p).kind;
    forest |= kind == PatternKind::Path || kind == PatternKind::ForestOfPaths;
    bool has_deg3 = false;
    for (Vertex v = 0; v < p.graph.order(); ++v) has_deg3 |= p.graph.degree(v) == 3;
    f1 |= has_deg3 && all_claw_like;
    f2 |= has_deg3 && all_net_like;
  }
  return forest || (f1 && f2);
}

}  // namespace copsrob
