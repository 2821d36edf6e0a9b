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
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob::gen {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

/// P_n on 0..n-1.
inline Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

/// K_{a,b}: sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

/// K_{1,k} with center 0.
inline Graph star(int k) {
  require(k >= 1, "star needs k >= 1");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

/// C_n x K_2: cycles 0..n-1 and n..2n-1 joined by rungs.
inline Graph prism(int n) {
  require(n >= 3, "prism needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(n + i, n + (i + 1) % n);
    e.emplace_back(i, n + i);
  }
  return Graph(2 * n, e);
}

/// Center 0 with three disjoint pendant paths of l1, l2, l3 vertices; legs are
/// numbered consecutively outward from the center.
inline Graph spider(int l1, int l2, int l3) {
  require(l1 >= 0 && l2 >= 0 && l3 >= 0, "spider legs must be >= 0");
  std::vector<Edge> e;
  Vertex next = 1;
  for (int len : {l1, l2, l3}) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, e);
}

/// Erdos-Renyi G(n, p). Each pair (i, j), i < j in lexicographic order, draws
/// one 64-bit word from std::mt19937_64(seed); the edge is present when the
/// top 53 bits, scaled to [0, 1), fall below p.
inline Graph gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

/// Vertex i adjacent to i +- d (mod n) for each offset d.
inline Graph circulant(int n, const std::vector<int>& offsets) {
  require(n >= 1, "circulant needs n >= 1");
  std::vector<Edge> e;
  for (int d : offsets) {
    require(d > 0 && 2 * d <= n && d < n, "circulant offset out of range");
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + d) % n);
  }
  return Graph(n, e);
}

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected integer, got '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("expected integer, got '" + s + "'");
  return v;
}

inline double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected number, got '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("expected number, got '" + s + "'");
  return v;
}

inline std::uint64_t to_u64(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected seed, got '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("expected seed, got '" + s + "'");
  return v;
}

}  // namespace detail

/// Parses a generator spec such as "path:9", "cycle:6", "complete:4",
/// "kbip:2,3", "star:3", "petersen", "prism:5", "spider:2,2,1",
/// "gnp:12,0.3,42" or "circulant:8,1,3".
inline Graph generate(std::string_view spec) {
  auto colon = spec.find(':');
  std::string name(spec.substr(0, colon));
  std::vector<std::string> args;
  if (colon != std::string_view::npos) args = detail::split(spec.substr(colon + 1), ',');
  auto want = [&](std::size_t count) {
    require(args.size() == count, "generator '" + name + "' expects " + std::to_string(count) +
                                      " argument(s)");
  };
  using detail::to_int;
  if (name == "path") return want(1), path(to_int(args[0]));
  if (name == "cycle") return want(1), cycle(to_int(args[0]));
  if (name == "complete") return want(1), complete(to_int(args[0]));
  if (name == "kbip" || name == "complete_bipartite") {
    want(2);
    return complete_bipartite(to_int(args[0]), to_int(args[1]));
  }
  if (name == "star") return want(1), star(to_int(args[0]));
  if (name == "petersen") return want(0), petersen();
  if (name == "prism") return want(1), prism(to_int(args[0]));
  if (name == "spider") {
    want(3);
    return spider(to_int(args[0]), to_int(args[1]), to_int(args[2]));
  }
  if (name == "gnp") {
    want(3);
    return gnp(to_int(args[0]), detail::to_double(args[1]), detail::to_u64(args[2]));
  }
  if (name == "circulant") {
    require(args.size() >= 2, "circulant expects n and at least one offset");
    std::vector<int> offsets;
    for (std::size_t i = 1; i < args.size(); ++i) offsets.push_back(to_int(args[i]));
    return circulant(to_int(args[0]), offsets);
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace copsrob::gen
