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

#include "copsrob/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "copsrob/generators.hpp"
#include "gtest/gtest.h"

namespace copsrob {
namespace {

// Plain n! minimisation with std::next_permutation, no pruning.
std::uint64_t brute_canonical(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, adjacency_code(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Counts isomorphism classes of connected graphs by scanning every labeled
// graph on n vertices.
std::size_t brute_connected_count(int n) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::uint64_t> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) e.push_back(pairs[b]);
    Graph g(n, e);
    if (is_connected(g)) classes.insert(brute_canonical(g));
  }
  return classes.size();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

TEST(EnumerateTest, KnownCounts) {
  EXPECT_EQ(enumerate_connected(1).size(), 1u);
  EXPECT_EQ(enumerate_connected(2).size(), 1u);
  auto three = enumerate_connected(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(enumerate_connected(4).size(), 6u);
  EXPECT_EQ(enumerate_connected(5).size(), 21u);
  EXPECT_EQ(enumerate_connected(6).size(), 112u);
  EXPECT_EQ(enumerate_connected(7).size(), 853u);
}

TEST(EnumerateTest, MatchesBruteForceCount) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_connected(n).size(), brute_connected_count(n)) << n;
}

TEST(EnumerateTest, ThreeVertexGraphsArePathAndTriangle) {
  auto three = enumerate_connected(3);
  std::set<std::uint64_t> got{canonical_code(three[0]), canonical_code(three[1])};
  std::set<std::uint64_t> want{canonical_code(gen::path(3)), canonical_code(gen::cycle(3))};
  EXPECT_EQ(got, want);
}

TEST(EnumerateTest, PairwiseNonIsomorphicAndSorted) {
  for (int n = 2; n <= 7; ++n) {
    auto all = enumerate_connected(n);
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(is_connected(all[i]));
      std::uint64_t code = canonical_code(all[i]);
      if (i > 0) EXPECT_LT(prev, code);
      prev = code;
    }
  }
}

TEST(EnumerateTest, Exceeds7Throws) { EXPECT_THROW(enumerate_connected(8), std::invalid_argument); }

TEST(CanonicalTest, AgreesWithBruteForceAndIsRelabelInvariant) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 1 + static_cast<int>(seed % 7);
    Graph g = gen::gnp(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
    std::uint64_t code = canonical_code(g);
    EXPECT_EQ(code, brute_canonical(g));
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(relabel(g, perm)), code);
    Graph canon = canonical_form(g);
    EXPECT_EQ(canonical_code(canon), code);
    EXPECT_EQ(adjacency_code(canon, [&] {
                std::vector<Vertex> id(static_cast<std::size_t>(n));
                std::iota(id.begin(), id.end(), 0);
                return id;
              }()),
              code);
  }
}

TEST(EnumerateWhereTest, RestrictedEqualsFilteredFull) {
  auto triangle_free = [](const Graph& g) {
    for (auto [u, v] : g.edges())
      for (Vertex w : g.neighbors(u))
        if (w != v && g.adjacent(v, w)) return false;
    return true;
  };
  for (int n = 1; n <= 7; ++n) {
    auto restricted = enumerate_connected_where(n, triangle_free);
    std::vector<Graph> filtered;
    for (auto& g : enumerate_connected(n))
      if (triangle_free(g)) filtered.push_back(g);
    EXPECT_EQ(restricted, filtered) << n;
  }
}

TEST(EnumerateWhereTest, TreeCountsToNine) {
  auto acyclic = [](const Graph& g) { return g.size() + 1 == static_cast<std::size_t>(g.order()); };
  std::vector<std::size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(enumerate_connected_where(n, acyclic).size(), want[n - 1]) << n;
}

}  // namespace
}  // namespace copsrob
