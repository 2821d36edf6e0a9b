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

#include "copsrob/graph.hpp"

#include <vector>

#include "copsrob/generators.hpp"
#include "gtest/gtest.h"

namespace copsrob {
namespace {

// Floyd-Warshall on the adjacency matrix; independent of the BFS path.
std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

TEST(GraphTest, BuildTriangle) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(check_invariants(g).has_value());
}

TEST(GraphTest, LoopIsRejected) {
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
}

TEST(GraphTest, EndpointOutOfRangeIsRejected) {
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST(GraphTest, DuplicateEdgesMerge) {
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g, gen::path(3));
}

TEST(GraphTest, PathDegreeSequence) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.degree_sequence(), (std::vector<int>{1, 2, 2, 1}));
}

TEST(GraphTest, Distances) {
  EXPECT_EQ(distance(gen::path(4), 0, 3), 3);
  Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(distance(two, 0, 3), std::nullopt);
  EXPECT_THROW(distance(two, 0, 7), std::out_of_range);
}

TEST(GraphTest, PetersenNonAdjacentPairsAtDistanceTwo) {
  Graph p = gen::petersen();
  auto d = all_pairs(p);
  for (int u = 0; u < 10; ++u) {
    for (int v = 0; v < 10; ++v) {
      if (u == v || p.adjacent(u, v)) continue;
      EXPECT_EQ(d[u][v], 2);
      EXPECT_EQ(distance(p, u, v), 2);
    }
  }
}

TEST(GraphTest, Geodesics) {
  EXPECT_EQ(geodesic(gen::cycle(5), 0, 2), (PathSeq{0, 1, 2}));
  // Tie between 0-1-2 and 0-3-2 goes to the smaller index.
  EXPECT_EQ(geodesic(gen::cycle(4), 0, 2), (PathSeq{0, 1, 2}));
  EXPECT_EQ(geodesic(gen::cycle(4), 3, 3), (PathSeq{3}));
  Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(geodesic(two, 0, 2), std::invalid_argument);
}

TEST(GraphTest, ComponentsDiameterInduced) {
  auto sub = induced(gen::cycle(5), std::vector<Vertex>{0, 1, 2});
  EXPECT_EQ(sub.graph, gen::path(3));
  EXPECT_EQ(sub.to_host, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(diameter(gen::petersen()), 2);
  Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(diameter(two), std::nullopt);
  EXPECT_EQ(components(two), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
}

TEST(GraphTest, InducedReindexes) {
  auto sub = induced(gen::cycle(6), std::vector<Vertex>{5, 0, 3});
  EXPECT_EQ(sub.to_host, (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(sub.from_host[5], 2);
  EXPECT_EQ(sub.from_host[1], -1);
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(GeneratorTest, NamedGraphs) {
  Graph claw = gen::generate("star:3");
  EXPECT_EQ(claw.degree_sequence(), (std::vector<int>{3, 1, 1, 1}));
  Graph p = gen::generate("petersen");
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15u);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  Graph s = gen::generate("spider:2,2,1");
  EXPECT_EQ(s.order(), 6);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(s.max_degree(), 3);
  EXPECT_TRUE(is_connected(s));
  EXPECT_EQ(gen::generate("kbip:2,3").size(), 6u);
  EXPECT_EQ(gen::generate("prism:4").size(), 12u);
  EXPECT_EQ(gen::generate("circulant:8,1,3").size(), 16u);
  EXPECT_EQ(gen::generate("complete:5").size(), 10u);
}

TEST(GeneratorTest, BadSpecs) {
  EXPECT_THROW(gen::generate("cycle:2"), std::invalid_argument);
  EXPECT_THROW(gen::generate("wheel:5"), std::invalid_argument);
  EXPECT_THROW(gen::generate("path:x"), std::invalid_argument);
  EXPECT_THROW(gen::generate("gnp:5,1.5,1"), std::invalid_argument);
  EXPECT_THROW(gen::generate("spider:1,1"), std::invalid_argument);
}

TEST(GeneratorTest, GnpIsDeterministic) {
  EXPECT_EQ(gen::generate("gnp:12,0.3,42"), gen::generate("gnp:12,0.3,42"));
  EXPECT_NE(gen::generate("gnp:12,0.3,42"), gen::generate("gnp:12,0.3,43"));
  EXPECT_EQ(gen::gnp(6, 1.0, 7), gen::complete(6));
  EXPECT_EQ(gen::gnp(6, 0.0, 7).size(), 0u);
}

// Metric properties over a batch of seeded random graphs.
TEST(GraphPropertyTest, MetricAndGeodesicInvariants) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen::gnp(12, 0.25, seed);
    ASSERT_FALSE(check_invariants(g).has_value());
    auto d = all_pairs(g);
    for (int u = 0; u < g.order(); ++u) {
      auto bfs = bfs_distances(g, u);
      EXPECT_EQ(bfs[u], 0);
      for (int v = 0; v < g.order(); ++v) {
        bool reach = d[u][v] < (1 << 20);
        ASSERT_EQ(bfs[v] >= 0, reach);
        if (!reach) continue;
        EXPECT_EQ(bfs[v], d[u][v]);
        auto path = geodesic(g, u, v);
        EXPECT_EQ(static_cast<int>(path.size()) - 1, bfs[v]);
        EXPECT_TRUE(is_path_in(g, path));
        EXPECT_EQ(path.front(), u);
        EXPECT_EQ(path.back(), v);
        for (int w = 0; w < g.order(); ++w) {
          if (d[v][w] < (1 << 20)) EXPECT_LE(d[u][w], d[u][v] + d[v][w]);
        }
      }
    }
  }
}

TEST(VertexSetTest, Basics) {
  VertexSet s(5, {1, 3});
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(7));
  s.insert(3);
  s.erase(1);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{3}));
  EXPECT_THROW(s.insert(5), std::out_of_range);
  EXPECT_EQ(VertexSet::all(3).size(), 3);
}

TEST(PathTest, InducedPathCheck) {
  Graph c = gen::cycle(5);
  EXPECT_TRUE(is_induced_path(c, std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(is_induced_path(c, std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(is_path_in(c, std::vector<Vertex>{0, 2}));
}

}  // namespace
}  // namespace copsrob
