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

#include "copsrob/patterns.hpp"

#include <vector>

#include "copsrob/enumerate.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/transforms.hpp"
#include "gtest/gtest.h"

namespace copsrob {
namespace {

// Every injective map in lexicographic order, checked only when complete.
std::optional<std::vector<Vertex>> brute_induced(const Graph& host, const Graph& pattern) {
  std::vector<Vertex> map;
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  std::optional<std::vector<Vertex>> found;
  std::function<void()> rec = [&] {
    if (found) return;
    if (static_cast<int>(map.size()) == pattern.order()) {
      for (Vertex a = 0; a < pattern.order(); ++a)
        for (Vertex b = a + 1; b < pattern.order(); ++b)
          if (host.adjacent(map[a], map[b]) != pattern.adjacent(a, b)) return;
      found = map;
      return;
    }
    for (Vertex x = 0; x < host.order(); ++x) {
      if (used[x]) continue;
      used[x] = 1;
      map.push_back(x);
      rec();
      map.pop_back();
      used[x] = 0;
    }
  };
  rec();
  return found;
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) e.push_back(pairs[b]);
    Graph g(n, e);
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  }
  return out;
}

TEST(NamedPatternTest, Shapes) {
  auto claw = named_pattern("claw");
  EXPECT_EQ(claw.graph.degree_sequence(), (std::vector<int>{3, 1, 1, 1}));
  auto net = named_pattern("net");
  EXPECT_EQ(net.graph.order(), 6);
  EXPECT_EQ(net.graph.size(), 6u);
  EXPECT_TRUE(find_induced(net.graph, gen::cycle(3)).has_value());
  auto bull = named_pattern("bull");
  EXPECT_EQ(bull.graph.order(), 5);
  EXPECT_EQ(bull.graph.size(), 5u);
  auto ant = named_pattern("antenna");
  EXPECT_EQ(ant.graph.order(), 6);
  EXPECT_EQ(ant.graph.size(), 7u);
  EXPECT_EQ(named_pattern("p5").graph, gen::path(5));
  EXPECT_EQ(named_pattern("path3").graph, gen::path(3));
  EXPECT_THROW(named_pattern("wheel"), std::invalid_argument);
  EXPECT_THROW(named_pattern("p0"), std::invalid_argument);
}

TEST(NamedPatternTest, NetHasExactlyOneTriangle) {
  Graph net = named_pattern("net").graph;
  int triangles = 0;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      for (Vertex c = b + 1; c < 6; ++c)
        triangles += net.adjacent(a, b) && net.adjacent(b, c) && net.adjacent(a, c);
  EXPECT_EQ(triangles, 1);
}

TEST(GeneralizedPatternTest, ClawAndNet) {
  EXPECT_EQ(canonical_code(gen_claw(1, 1, 1).graph), canonical_code(named_pattern("claw").graph));
  EXPECT_EQ(gen_net(0, 0, 0).graph, gen::cycle(3));
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(gen_claw(n, n, n).graph.order(), 3 * n + 1);
    EXPECT_EQ(gen_net(n, n, n).graph.order(), 3 * n + 3);
  }
  EXPECT_EQ(canonical_code(gen_net(1, 1, 0).graph), canonical_code(named_pattern("bull").graph));
}

TEST(DisjointUnionTest, Examples) {
  auto two_k2 = disjoint_union({named_pattern("p2"), named_pattern("p2")});
  EXPECT_EQ(two_k2.graph.order(), 4);
  EXPECT_EQ(two_k2.graph.size(), 2u);
  auto cn = disjoint_union({named_pattern("claw"), named_pattern("net")});
  EXPECT_EQ(cn.graph.order(), 10);
  EXPECT_EQ(components(cn.graph).size(), 2u);
  auto pp = disjoint_union({named_pattern("p3"), named_pattern("p3")});
  EXPECT_EQ(pp.graph.order(), 6);
  EXPECT_EQ(pp.graph.max_degree(), 2);
}

TEST(FamilySpecTest, Parsing) {
  auto f = parse_family("claw,bull");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[1].name, "bull");
  auto g = parse_family("genclaw:1,2,3,gennet:0,0,1;p4");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0].graph.order(), 7);
  EXPECT_EQ(g[1].graph.order(), 4);
  EXPECT_EQ(g[2].graph, gen::path(4));
  auto u = parse_family("claw+p2,net+p2");
  ASSERT_EQ(u.size(), 2u);
  EXPECT_EQ(u[0].graph.order(), 6);
  EXPECT_EQ(u[1].graph.order(), 8);
  EXPECT_THROW(parse_family(""), std::invalid_argument);
  EXPECT_THROW(parse_family("claw+"), std::invalid_argument);
  EXPECT_THROW(parse_family("genclaw:1,2"), std::invalid_argument);
  EXPECT_THROW(parse_family("kite"), std::invalid_argument);
}

TEST(FindInducedTest, Examples) {
  auto claw = named_pattern("claw");
  EXPECT_EQ(find_induced(gen::star(3), claw), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_FALSE(find_induced(gen::cycle(6), claw).has_value());
  EXPECT_FALSE(find_induced(subdivide(gen::complete(4), 1), named_pattern("net")).has_value());
  EXPECT_EQ(find_induced(gen::cycle(6), gen::path(4)), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(FindInducedTest, DisconnectedPatternForbidsCrossEdges) {
  auto two_k2 = disjoint_union({named_pattern("p2"), named_pattern("p2")});
  EXPECT_FALSE(find_induced(gen::cycle(4), two_k2).has_value());
  EXPECT_FALSE(find_induced(gen::complete(5), two_k2).has_value());
  EXPECT_EQ(find_induced(gen::cycle(6), two_k2), (std::vector<Vertex>{0, 1, 3, 4}));
}

TEST(FindInducedTest, AgreesWithBruteForce) {
  std::vector<Graph> patterns;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : all_graphs(n)) patterns.push_back(g);
  for (auto& g : enumerate_connected(5)) patterns.push_back(g);
  std::vector<Graph> hosts;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : enumerate_connected(n)) hosts.push_back(g);
  auto six = enumerate_connected(6);
  for (std::size_t i = 0; i < six.size(); i += 3) hosts.push_back(six[i]);
  for (const auto& h : hosts) {
    for (const auto& p : patterns) {
      ASSERT_EQ(find_induced(h, p), brute_induced(h, p));
    }
  }
}

TEST(FamilyFreeTest, Examples) {
  EXPECT_TRUE(is_family_free(gen::cycle(6), parse_family("claw,bull")));
  EXPECT_FALSE(is_family_free(gen::star(3), parse_family("claw")));
  EXPECT_TRUE(is_family_free(gen::petersen(), parse_family("net")));
}

TEST(FamilyFreeTest, InducedPathMeansNotFree) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      for (int k = 2; k <= n; ++k) {
        Graph pk = gen::path(k);
        bool contains = find_induced(g, pk).has_value();
        EXPECT_EQ(is_family_free(g, {{pk, "p"}}), !contains);
        // A geodesic is an induced path, so diameter + 1 vertices always fit.
        if (k <= *diameter(g) + 1) EXPECT_TRUE(contains);
      }
    }
  }
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(classify_pattern(gen::path(7)).kind, PatternKind::Path);
  EXPECT_EQ(classify_pattern(gen::spider(2, 2, 1)), (PatternClass{PatternKind::GeneralizedClaw, {2, 2, 1}}));
  EXPECT_EQ(classify_pattern(named_pattern("bull")), (PatternClass{PatternKind::GeneralizedNet, {1, 1, 0}}));
  EXPECT_EQ(classify_pattern(named_pattern("net")), (PatternClass{PatternKind::GeneralizedNet, {1, 1, 1}}));
  EXPECT_EQ(classify_pattern(gen::cycle(3)), (PatternClass{PatternKind::GeneralizedNet, {0, 0, 0}}));
  EXPECT_EQ(classify_pattern(gen::petersen()).kind, PatternKind::Other);
  EXPECT_EQ(classify_pattern(named_pattern("antenna")).kind, PatternKind::Other);
  EXPECT_EQ(classify_pattern(gen::cycle(4)).kind, PatternKind::Other);
  EXPECT_EQ(classify_pattern(parse_family("p3+p5")[0]).kind, PatternKind::ForestOfPaths);
  EXPECT_EQ(classify_pattern(parse_family("claw+p2")[0]).kind, PatternKind::Other);
  EXPECT_EQ(classify_pattern(gen::path(1)).kind, PatternKind::Path);
  EXPECT_EQ(classify_pattern(gen::star(4)).kind, PatternKind::Other);
}

TEST(ClassifyTest, GeneralizedClawParametersRecovered) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        auto cls = classify_pattern(gen_claw(a, b, c));
        std::array<int, 3> sorted{a, b, c};
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (a > 0 && b > 0 && c > 0) {
          EXPECT_EQ(cls, (PatternClass{PatternKind::GeneralizedClaw, sorted}));
        } else {
          EXPECT_EQ(cls.kind, PatternKind::Path);
        }
        auto net = classify_pattern(gen_net(a, b, c));
        EXPECT_EQ(net, (PatternClass{PatternKind::GeneralizedNet, sorted}));
      }
    }
  }
}

TEST(PredictTest, Examples) {
  EXPECT_TRUE(predict_cop_bounded(parse_family("p5"), 5));
  EXPECT_FALSE(predict_cop_bounded(parse_family("claw"), 3));
  EXPECT_TRUE(predict_cop_bounded(parse_family("claw,net"), 4));
  EXPECT_THROW(predict_cop_bounded(parse_family("claw,net"), 3), HypothesisViolation);
  EXPECT_THROW(predict_cop_bounded(parse_family("p2+p2"), 5), HypothesisViolation);
}

TEST(PredictTest, ComponentsExamples) {
  EXPECT_TRUE(predict_cop_bounded_components(parse_family("p3+p5"), 5));
  EXPECT_TRUE(predict_cop_bounded_components(parse_family("claw+p2,net+p2"), 4));
  EXPECT_FALSE(predict_cop_bounded_components(parse_family("claw+net"), 4));
  // The net has diameter 3, so k = 3 is outside the hypothesis.
  EXPECT_THROW(predict_cop_bounded_components(parse_family("claw+p2,net+p2"), 3), HypothesisViolation);
}

TEST(PredictTest, SingletonsAgreeWithPathCriterion) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      int k = *diameter(g) + 1;
      Family f{{g, "h"}};
      EXPECT_EQ(predict_cop_bounded(f, k), classify_pattern(g).kind == PatternKind::Path);
      EXPECT_THROW(predict_cop_bounded(f, k - 1), HypothesisViolation);
    }
  }
}

}  // namespace
}  // namespace copsrob
