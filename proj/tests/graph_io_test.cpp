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

#include "copsrob/graph_io.hpp"

#include "copsrob/generators.hpp"
#include "gtest/gtest.h"

namespace copsrob {
namespace {

// Reference strings produced by the networkx graph6 writer.
TEST(Graph6Test, KnownEncodings) {
  EXPECT_EQ(emit_graph6(gen::complete(2)), "A_");
  EXPECT_EQ(emit_graph6(gen::complete(4)), "C~");
  EXPECT_EQ(emit_graph6(gen::path(4)), "Ch");
  EXPECT_EQ(emit_graph6(gen::cycle(5)), "Dhc");
  EXPECT_EQ(emit_graph6(gen::petersen()), "IheA@GUAo");
}

TEST(Graph6Test, ParseWithHeaderAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), gen::complete(4));
  EXPECT_EQ(parse_graph6("IheA@GUAo"), gen::petersen());
  EXPECT_EQ(parse_graph6("@").order(), 1);
}

TEST(Graph6Test, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);        // truncated bit field
  EXPECT_THROW(parse_graph6("C~~"), ParseError);      // trailing byte
  EXPECT_THROW(parse_graph6("C\x10"), ParseError);    // malformed byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);       // nonzero padding
  EXPECT_THROW(parse_graph6("~??"), ParseError);      // long form
}

TEST(Graph6Test, RoundTripRandom) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen::gnp(1 + static_cast<int>(seed % 40), 0.3, seed);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
  }
}

TEST(EdgeListTest, RoundTripAndComments) {
  Graph p = gen::petersen();
  EXPECT_EQ(parse_edgelist(emit_edgelist(p)), p);
  EXPECT_EQ(parse_edgelist("# triangle\n3 3\n0 1\n1 2 # edge\n2 0\n"), gen::cycle(3));
}

TEST(EdgeListTest, Errors) {
  EXPECT_THROW(parse_edgelist(""), ParseError);
  EXPECT_THROW(parse_edgelist("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_edgelist("3 1\n1 1\n"), ParseError);
}

TEST(DotTest, Emit) {
  EXPECT_EQ(emit_dot(gen::path(2)), "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}

}  // namespace
}  // namespace copsrob
