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

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kGraph6MaxOrder = 62;

/// graph6 encoding: one size byte (n + 63) followed by the upper triangle in
/// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most
/// significant first, each byte offset by 63.
inline std::string emit_graph6(const Graph& g) {
  if (g.order() > kGraph6MaxOrder) throw std::invalid_argument("graph6 supports n <= 62 only");
  std::string out(1, static_cast<char>(g.order() + 63));
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ParseError("graph6: malformed byte " + std::to_string(static_cast<int>(c)));
    }
  }
  int n = text[0] - 63;
  if (n > kGraph6MaxOrder) throw ParseError("graph6: long-form sizes are not supported");
  std::size_t total_bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  std::size_t want = (total_bits + 5) / 6;
  if (text.size() - 1 != want) {
    throw ParseError("graph6: expected " + std::to_string(want) + " data bytes, got " +
                     std::to_string(text.size() - 1));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int byte = text[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    int byte = text.back() - 63;
    if (byte & ((1 << (6 - bit % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

/// "n m" header, then m lines "u v" (0-based). '#' starts a comment.
inline std::string emit_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph parse_edgelist(std::string_view text) {
  std::vector<long long> nums;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("edgelist: bad token '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("edgelist: bad token '" + tok + "'");
      nums.push_back(v);
    }
  }
  if (nums.size() < 2) throw ParseError("edgelist: missing 'n m' header");
  long long n = nums[0];
  long long m = nums[1];
  if (n < 0 || m < 0) throw ParseError("edgelist: negative header");
  if (nums.size() != 2 + 2 * static_cast<std::size_t>(m)) {
    throw ParseError("edgelist: header announces " + std::to_string(m) + " edges");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    edges.emplace_back(static_cast<Vertex>(nums[2 + 2 * i]), static_cast<Vertex>(nums[3 + 2 * i]));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edgelist: ") + e.what());
  }
}

inline std::string emit_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace copsrob
