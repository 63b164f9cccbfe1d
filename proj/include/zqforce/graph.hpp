// Copyright 2026 The zqforce Authors.
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

#ifndef ZQFORCE_GRAPH_HPP_
#define ZQFORCE_GRAPH_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zqforce/vertex_set.hpp"

namespace zqforce {

using Edge = std::pair<int, int>;

// A simple undirected graph on vertices 0..n-1, stored as one neighbor set
// per vertex. Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  // Throws CapacityError if n > kWordCap and ArgumentError on self-edges or
  // out-of-range endpoints. Duplicate edges are merged.
  Graph(int n, const std::vector<Edge>& edges, std::string label = {});

  int n() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::full(n()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  const std::string& label() const { return label_; }

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::string label_;
};

// Vertex labels of G followed by those of H shifted by G.n().
Graph disjoint_union(const Graph& g, const Graph& h);

// Vertex sets of the connected components of g[w], ordered by their smallest
// member.
std::vector<VertexSet> components(const Graph& g, VertexSet w);

bool is_connected(const Graph& g);

// Diagonal zero-pattern of a matrix in S(G): a looped vertex carries a
// nonzero diagonal entry, an unlooped one a zero entry.
enum class Loop : std::uint8_t { kUnlooped = 0, kLooped = 1, kUnspecified = 2 };

class LoopAssignment {
 public:
  LoopAssignment() = default;
  explicit LoopAssignment(int n, Loop fill = Loop::kUnspecified)
      : state_(static_cast<std::size_t>(n), fill) {}
  explicit LoopAssignment(std::vector<Loop> state) : state_(std::move(state)) {}

  // Bit v of `looped` set => looped, clear => unlooped.
  static LoopAssignment from_packed(int n, std::uint64_t looped);
  // One character per vertex: 'L' looped, 'U' unlooped, '.' unspecified.
  static LoopAssignment parse(const std::string& spec);

  int n() const { return static_cast<int>(state_.size()); }
  Loop operator[](int v) const { return state_[static_cast<std::size_t>(v)]; }
  void set(int v, Loop l) { state_[static_cast<std::size_t>(v)] = l; }

  bool full() const;
  bool all_unspecified() const;
  VertexSet looped() const;
  VertexSet unlooped() const;
  // Inverse of from_packed; only meaningful when full().
  std::uint64_t packed() const { return looped().word(); }
  std::string to_string() const;

  bool operator==(const LoopAssignment&) const = default;

 private:
  std::vector<Loop> state_;
};

}  // namespace zqforce

#endif  // ZQFORCE_GRAPH_HPP_
