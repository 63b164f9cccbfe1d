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

#include "zqforce/graph.hpp"

#include <string>

#include "zqforce/errors.hpp"

namespace zqforce {

Graph::Graph(int n, const std::vector<Edge>& edges, std::string label)
    : label_(std::move(label)) {
  if (n < 0) throw ArgumentError("negative vertex count");
  if (n > kWordCap) {
    throw CapacityError("graph has " + std::to_string(n) +
                        " vertices; capacity is " + std::to_string(kWordCap));
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ArgumentError("edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") out of range for n=" +
                          std::to_string(n));
    }
    if (u == v) {
      throw ArgumentError("self-edge at vertex " + std::to_string(u));
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.n(), v + g.n());
  std::string label;
  if (!g.label().empty() || !h.label().empty()) {
    label = g.label() + "+" + h.label();
  }
  return Graph(g.n() + h.n(), edges, label);
}

std::vector<VertexSet> components(const Graph& g, VertexSet w) {
  std::vector<VertexSet> out;
  VertexSet rest = w;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & rest) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.n() == 0 || components(g, g.vertices()).size() == 1;
}

LoopAssignment LoopAssignment::from_packed(int n, std::uint64_t looped) {
  LoopAssignment l(n, Loop::kUnlooped);
  for (int v = 0; v < n; ++v) {
    if ((looped >> v) & 1U) l.set(v, Loop::kLooped);
  }
  return l;
}

LoopAssignment LoopAssignment::parse(const std::string& spec) {
  LoopAssignment l(static_cast<int>(spec.size()));
  for (std::size_t i = 0; i < spec.size(); ++i) {
    switch (spec[i]) {
      case 'L': l.state_[i] = Loop::kLooped; break;
      case 'U': l.state_[i] = Loop::kUnlooped; break;
      case '.': l.state_[i] = Loop::kUnspecified; break;
      default:
        throw ParseError(std::string("bad loop character '") + spec[i] + "'", i);
    }
  }
  return l;
}

bool LoopAssignment::full() const {
  for (Loop l : state_) {
    if (l == Loop::kUnspecified) return false;
  }
  return true;
}

bool LoopAssignment::all_unspecified() const {
  for (Loop l : state_) {
    if (l != Loop::kUnspecified) return false;
  }
  return true;
}

VertexSet LoopAssignment::looped() const {
  VertexSet s;
  for (int v = 0; v < n(); ++v) {
    if (state_[v] == Loop::kLooped) s.insert(v);
  }
  return s;
}

VertexSet LoopAssignment::unlooped() const {
  VertexSet s;
  for (int v = 0; v < n(); ++v) {
    if (state_[v] == Loop::kUnlooped) s.insert(v);
  }
  return s;
}

std::string LoopAssignment::to_string() const {
  std::string s;
  for (Loop l : state_) {
    s += l == Loop::kLooped ? 'L' : l == Loop::kUnlooped ? 'U' : '.';
  }
  return s;
}

}  // namespace zqforce
