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

#ifndef ZQFORCE_FORCING_HPP_
#define ZQFORCE_FORCING_HPP_

#include <span>
#include <vector>

#include "zqforce/graph.hpp"
#include "zqforce/vertex_set.hpp"

namespace zqforce {

// Color change rule for a graph whose vertices may carry loops or unloops.
//
// A black vertex with exactly one white neighbor forces that neighbor. A white
// vertex with a loop counts itself among its white neighbors; a white vertex
// with an unloop does not, and either kind forces when its white-neighbor
// count is exactly one. Unspecified white vertices never force. A black vertex
// is never its own white neighbor, so black looped and unlooped vertices
// behave identically.
//
// Forcer caches the adjacency words and loop masks so the solvers can call it
// in their innermost loops.
class Forcer {
 public:
  explicit Forcer(const Graph& g);
  Forcer(const Graph& g, const LoopAssignment& loops);

  int n() const { return n_; }
  VertexSet all() const { return all_; }

  // Fixed point of the rule on the whole graph, starting from `black`.
  VertexSet close(VertexSet black) const { return close_within(all_, black); }

  // Fixed point of the rule on the induced subgraph g[within] starting from
  // `black` (which must be a subset of `within`).
  VertexSet close_within(VertexSet within, VertexSet black) const;

  bool is_closed(VertexSet black) const;

  // close_within(black | union(returned), black), then close on the whole
  // graph.
  VertexSet component_close(VertexSet black, VertexSet returned) const {
    return close(close_within(black | returned, black));
  }

 private:
  // Vertices able to force given the current coloring, inside `within`.
  VertexSet forcers(VertexSet within, VertexSet black) const {
    return within & (black | looped_ | unlooped_);
  }

  int n_ = 0;
  VertexSet all_;
  VertexSet looped_;
  VertexSet unlooped_;
  std::vector<VertexSet> adj_;
};

// Classic color change rule: only black vertices force.
VertexSet closure(const Graph& g, VertexSet b);

VertexSet looped_closure(const Graph& g, const LoopAssignment& l, VertexSet b);

// Closure inside g[b ∪ ⋃returned] starting from b, followed by closure on the
// whole graph. This is the effect of White handing `returned` back to Black.
VertexSet component_closure(const Graph& g, const LoopAssignment& l, VertexSet b,
                            std::span<const VertexSet> returned);

}  // namespace zqforce

#endif  // ZQFORCE_FORCING_HPP_
