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

#include "zqforce/forcing.hpp"

#include "zqforce/errors.hpp"

namespace zqforce {

Forcer::Forcer(const Graph& g) : n_(g.n()), all_(g.vertices()) {
  adj_.reserve(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
}

Forcer::Forcer(const Graph& g, const LoopAssignment& loops) : Forcer(g) {
  if (loops.n() != g.n()) {
    throw ArgumentError("loop assignment length " + std::to_string(loops.n()) +
                        " does not match graph order " + std::to_string(g.n()));
  }
  looped_ = loops.looped();
  unlooped_ = loops.unlooped();
}

VertexSet Forcer::close_within(VertexSet within, VertexSet black) const {
  // Worklist of vertices whose white-neighbor count may have dropped to one.
  VertexSet pending = forcers(within, black);
  while (!pending.empty()) {
    const int u = pending.min();
    pending.erase(u);
    VertexSet white = (adj_[u] & within) - black;
    if (!black.contains(u)) {
      if (looped_.contains(u)) {
        white.insert(u);
      } else if (!unlooped_.contains(u)) {
        continue;
      }
    }
    if (white.size() != 1) continue;
    const int w = white.min();
    black.insert(w);
    pending |= forcers(within, black) & (adj_[w] | VertexSet::single(w));
  }
  return black;
}

bool Forcer::is_closed(VertexSet black) const {
  for (int u : forcers(all_, black)) {
    VertexSet white = adj_[u] - black;
    if (!black.contains(u) && looped_.contains(u)) white.insert(u);
    if (white.size() == 1) return false;
  }
  return true;
}

VertexSet closure(const Graph& g, VertexSet b) { return Forcer(g).close(b); }

VertexSet looped_closure(const Graph& g, const LoopAssignment& l, VertexSet b) {
  return Forcer(g, l).close(b);
}

VertexSet component_closure(const Graph& g, const LoopAssignment& l, VertexSet b,
                            std::span<const VertexSet> returned) {
  VertexSet merged;
  for (VertexSet w : returned) merged |= w;
  return Forcer(g, l).component_close(b, merged);
}

}  // namespace zqforce
