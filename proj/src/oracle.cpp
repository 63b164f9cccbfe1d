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

// Top-down minimax for the Z_q-forcing game, written directly from the game
// rules. It shares no solver code with the cost-table builder: forcing is
// a plain round-based rescan, states are raw black sets, and the whole-graph
// color change rule is an explicit free move rather than being applied
// eagerly after every move.

#include <algorithm>
#include <string>
#include <vector>

#include "zqforce/errors.hpp"
#include "zqforce/game.hpp"

namespace zqforce {
namespace {

class Minimax {
 public:
  Minimax(const Graph& g, const LoopAssignment& l, int q)
      : g_(g), l_(l), q_(q), n_(g.n()),
        memo_(std::size_t{1} << g.n(), kUnsolved) {}

  Cost solve(VertexSet::Word black) {
    const VertexSet::Word all = g_.vertices().word();
    if (black == all) return 0;
    Cost& slot = memo_[black];
    if (slot != kUnsolved) return slot;

    Cost best = kInfiniteCost;
    const VertexSet::Word forced = force(all, black);
    if (forced != black) best = std::min(best, solve(forced));

    for (int v = 0; v < n_; ++v) {
      if ((black >> v) & 1U) continue;
      best = std::min(best, add_cost(solve(black | (VertexSet::Word{1} << v)), 1));
    }

    const std::vector<VertexSet> comps = components(g_, VertexSet(all & ~black));
    std::vector<int> chosen;
    declare(comps, 0, chosen, black, best);

    memo_[black] = best;
    return best;
  }

 private:
  static constexpr Cost kUnsolved = kInfiniteCost - 1;

  // Round-based application of the color change rule on g[within].
  VertexSet::Word force(VertexSet::Word within, VertexSet::Word black) const {
    bool changed = true;
    while (changed) {
      changed = false;
      const VertexSet::Word round_start = black;
      for (int u = 0; u < n_; ++u) {
        if (!((within >> u) & 1U)) continue;
        const bool is_black = (round_start >> u) & 1U;
        int white_count = 0;
        int white = -1;
        if (!is_black) {
          if (l_[u] == Loop::kUnspecified) continue;
          if (l_[u] == Loop::kLooped) {
            ++white_count;
            white = u;
          }
        }
        for (int w = 0; w < n_; ++w) {
          if (g_.has_edge(u, w) && ((within >> w) & 1U) && !((round_start >> w) & 1U)) {
            ++white_count;
            white = w;
          }
        }
        if (white_count == 1 && !((black >> white) & 1U)) {
          black |= VertexSet::Word{1} << white;
          changed = true;
        }
      }
    }
    return black;
  }

  // Enumerates announcements of exactly q+1 components.
  void declare(const std::vector<VertexSet>& comps, std::size_t from, std::vector<int>& chosen,
               VertexSet::Word black, Cost& best) {
    if (static_cast<int>(chosen.size()) == q_ + 1) {
      best = std::min(best, white_reply(comps, chosen, black));
      return;
    }
    for (std::size_t i = from; i < comps.size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      declare(comps, i + 1, chosen, black, best);
      chosen.pop_back();
    }
  }

  // White returns the nonempty subset of the announcement that is worst for
  // Black.
  Cost white_reply(const std::vector<VertexSet>& comps, const std::vector<int>& chosen,
                   VertexSet::Word black) {
    Cost worst = 0;
    const std::size_t m = chosen.size();
    for (std::size_t subset = 1; subset < (std::size_t{1} << m); ++subset) {
      VertexSet::Word within = black;
      for (std::size_t i = 0; i < m; ++i) {
        if ((subset >> i) & 1U) within |= comps[static_cast<std::size_t>(chosen[i])].word();
      }
      const VertexSet::Word next = force(within, black);
      worst = std::max(worst, next == black ? kInfiniteCost : solve(next));
      if (worst == kInfiniteCost) break;
    }
    return worst;
  }

  const Graph& g_;
  const LoopAssignment& l_;
  int q_;
  int n_;
  std::vector<Cost> memo_;
};

}  // namespace

int minimax_oracle(const Graph& g, const LoopAssignment& l, int q, bool override_limit) {
  if (q < 0) throw ArgumentError("q must be >= 0");
  if (l.n() != g.n()) throw ArgumentError("loop assignment length does not match graph");
  if (g.n() > kOracleSoftLimit && !override_limit) {
    throw CapacityError("minimax oracle refuses graphs above " +
                        std::to_string(kOracleSoftLimit) + " vertices without override");
  }
  if (g.n() > kMaxTableVertices) {
    throw CapacityError("minimax oracle limited to " + std::to_string(kMaxTableVertices) +
                        " vertices");
  }
  Minimax search(g, l, q);
  return search.solve(0);
}

}  // namespace zqforce
