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

#ifndef ZQFORCE_GAME_HPP_
#define ZQFORCE_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "zqforce/forcing.hpp"
#include "zqforce/graph.hpp"
#include "zqforce/vertex_set.hpp"

namespace zqforce {

// Token cost in the Z_q-forcing game. kInfiniteCost is strictly greater than
// any achievable cost; additions saturate.
using Cost = std::uint8_t;
inline constexpr Cost kInfiniteCost = 255;

constexpr Cost add_cost(Cost a, int b) {
  return a == kInfiniteCost ? kInfiniteCost : static_cast<Cost>(a + b);
}

// The cost-table dynamic program enumerates every closed subset of V, so it
// is limited well below kWordCap.
inline constexpr int kMaxTableVertices = 26;

// Above this order minimax_oracle refuses unless explicitly overridden.
inline constexpr int kOracleSoftLimit = 10;

enum class DeclareWidth {
  // Black announces exactly q+1 components.
  kExact,
  // Black may announce any number >= q+1 of components. Verification only.
  kAtLeast,
};

struct SolverOptions {
  int threads = 1;
  DeclareWidth width = DeclareWidth::kExact;
  // Called after each cardinality layer with (layer size |U|, sets in layer).
  std::function<void(int, std::size_t)> progress;
};

// Minimal number of tokens Black needs from each closed black set.
class CostTable {
 public:
  const Graph& graph() const { return graph_; }
  const LoopAssignment& loops() const { return loops_; }
  int q() const { return q_; }
  // True when the spend option was disabled (the up-front sub-table).
  bool zero_spend() const { return zero_spend_; }
  const Forcer& forcer() const { return forcer_; }

  // Number of closed sets.
  std::size_t size() const { return keys_.size(); }
  bool contains(VertexSet u) const;
  // Closed sets in ascending packed-word order and their costs.
  const std::vector<VertexSet::Word>& keys() const { return keys_; }
  const std::vector<Cost>& costs() const { return costs_; }

  // Cost of any black set; a non-closed set costs the same as its closure.
  Cost cost(VertexSet u) const;

  // cost(closure(empty set)).
  int value() const { return cost(VertexSet()); }

 private:
  friend CostTable zq_cost_table(const Graph&, const LoopAssignment&, int,
                                 const SolverOptions&);
  friend CostTable zero_spend_table(const Graph&, const LoopAssignment&, int,
                                    const SolverOptions&);
  CostTable(const Graph& g, const LoopAssignment& l, int q, bool zero_spend);

  Graph graph_;
  LoopAssignment loops_;
  int q_ = 0;
  bool zero_spend_ = false;
  Forcer forcer_;
  std::vector<VertexSet::Word> keys_;
  std::vector<Cost> costs_;
};

struct GameValue {
  int tokens = 0;
  CostTable witness_table;
};

// The cost-table dynamic program for the Z_q-forcing game with loop
// assignment `l` (all unspecified for the plain game). Throws CapacityError
// when g.n() > kMaxTableVertices and ArgumentError for q < 0.
CostTable zq_cost_table(const Graph& g, const LoopAssignment& l, int q,
                        const SolverOptions& opts = {});

// The same recursion with the spend option removed: every entry is 0 (Black
// wins for free) or kInfiniteCost.
CostTable zero_spend_table(const Graph& g, const LoopAssignment& l, int q,
                           const SolverOptions& opts = {});

GameValue zq(const Graph& g, int q, const SolverOptions& opts = {});
GameValue zq_looped(const Graph& g, const LoopAssignment& l, int q,
                    const SolverOptions& opts = {});
// Zero forcing number Z(G) = Z_n(G).
GameValue z(const Graph& g, const SolverOptions& opts = {});
// Positive semidefinite zero forcing number Z_+(G) = Z_0(G).
GameValue z_plus(const Graph& g, const SolverOptions& opts = {});

// Fewest vertices Black can spend on before any free move and still win the
// Z_q game without spending again.
int zq_upfront(const Graph& g, int q, const SolverOptions& opts = {});
int zq_upfront_looped(const Graph& g, const LoopAssignment& l, int q,
                      const SolverOptions& opts = {});

// Game value by top-down minimax over raw black sets, independent of the
// cost-table code path. Throws CapacityError above kOracleSoftLimit vertices
// unless `override_limit` is set.
int minimax_oracle(const Graph& g, const LoopAssignment& l, int q,
                   bool override_limit = false);

struct Move {
  enum class Kind { kDone, kSpend, kDeclare };
  Kind kind = Kind::kDone;
  int vertex = -1;                  // kSpend
  std::vector<VertexSet> declared;  // kDeclare, ordered by smallest member

  bool operator==(const Move&) const = default;
};

// Every declaration of table.q()+1 white components of G - current after
// which all White replies leave Black within `tokens_left`. Enumerated in
// lexicographic order of component index.
std::vector<Move> winning_declares(const CostTable& table, VertexSet current,
                                   int tokens_left);

// A Black move that stays within `tokens_left` against any White reply.
// Free declarations are preferred; otherwise the smallest winning spend.
// Throws InsufficientTokensError if cost(current) > tokens_left.
Move optimal_move(const CostTable& table, VertexSet current, int tokens_left);

}  // namespace zqforce

#endif  // ZQFORCE_GAME_HPP_
