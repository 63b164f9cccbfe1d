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

#include <algorithm>
#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "zqforce/builders.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/game.hpp"

namespace zqforce {
namespace {

const LoopAssignment& no_loops(const Graph& g) {
  static std::vector<LoopAssignment> cache(kWordCap + 1);
  LoopAssignment& l = cache[static_cast<std::size_t>(g.n())];
  if (l.n() != g.n()) l = LoopAssignment(g.n());
  return l;
}

// Plays optimal_move from `current` against every White reply and returns
// false if Black ever needs more than `tokens` tokens.
bool strategy_wins(const CostTable& table, VertexSet current, int tokens, int depth = 0) {
  const Move m = optimal_move(table, current, tokens);
  switch (m.kind) {
    case Move::Kind::kDone:
      return current == table.graph().vertices();
    case Move::Kind::kSpend: {
      if (tokens < 1) return false;
      const VertexSet next = table.forcer().close(current | VertexSet::single(m.vertex));
      return strategy_wins(table, next, tokens - 1, depth + 1);
    }
    case Move::Kind::kDeclare: {
      if (static_cast<int>(m.declared.size()) != table.q() + 1) return false;
      const std::size_t k = m.declared.size();
      for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
        VertexSet merged;
        for (std::size_t i = 0; i < k; ++i) {
          if ((pick >> i) & 1U) merged |= m.declared[i];
        }
        const VertexSet next = table.forcer().component_close(current, merged);
        if (next == current || !strategy_wins(table, next, tokens, depth + 1)) return false;
      }
      return true;
    }
  }
  return false;
}

TEST_CASE("cost table on K2") {
  const Graph k2 = complete(2);
  for (int q = 0; q <= 3; ++q) {
    const CostTable t = zq_cost_table(k2, no_loops(k2), q);
    CHECK(t.cost(VertexSet{0, 1}) == 0);
    CHECK(t.cost(VertexSet()) == 1);
    CHECK(t.value() == 1);
  }
}

TEST_CASE("stars and the Barioli-Fallat tree") {
  CHECK(zq(star(4), 1).tokens == 3);
  CHECK(zq(barioli_fallat(), 1).tokens == 3);
  // Two stars: spending max(p,r)-1 leaves the other star whole, and a lone
  // component cannot be declared with q = 1, so one more token is needed.
  // This is exactly the union lower bound Z_1(G) + Z_0(H).
  for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {4, 2}, {3, 5}}) {
    CAPTURE(p);
    CAPTURE(r);
    const Graph u = disjoint_union(star(p), star(r));
    const int value = zq(u, 1).tokens;
    CHECK(value == std::max(p, r));
    CHECK(value == std::max(zq(star(p), 1).tokens + zq(star(r), 0).tokens,
                            zq(star(p), 0).tokens + zq(star(r), 1).tokens));
    if (u.n() <= kOracleSoftLimit) CHECK(value == minimax_oracle(u, no_loops(u), 1));
  }
  for (int p = 2; p <= 6; ++p) CHECK(zq(star(p), 1).tokens == p - 1);
}

TEST_CASE("P4 with q = 0") {
  const Graph p4 = path(4);
  const int oracle = minimax_oracle(p4, no_loops(p4), 0);
  CHECK(oracle == 1);
  CHECK(zq(p4, 0).tokens == oracle);
}

TEST_CASE("Desargues graph values") {
  const Graph des = generalized_petersen(10, 3);
  CHECK(z(des).tokens == 8);
  CHECK(zq(des, 2).tokens == 7);
}

TEST_CASE("zero forcing number") {
  for (int n = 1; n <= 12; ++n) CHECK(z(path(n)).tokens == 1);
  for (int n = 1; n <= 7; ++n) {
    const int brute = testing::z_bruteforce(complete(n));
    CHECK(brute == std::max(n - 1, 1));
    CHECK(z(complete(n)).tokens == brute);
  }
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    CHECK(z(g).tokens == testing::z_bruteforce(g));
  }
}

TEST_CASE("positive semidefinite zero forcing number") {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : testing::trees(n)) CHECK(z_plus(t).tokens == 1);
  }
  for (int n = 1; n <= 7; ++n) {
    const Graph k = complete(n);
    const int oracle = minimax_oracle(k, no_loops(k), 0);
    CHECK(oracle == std::max(n - 1, 1));
    CHECK(z_plus(k).tokens == oracle);
  }
}

TEST_CASE("looped game values") {
  const Graph k1(1, {});
  CHECK(zq_looped(k1, LoopAssignment::parse("L"), 0).tokens == 0);
  CHECK(zq_looped(k1, LoopAssignment::parse("U"), 0).tokens == 1);
  CHECK(zq_looped(k1, LoopAssignment::parse("."), 0).tokens == 1);
}

TEST_CASE("spend-up-front variant") {
  for (int n = 1; n <= 8; ++n) {
    for (int q = 0; q <= 3; ++q) CHECK(zq_upfront(path(n), q) == 1);
  }
  const int brute = testing::upfront_bruteforce(star(4), 1);
  CHECK(brute == 3);
  CHECK(zq_upfront(star(4), 1) == brute);
}

TEST_CASE("up-front variant matches brute force and the zero-cost criterion") {
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    for (int q = 0; q <= 2; ++q) {
      const int upfront = zq_upfront(g, q);
      CHECK(upfront == testing::upfront_bruteforce(g, q));
      const CostTable t = zq_cost_table(g, no_loops(g), q);
      CHECK(upfront >= t.value());
      int smallest_free = g.n();
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
        if (t.cost(VertexSet(s)) == 0) smallest_free = std::min(smallest_free, VertexSet(s).size());
      }
      CHECK(upfront == smallest_free);
    }
  }
}

TEST_CASE("minimax oracle") {
  const Graph k2 = complete(2);
  CHECK(minimax_oracle(k2, no_loops(k2), 0) == 1);
  const Graph bf = barioli_fallat();
  CHECK(minimax_oracle(bf, no_loops(bf), 1) == 3);
  const Graph p11 = path(11);
  CHECK_THROWS_AS(minimax_oracle(p11, no_loops(p11), 0), CapacityError);
  CHECK(minimax_oracle(p11, no_loops(p11), 0, /*override_limit=*/true) == 1);
}

TEST_CASE("cost table agrees with the minimax oracle") {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    for (int q : {0, 1, 2, 3, g.n()}) {
      CHECK(zq(g, q).tokens == minimax_oracle(g, no_loops(g), q));
    }
  }
}

TEST_CASE("looped cost table agrees with the minimax oracle") {
  for (const Graph& g : testing::connected_graphs_up_to(5)) {
    for (std::uint64_t packed = 0; packed < (std::uint64_t{1} << g.n()); ++packed) {
      const LoopAssignment l = LoopAssignment::from_packed(g.n(), packed);
      for (int q : {0, 1, 2}) {
        CHECK(zq_looped(g, l, q).tokens == minimax_oracle(g, l, q));
      }
    }
  }
}

TEST_CASE("cost table invariants") {
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    for (int q : {0, 1, 2}) {
      const CostTable t = zq_cost_table(g, no_loops(g), q);
      CHECK(t.cost(g.vertices()) == 0);
      for (std::size_t i = 0; i < t.size(); ++i) {
        const VertexSet u(t.keys()[i]);
        CHECK(t.forcer().is_closed(u));
        CHECK(t.costs()[i] <= (g.vertices() - u).size());
      }
      CHECK(t.value() <= g.n());
      CHECK((t.value() == 0) == (t.forcer().close(VertexSet()) == g.vertices()));
    }
  }
}

TEST_CASE("ordering chain and stabilization") {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    const int zg = z(g).tokens;
    CHECK(z_plus(g).tokens == zq(g, 0).tokens);
    int previous = 0;
    for (int q = 0; q <= g.n() + 3; ++q) {
      const int v = zq(g, q).tokens;
      CHECK(v >= previous);
      CHECK(v <= zg);
      if (q >= g.n()) CHECK(v == zg);
      previous = v;
    }
  }
}

TEST_CASE("disjoint union inequalities") {
  const auto graphs = testing::all_graphs_up_to(4);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      const Graph& g = graphs[i];
      const Graph& h = graphs[j];
      const Graph u = disjoint_union(g, h);
      for (int q = 0; q <= 3; ++q) {
        const int joint = zq(u, q).tokens;
        CHECK(joint <= zq(g, q).tokens + zq(h, q).tokens);
        for (int s = 0; s <= q; ++s) CHECK(zq(g, s).tokens + zq(h, q - s).tokens <= joint);
      }
    }
  }
}

TEST_CASE("announcing more than q+1 components never changes the table") {
  SolverOptions wide;
  wide.width = DeclareWidth::kAtLeast;
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    for (int q = 0; q <= 2; ++q) {
      const CostTable exact = zq_cost_table(g, no_loops(g), q);
      const CostTable at_least = zq_cost_table(g, no_loops(g), q, wide);
      CHECK(exact.costs() == at_least.costs());
    }
  }
}

TEST_CASE("cost monotonicity over closed sets (empirical)") {
  long checked = 0;
  long violations = 0;
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    for (int q = 0; q <= 2; ++q) {
      const CostTable t = zq_cost_table(g, no_loops(g), q);
      for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
          const VertexSet ua(t.keys()[a]);
          const VertexSet ub(t.keys()[b]);
          if (a == b || !ua.is_subset_of(ub)) continue;
          ++checked;
          if (t.costs()[b] > t.costs()[a]) ++violations;
        }
      }
    }
  }
  MESSAGE("closed pairs U ⊂ U' checked: " << checked << ", cost(U') > cost(U): " << violations);
  CHECK(checked > 0);
}

TEST_CASE("parallel layers are bit-identical to sequential") {
  const Graph g = generalized_petersen(8, 3);
  SolverOptions one;
  SolverOptions four;
  four.threads = 4;
  for (int q : {0, 1, 2}) {
    const CostTable a = zq_cost_table(g, no_loops(g), q, one);
    const CostTable b = zq_cost_table(g, no_loops(g), q, four);
    CHECK(a.keys() == b.keys());
    CHECK(a.costs() == b.costs());
  }
}

TEST_CASE("progress callback sees every layer") {
  SolverOptions opts;
  std::vector<int> layers;
  opts.progress = [&](int layer, std::size_t) { layers.push_back(layer); };
  zq(path(5), 1, opts);
  CHECK(layers == std::vector<int>{5, 4, 3, 2, 1, 0});
}

TEST_CASE("solver input errors") {
  const Graph big = empty_graph(kMaxTableVertices + 1);
  CHECK_THROWS_AS(zq(big, 0), CapacityError);
  CHECK_THROWS_AS(zq(path(3), -1), ArgumentError);
  CHECK_THROWS_AS(zq_looped(path(3), LoopAssignment(2), 0), ArgumentError);
}

TEST_CASE("optimal move") {
  const Graph k2 = complete(2);
  const CostTable k2_table = zq_cost_table(k2, no_loops(k2), 0);
  CHECK(optimal_move(k2_table, VertexSet(), 1) == Move{Move::Kind::kSpend, 0, {}});
  CHECK(optimal_move(k2_table, k2.vertices(), 0).kind == Move::Kind::kDone);
  CHECK_THROWS_AS(optimal_move(k2_table, VertexSet(), 0), InsufficientTokensError);

  const Graph bf = barioli_fallat();
  const CostTable table = zq_cost_table(bf, no_loops(bf), 1);
  const VertexSet current = table.forcer().close(VertexSet{2, 5, 8});
  REQUIRE(current == VertexSet{1, 2, 4, 5, 7, 8});
  const Move move = optimal_move(table, current, 0);
  CHECK(move.kind == Move::Kind::kDeclare);
  CHECK(move.declared.size() == 2);
  const std::vector<Move> all = winning_declares(table, current, 0);
  const Move handed{Move::Kind::kDeclare, -1, {VertexSet{3}, VertexSet{6}}};
  CHECK(std::find(all.begin(), all.end(), handed) != all.end());
  CHECK(all.front() == move);
  CHECK_THROWS_AS(optimal_move(table, VertexSet{2}, 3), ArgumentError);
}

TEST_CASE("following optimal moves wins within the table value") {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    for (int q : {0, 1, 2}) {
      const CostTable t = zq_cost_table(g, no_loops(g), q);
      const VertexSet start = t.forcer().close(VertexSet());
      CHECK(strategy_wins(t, start, t.value()));
    }
  }
  const Graph bf = barioli_fallat();
  const CostTable t = zq_cost_table(bf, no_loops(bf), 1);
  CHECK(strategy_wins(t, VertexSet(), 3));
}

}  // namespace
}  // namespace zqforce
