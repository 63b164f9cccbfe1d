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

// Test-only graph catalogs and brute-force oracles. Nothing here calls into
// the solver code paths it is used to check.

#ifndef ZQFORCE_TESTS_SUPPORT_ORACLES_HPP_
#define ZQFORCE_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "zqforce/graph.hpp"

namespace zqforce::testing {

// Canonical code of g: the lexicographically smallest upper-triangle
// adjacency string over relabelings that sort vertices by degree.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class of graphs on exactly n vertices
// (1 <= n <= 8), ordered by canonical code.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);
// All graphs / connected graphs with 1..max_n vertices.
std::vector<Graph> all_graphs_up_to(int max_n);
std::vector<Graph> connected_graphs_up_to(int max_n);

// Non-isomorphic trees on n vertices: every Pruefer sequence for n <= 7,
// leaf augmentation of the (n-1)-vertex trees above that.
std::vector<Graph> trees(int n);

// Pruefer decoding.
Graph tree_from_pruefer(int n, const std::vector<int>& seq);

// Literal round-based color change rule: every black vertex with exactly one
// white neighbor inside `within` forces it, repeated until nothing changes.
VertexSet naive_closure(const Graph& g, VertexSet black, VertexSet within);
VertexSet naive_closure(const Graph& g, VertexSet black);

// Looped color change rule applied one force at a time, choosing uniformly
// among all currently available forces.
VertexSet random_order_closure(const Graph& g, const LoopAssignment& l, VertexSet black,
                               std::mt19937_64& rng);

// Smallest classic zero forcing set size, by subset enumeration.
int z_bruteforce(const Graph& g);

// True if Black wins the Z_q game from `black` without spending, via plain
// recursion over the game rules (announcements of exactly q+1 components).
bool free_win_bruteforce(const Graph& g, int q, VertexSet black);

// Smallest |S| with free_win_bruteforce(g, q, S).
int upfront_bruteforce(const Graph& g, int q);

}  // namespace zqforce::testing

#endif  // ZQFORCE_TESTS_SUPPORT_ORACLES_HPP_
