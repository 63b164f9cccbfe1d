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

#ifndef ZQFORCE_CERTIFY_HPP_
#define ZQFORCE_CERTIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zqforce/graph.hpp"
#include "zqforce/inertia.hpp"

namespace zqforce {

// Smallest magnitude accepted for an edge weight.
inline constexpr double kMinWeight = 1e-6;

// Zero-band tolerances, relative to max(1, Gershgorin bound).
inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kSampleTolerance = 1e-7;

// A real symmetric matrix in S(G): nonzero exactly on the edges of the graph
// off the diagonal, arbitrary on the diagonal.
class WeightedGraphMatrix {
 public:
  WeightedGraphMatrix() = default;
  // `edge_weights` is aligned with graph.edges(). Throws ArgumentError on a
  // size mismatch, a non-finite entry or a weight below kMinWeight.
  WeightedGraphMatrix(Graph graph, std::vector<double> edge_weights,
                      std::vector<double> diagonal);

  // Row-major n x n values; the graph is read off the nonzero pattern.
  // Throws ArgumentError if the matrix is not symmetric.
  static WeightedGraphMatrix from_dense(int n, const std::vector<double>& values);

  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  const std::vector<double>& edge_weights() const { return edge_weights_; }
  const std::vector<double>& diagonal() const { return diagonal_; }
  double weight(int u, int v) const;

  std::vector<double> dense() const;
  WeightedGraphMatrix negated() const;

 private:
  Graph graph_;
  std::vector<double> edge_weights_;
  std::vector<double> diagonal_;
};

struct InertiaTriple {
  int p = 0;  // positive eigenvalues
  int q = 0;  // negative eigenvalues
  int z = 0;  // zero eigenvalues (nullity)

  bool operator==(const InertiaTriple&) const = default;
};

// Eigenvalues of a dense symmetric matrix in ascending order (cyclic Jacobi).
std::vector<double> symmetric_eigenvalues(std::vector<double> values, int n);

// max(1, max_i sum_j |a_ij|).
double gershgorin_scale(const WeightedGraphMatrix& m);

// Counts eigenvalues above tol*scale, below -tol*scale and in between.
// Throws ArgumentError if tol <= 0.
InertiaTriple matrix_inertia(const WeightedGraphMatrix& m, double tol = kExactTolerance);

// Desargues graph (generalized_petersen(10, 3) labels) with zero diagonal and
// unit edge weights, except the spokes u_i v_i of one parity, which get -1.
enum class SpokeParity { kEven, kOdd };
WeightedGraphMatrix desargues_66(SpokeParity parity = SpokeParity::kEven);

// m + c*I.
WeightedGraphMatrix shift(const WeightedGraphMatrix& m, double c);

// One random matrix in S(g) per trial: edge weights of magnitude uniform in
// [0.5, 2] with random sign; each diagonal entry 0 with probability
// diag_zero_prob, otherwise uniform in [-2, 2]. Trial i draws from its own
// substream of `seed`, so results do not depend on `threads`.
std::vector<InertiaTriple> sample_inertia_triples(const Graph& g, int trials,
                                                  std::uint64_t seed, double diag_zero_prob,
                                                  int threads = 1);

// The sampled (p, q) marked certified, then northeast-closed.
InertiaRegion sample_inertia_points(const Graph& g, int trials, std::uint64_t seed,
                                    double diag_zero_prob, int threads = 1);

// "n" on the first line, then n rows of n values.
std::string emit_matrix(const WeightedGraphMatrix& m);
WeightedGraphMatrix parse_matrix(std::string_view text);

}  // namespace zqforce

#endif  // ZQFORCE_CERTIFY_HPP_
