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

#include "zqforce/certify.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>

#include "zqforce/builders.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/parallel.hpp"

namespace zqforce {

WeightedGraphMatrix::WeightedGraphMatrix(Graph graph, std::vector<double> edge_weights,
                                         std::vector<double> diagonal)
    : graph_(std::move(graph)),
      edge_weights_(std::move(edge_weights)),
      diagonal_(std::move(diagonal)) {
  if (edge_weights_.size() != static_cast<std::size_t>(graph_.edge_count())) {
    throw ArgumentError("expected one weight per edge");
  }
  if (diagonal_.size() != static_cast<std::size_t>(graph_.n())) {
    throw ArgumentError("expected one diagonal entry per vertex");
  }
  for (double w : edge_weights_) {
    if (!std::isfinite(w)) throw ArgumentError("non-finite edge weight");
    if (std::abs(w) < kMinWeight) throw ArgumentError("edge weight below minimum magnitude");
  }
  for (double d : diagonal_) {
    if (!std::isfinite(d)) throw ArgumentError("non-finite diagonal entry");
  }
}

WeightedGraphMatrix WeightedGraphMatrix::from_dense(int n, const std::vector<double>& values) {
  if (n < 0 || values.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ArgumentError("dense matrix has wrong size");
  }
  auto at = [&](int i, int j) {
    return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(j)];
  };
  std::vector<Edge> edges;
  std::vector<double> diagonal;
  for (int i = 0; i < n; ++i) {
    diagonal.push_back(at(i, i));
    for (int j = i + 1; j < n; ++j) {
      const double a = at(i, j);
      const double b = at(j, i);
      if (!std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("non-finite entry");
      if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) {
        throw ArgumentError("matrix is not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
      }
      if (a != 0.0) edges.emplace_back(i, j);
    }
  }
  Graph g(n, edges);
  std::vector<double> weights;
  for (auto [u, v] : g.edges()) weights.push_back(at(u, v));
  return WeightedGraphMatrix(std::move(g), std::move(weights), std::move(diagonal));
}

double WeightedGraphMatrix::weight(int u, int v) const {
  if (u == v) return diagonal_[static_cast<std::size_t>(u)];
  if (u > v) std::swap(u, v);
  const std::vector<Edge> edges = graph_.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end() || *it != Edge{u, v}) return 0.0;
  return edge_weights_[static_cast<std::size_t>(it - edges.begin())];
}

std::vector<double> WeightedGraphMatrix::dense() const {
  const auto n = static_cast<std::size_t>(this->n());
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = diagonal_[i];
  const std::vector<Edge> edges = graph_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto u = static_cast<std::size_t>(edges[e].first);
    const auto v = static_cast<std::size_t>(edges[e].second);
    a[u * n + v] = edge_weights_[e];
    a[v * n + u] = edge_weights_[e];
  }
  return a;
}

WeightedGraphMatrix WeightedGraphMatrix::negated() const {
  WeightedGraphMatrix out = *this;
  for (double& w : out.edge_weights_) w = -w;
  for (double& d : out.diagonal_) d = -d;
  return out;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  const auto un = static_cast<std::size_t>(n);
  if (a.size() != un * un) throw ArgumentError("dense matrix has wrong size");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * un + j]; };

  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double target = 1e-30 * std::max(frob, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = i + 1; j < un; ++j) off += at(i, j) * at(i, j);
    }
    if (off <= target) break;
    for (std::size_t p = 0; p < un; ++p) {
      for (std::size_t q = p + 1; q < un; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < un; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(un);
  for (std::size_t i = 0; i < un; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double gershgorin_scale(const WeightedGraphMatrix& m) {
  const std::vector<double> a = m.dense();
  const auto n = static_cast<std::size_t>(m.n());
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a[i * n + j]);
    scale = std::max(scale, row);
  }
  return scale;
}

InertiaTriple matrix_inertia(const WeightedGraphMatrix& m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  const double band = tol * gershgorin_scale(m);
  InertiaTriple t;
  for (double lambda : symmetric_eigenvalues(m.dense(), m.n())) {
    if (lambda > band) {
      ++t.p;
    } else if (lambda < -band) {
      ++t.q;
    } else {
      ++t.z;
    }
  }
  return t;
}

WeightedGraphMatrix desargues_66(SpokeParity parity) {
  Graph g = generalized_petersen(10, 3);
  std::vector<double> weights;
  const int negative = parity == SpokeParity::kEven ? 0 : 1;
  for (auto [u, v] : g.edges()) {
    const bool spoke = v == u + 10;
    weights.push_back(spoke && u % 2 == negative ? -1.0 : 1.0);
  }
  return WeightedGraphMatrix(std::move(g), std::move(weights), std::vector<double>(20, 0.0));
}

WeightedGraphMatrix shift(const WeightedGraphMatrix& m, double c) {
  std::vector<double> diagonal = m.diagonal();
  for (double& d : diagonal) d += c;
  return WeightedGraphMatrix(m.graph(), m.edge_weights(), std::move(diagonal));
}

namespace {

WeightedGraphMatrix random_matrix(const Graph& g, std::uint64_t seed, std::uint64_t trial,
                                  double diag_zero_prob) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> magnitude(0.5, 2.0);
  std::uniform_real_distribution<double> diag_value(-2.0, 2.0);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution zero_diag(diag_zero_prob);

  std::vector<double> weights;
  for (int e = 0; e < g.edge_count(); ++e) {
    const double w = magnitude(rng);
    weights.push_back(coin(rng) ? w : -w);
  }
  std::vector<double> diagonal;
  for (int v = 0; v < g.n(); ++v) diagonal.push_back(zero_diag(rng) ? 0.0 : diag_value(rng));
  return WeightedGraphMatrix(g, std::move(weights), std::move(diagonal));
}

}  // namespace

std::vector<InertiaTriple> sample_inertia_triples(const Graph& g, int trials,
                                                  std::uint64_t seed, double diag_zero_prob,
                                                  int threads) {
  if (trials < 1) throw ArgumentError("trials must be >= 1");
  if (!(diag_zero_prob >= 0.0 && diag_zero_prob <= 1.0)) {
    throw ArgumentError("diag_zero_prob must lie in [0, 1]");
  }
  std::vector<InertiaTriple> out(static_cast<std::size_t>(trials));
  parallel_for(out.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = matrix_inertia(random_matrix(g, seed, i, diag_zero_prob), kSampleTolerance);
    }
  });
  return out;
}

InertiaRegion sample_inertia_points(const Graph& g, int trials, std::uint64_t seed,
                                    double diag_zero_prob, int threads) {
  InertiaRegion region(g.n());
  for (const InertiaTriple& t : sample_inertia_triples(g, trials, seed, diag_zero_prob, threads)) {
    region.certify(t.p, t.q);
  }
  return ne_close(std::move(region));
}

std::string emit_matrix(const WeightedGraphMatrix& m) {
  const std::vector<double> a = m.dense();
  const auto n = static_cast<std::size_t>(m.n());
  std::string out = std::to_string(n) + "\n";
  char buf[64];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", a[i * n + j]);
      if (j > 0) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

WeightedGraphMatrix parse_matrix(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  long long n = -1;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  {
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
    if (ec != std::errc() || n < 0) throw ParseError("expected matrix order", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (n > kWordCap) throw CapacityError("matrix order exceeds capacity");
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), x);
    if (ec != std::errc()) throw ParseError("expected a real number", pos);
    values.push_back(x);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (values.size() != static_cast<std::size_t>(n * n)) {
    throw ParseError("expected " + std::to_string(n * n) + " entries, found " +
                     std::to_string(values.size()));
  }
  return WeightedGraphMatrix::from_dense(static_cast<int>(n), values);
}

}  // namespace zqforce
