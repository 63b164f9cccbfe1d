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

#include "zqforce/builders.hpp"

#include <charconv>
#include <string>

#include "zqforce/errors.hpp"

namespace zqforce {

Graph path(int n) {
  if (n < 0) throw ArgumentError("path: n must be >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "P" + std::to_string(n));
}

Graph star(int p) {
  if (p < 0) throw ArgumentError("star: p must be >= 0");
  std::vector<Edge> edges;
  for (int i = 1; i <= p; ++i) edges.emplace_back(0, i);
  return Graph(p + 1, edges, "K1," + std::to_string(p));
}

Graph complete(int n) {
  if (n < 0) throw ArgumentError("complete: n must be >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges, "K" + std::to_string(n));
}

Graph empty_graph(int n) {
  if (n < 0) throw ArgumentError("empty: n must be >= 0");
  return Graph(n, {}, "E" + std::to_string(n));
}

Graph cycle(int n) {
  if (n < 3) throw ArgumentError("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges, "C" + std::to_string(n));
}

Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  std::string label = "K";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw ArgumentError("multipartite: part sizes must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
    label += (i ? "," : "") + std::to_string(parts[i]);
  }
  const int n = static_cast<int>(part_of.size());
  if (n > kWordCap) throw CapacityError("multipartite: too many vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges, label);
}

Graph generalized_petersen(int m, int k) {
  if (m < 3 || k < 1 || 2 * k >= m) {
    throw ArgumentError("generalized_petersen: need m >= 3 and 1 <= k < m/2");
  }
  if (2 * m > kWordCap) throw CapacityError("generalized_petersen: too many vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(m + i, m + (i + k) % m);
    edges.emplace_back(i, m + i);
  }
  return Graph(2 * m, edges, "GP(" + std::to_string(m) + "," + std::to_string(k) + ")");
}

Graph barioli_fallat() {
  return Graph(10,
               {{0, 1}, {0, 4}, {0, 7}, {1, 2}, {1, 3}, {4, 5}, {4, 6}, {7, 8}, {7, 9}},
               "barioli_fallat");
}

namespace {

std::vector<int> parse_int_args(std::string_view args, std::string_view spec) {
  std::vector<int> out;
  if (args.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = args.find(',', pos);
    const std::string_view token =
        args.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ArgumentError("bad builder argument '" + std::string(token) + "' in '" +
                          std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void expect_arity(const std::vector<int>& args, std::size_t arity, std::string_view spec) {
  if (args.size() != arity) {
    throw ArgumentError("builder '" + std::string(spec) + "' expects " +
                        std::to_string(arity) + " argument(s)");
  }
}

}  // namespace

Graph build_named(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::vector<int> args =
      parse_int_args(colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1),
                     spec);
  if (name == "path") {
    expect_arity(args, 1, spec);
    return path(args[0]);
  }
  if (name == "star") {
    expect_arity(args, 1, spec);
    return star(args[0]);
  }
  if (name == "complete") {
    expect_arity(args, 1, spec);
    return complete(args[0]);
  }
  if (name == "empty") {
    expect_arity(args, 1, spec);
    return empty_graph(args[0]);
  }
  if (name == "cycle") {
    expect_arity(args, 1, spec);
    return cycle(args[0]);
  }
  if (name == "multipartite") {
    if (args.empty()) throw ArgumentError("multipartite needs part sizes");
    return complete_multipartite(args);
  }
  if (name == "petersen") {
    expect_arity(args, 2, spec);
    return generalized_petersen(args[0], args[1]);
  }
  if (name == "desargues") {
    expect_arity(args, 0, spec);
    return generalized_petersen(10, 3);
  }
  if (name == "barioli_fallat") {
    expect_arity(args, 0, spec);
    return barioli_fallat();
  }
  throw ArgumentError("unknown builder '" + std::string(name) + "'");
}

}  // namespace zqforce
