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

#include "zqforce/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>

#include "zqforce/errors.hpp"

namespace zqforce {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    pos = kGraph6Header.size();
  }
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;

  auto read6 = [&](std::size_t at) -> std::uint64_t {
    if (at >= end) throw ParseError("graph6 string truncated", at);
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 byte", at);
    return c - 63U;
  };

  std::uint64_t n = 0;
  if (pos >= end) throw ParseError("empty graph6 string", pos);
  if (static_cast<unsigned char>(text[pos]) != 126) {
    n = read6(pos);
    pos += 1;
  } else if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) != 126) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | read6(pos + i);
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | read6(pos + i);
    pos += 8;
  }
  if (n > static_cast<std::uint64_t>(kWordCap)) {
    throw CapacityError("graph6 graph has " + std::to_string(n) +
                        " vertices; capacity is " + std::to_string(kWordCap));
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (end - pos < bytes) {
    throw ParseError("graph6 adjacency truncated", end);
  }
  if (end - pos > bytes) {
    throw ParseError("trailing bytes after graph6 adjacency", pos + bytes);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::uint64_t chunk = read6(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const int n = g.n();
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 63) + 63);
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> values;
  std::vector<std::size_t> offsets;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || (ptr != text.data() + text.size() && !is_space(*ptr))) {
      throw ParseError("expected an integer", pos);
    }
    values.push_back(value);
    offsets.push_back(pos);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (values.empty()) throw ParseError("missing vertex count", 0);
  const long long n = values[0];
  if (n < 0) throw ParseError("negative vertex count", offsets[0]);
  if (n > kWordCap) {
    throw CapacityError("edge list has " + std::to_string(n) +
                        " vertices; capacity is " + std::to_string(kWordCap));
  }
  if (values.size() % 2 == 0) {
    throw ParseError("odd number of edge endpoints", offsets.back());
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < values.size(); i += 2) {
    const long long u = values[i];
    const long long v = values[i + 1];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ArgumentError("edge endpoint out of range at byte " +
                          std::to_string(offsets[u < 0 || u >= n ? i : i + 1]));
    }
    if (u == v) {
      throw ArgumentError("self-edge " + std::to_string(u) + " " +
                          std::to_string(v) + " at byte " + std::to_string(offsets[i]));
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace zqforce
