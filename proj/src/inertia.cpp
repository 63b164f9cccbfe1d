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

#include "zqforce/inertia.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "zqforce/errors.hpp"

namespace zqforce {

InertiaRegion::InertiaRegion(int n) : n_(n) {
  if (n < 0) throw ArgumentError("inertia region order must be >= 0");
  cells_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1),
                PointStatus::kUnknown);
}

std::size_t InertiaRegion::index(int p, int q) const {
  if (!in_range(p, q)) {
    throw ArgumentError("point (" + std::to_string(p) + "," + std::to_string(q) +
                        ") outside the inertia triangle of order " + std::to_string(n_));
  }
  return static_cast<std::size_t>(q) * static_cast<std::size_t>(n_ + 1) +
         static_cast<std::size_t>(p);
}

PointStatus InertiaRegion::status(int p, int q) const { return cells_[index(p, q)]; }

void InertiaRegion::mark(int p, int q, PointStatus s) {
  for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
    PointStatus& cell = cells_[index(x, y)];
    if (cell != PointStatus::kUnknown && cell != s) throw ContradictionError(x, y);
    cell = s;
  }
}

void InertiaRegion::exclude(int p, int q) { mark(p, q, PointStatus::kExcluded); }
void InertiaRegion::certify(int p, int q) { mark(p, q, PointStatus::kCertified); }

std::vector<std::pair<int, int>> InertiaRegion::points(PointStatus s) const {
  std::vector<std::pair<int, int>> out;
  for (int q = 0; q <= n_; ++q) {
    for (int p = 0; p + q <= n_; ++p) {
      if (status(p, q) == s) out.emplace_back(p, q);
    }
  }
  return out;
}

InertiaRegion excluded_from_zq(int n, std::span<const int> zq_values) {
  if (n < 0) throw ArgumentError("n must be >= 0");
  if (zq_values.size() < static_cast<std::size_t>(n) + 1) {
    throw ArgumentError("need Z_q values for q = 0.." + std::to_string(n) + ", got " +
                        std::to_string(zq_values.size()));
  }
  InertiaRegion region(n);
  for (int q = 0; q <= n; ++q) {
    const int zq = zq_values[static_cast<std::size_t>(q)];
    if (zq < 0 || zq > n) {
      throw ArgumentError("Z_" + std::to_string(q) + " = " + std::to_string(zq) +
                          " outside 0.." + std::to_string(n));
    }
    const int p = n - q - zq - 1;
    if (p >= 0) region.exclude(p, q);
  }
  return sw_close(std::move(region));
}

InertiaRegion sw_close(InertiaRegion region) {
  const int n = region.n();
  for (auto [p, q] : region.points(PointStatus::kExcluded)) {
    if (p + q >= n) continue;
    for (int t = 0; t <= q; ++t) {
      for (int s = 0; s <= p; ++s) region.exclude(s, t);
    }
  }
  return region;
}

InertiaRegion ne_close(InertiaRegion region) {
  const int n = region.n();
  for (auto [p, q] : region.points(PointStatus::kCertified)) {
    for (int t = q; t <= n; ++t) {
      for (int s = p; s + t <= n; ++s) region.certify(s, t);
    }
  }
  return region;
}

InertiaRegion merge(const InertiaRegion& a, const InertiaRegion& b) {
  if (a.n() != b.n()) throw ArgumentError("cannot merge regions of different order");
  InertiaRegion out = a;
  for (auto [p, q] : b.points(PointStatus::kExcluded)) out.exclude(p, q);
  for (auto [p, q] : b.points(PointStatus::kCertified)) out.certify(p, q);
  return out;
}

InertiaRegion minkowski_certified(const InertiaRegion& a, const InertiaRegion& b) {
  InertiaRegion out(a.n() + b.n());
  for (auto [pa, qa] : a.points(PointStatus::kCertified)) {
    for (auto [pb, qb] : b.points(PointStatus::kCertified)) out.certify(pa + pb, qa + qb);
  }
  auto blocked = [](const InertiaRegion& r, int p, int q) {
    return !r.in_range(p, q) || r.excluded(p, q);
  };
  for (int q = 0; q <= out.n(); ++q) {
    for (int p = 0; p + q <= out.n(); ++p) {
      bool all_blocked = true;
      for (int q1 = 0; q1 <= q && all_blocked; ++q1) {
        for (int p1 = 0; p1 <= p && all_blocked; ++p1) {
          all_blocked = blocked(a, p1, q1) || blocked(b, p - p1, q - q1);
        }
      }
      if (all_blocked) out.exclude(p, q);
    }
  }
  return out;
}

namespace {

char status_char(PointStatus s) {
  switch (s) {
    case PointStatus::kExcluded: return 'X';
    case PointStatus::kCertified: return 'O';
    case PointStatus::kUnknown: break;
  }
  return '.';
}

const char* status_name(PointStatus s) {
  switch (s) {
    case PointStatus::kExcluded: return "EXCLUDED";
    case PointStatus::kCertified: return "CERTIFIED";
    case PointStatus::kUnknown: break;
  }
  return "UNKNOWN";
}

void apply(InertiaRegion& region, int p, int q, PointStatus s) {
  if (s == PointStatus::kExcluded) region.exclude(p, q);
  if (s == PointStatus::kCertified) region.certify(p, q);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

std::string render_grid(const InertiaRegion& region) {
  std::string out;
  for (int q = region.n(); q >= 0; --q) {
    for (int p = 0; p + q <= region.n(); ++p) out += status_char(region.status(p, q));
    out += '\n';
  }
  return out;
}

InertiaRegion parse_grid(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty grid", 0);
  const int n = static_cast<int>(lines.size()) - 1;
  InertiaRegion region(n);
  std::size_t offset = 0;
  for (int row = 0; row <= n; ++row) {
    const std::string_view line = lines[static_cast<std::size_t>(row)];
    const int q = n - row;
    if (static_cast<int>(line.size()) != n - q + 1) {
      throw ParseError("grid row for q=" + std::to_string(q) + " has wrong length", offset);
    }
    for (int p = 0; p + q <= n; ++p) {
      const char c = line[static_cast<std::size_t>(p)];
      if (c == 'X') {
        apply(region, p, q, PointStatus::kExcluded);
      } else if (c == 'O') {
        apply(region, p, q, PointStatus::kCertified);
      } else if (c != '.') {
        throw ParseError(std::string("bad grid character '") + c + "'",
                         offset + static_cast<std::size_t>(p));
      }
    }
    offset += line.size() + 1;
  }
  return region;
}

std::string render_csv(const InertiaRegion& region) {
  std::ostringstream out;
  out << "p,q,status\n";
  for (int q = 0; q <= region.n(); ++q) {
    for (int p = 0; p + q <= region.n(); ++p) {
      out << p << ',' << q << ',' << status_name(region.status(p, q)) << '\n';
    }
  }
  return out.str();
}

InertiaRegion parse_csv(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  if (lines.empty() || lines[0] != "p,q,status") throw ParseError("missing CSV header", 0);
  struct Row {
    int p, q;
    PointStatus s;
  };
  std::vector<Row> rows;
  int n = 0;
  std::size_t offset = lines[0].size() + 1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError("expected p,q,status", offset);
    int p = 0;
    int q = 0;
    auto r1 = std::from_chars(line.data(), line.data() + c1, p);
    auto r2 = std::from_chars(line.data() + c1 + 1, line.data() + c2, q);
    if (r1.ec != std::errc() || r2.ec != std::errc() || p < 0 || q < 0) {
      throw ParseError("bad coordinates", offset);
    }
    const std::string_view name = line.substr(c2 + 1);
    PointStatus s;
    if (name == "EXCLUDED") {
      s = PointStatus::kExcluded;
    } else if (name == "CERTIFIED") {
      s = PointStatus::kCertified;
    } else if (name == "UNKNOWN") {
      s = PointStatus::kUnknown;
    } else {
      throw ParseError("bad status '" + std::string(name) + "'", offset + c2 + 1);
    }
    rows.push_back({p, q, s});
    n = std::max(n, p + q);
    offset += line.size() + 1;
  }
  InertiaRegion region(n);
  for (const Row& r : rows) apply(region, r.p, r.q, r.s);
  return region;
}

}  // namespace zqforce
