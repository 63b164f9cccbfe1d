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

#ifndef ZQFORCE_INERTIA_HPP_
#define ZQFORCE_INERTIA_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zqforce {

enum class PointStatus : std::uint8_t { kUnknown = 0, kExcluded = 1, kCertified = 2 };

// What is known about each candidate inertia (p, q), p, q >= 0, p + q <= n, of
// the matrices in S(G) for an n-vertex graph G. Marking a point also marks its
// mirror (q, p), since A and -A lie in S(G) together.
class InertiaRegion {
 public:
  explicit InertiaRegion(int n = 0);

  int n() const { return n_; }
  bool in_range(int p, int q) const { return p >= 0 && q >= 0 && p + q <= n_; }
  // Throws ArgumentError outside the triangle.
  PointStatus status(int p, int q) const;
  bool excluded(int p, int q) const { return status(p, q) == PointStatus::kExcluded; }
  bool certified(int p, int q) const { return status(p, q) == PointStatus::kCertified; }

  // Throws ContradictionError if the point (or its mirror) has the opposite
  // status.
  void exclude(int p, int q);
  void certify(int p, int q);

  // Points with the given status, ordered by q then p.
  std::vector<std::pair<int, int>> points(PointStatus s) const;

  bool operator==(const InertiaRegion&) const = default;

 private:
  std::size_t index(int p, int q) const;
  void mark(int p, int q, PointStatus s);

  int n_;
  std::vector<PointStatus> cells_;
};

// Marks (n - q - zq_values[q] - 1, q) excluded for every q with a
// nonnegative first coordinate, mirrors, then southwest-closes. zq_values
// must cover 0..n; entries past n are ignored. Throws ArgumentError.
InertiaRegion excluded_from_zq(int n, std::span<const int> zq_values);

// Excluded points spread to every (s, t) with s <= p, t <= q when p + q < n.
InertiaRegion sw_close(InertiaRegion region);

// Certified points spread to every (p + s, q + t) inside the triangle.
// Throws ContradictionError naming the first colliding point.
InertiaRegion ne_close(InertiaRegion region);

// Every marked point of `b` marked in a copy of `a` (same order). Throws
// ContradictionError on the first conflict.
InertiaRegion merge(const InertiaRegion& a, const InertiaRegion& b);

// Region for the disjoint union of the two graphs: certified points are the
// pointwise sums; (p, q) is excluded when every split of it into a point of
// `a` and a point of `b` hits an excluded (or out-of-range) point on one side.
InertiaRegion minkowski_certified(const InertiaRegion& a, const InertiaRegion& b);

// Rows q = n down to 0, row q holding columns p = 0..n-q: 'X' excluded,
// 'O' certified, '.' unknown.
std::string render_grid(const InertiaRegion& region);
InertiaRegion parse_grid(std::string_view text);

// Header "p,q,status" then one row per point, status EXCLUDED, CERTIFIED or
// UNKNOWN, ordered by q then p.
std::string render_csv(const InertiaRegion& region);
InertiaRegion parse_csv(std::string_view text);

}  // namespace zqforce

#endif  // ZQFORCE_INERTIA_HPP_
