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

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "zqforce/builders.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/game.hpp"
#include "zqforce/inertia.hpp"

namespace zqforce {
namespace {

using Points = std::vector<std::pair<int, int>>;

std::vector<int> zq_profile(const Graph& g) {
  std::vector<int> values;
  for (int q = 0; q <= g.n(); ++q) values.push_back(zq(g, q).tokens);
  return values;
}

InertiaRegion single_vertex() {
  InertiaRegion r(1);
  r.certify(0, 0);
  r.certify(1, 0);
  return r;
}

InertiaRegion random_certified(int n, std::mt19937_64& rng) {
  InertiaRegion r(n);
  std::bernoulli_distribution keep(0.3);
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; p + q <= n; ++q) {
      if (keep(rng)) r.certify(p, q);
    }
  }
  return r;
}

TEST_CASE("region basics") {
  InertiaRegion r(3);
  CHECK(r.points(PointStatus::kUnknown).size() == 10);
  r.exclude(2, 0);
  CHECK(r.excluded(0, 2));
  r.certify(1, 1);
  CHECK(r.points(PointStatus::kCertified) == Points{{1, 1}});
  CHECK(r.points(PointStatus::kExcluded) == Points{{2, 0}, {0, 2}});
  CHECK_THROWS_AS(r.certify(0, 2), ContradictionError);
  CHECK_THROWS_AS(r.status(3, 1), ArgumentError);
  CHECK_THROWS_AS(r.status(-1, 0), ArgumentError);
}

TEST_CASE("exclusions from game values") {
  SUBCASE("order-20 graph with Z_0 = 6") {
    std::vector<int> values(21, 20);
    values[0] = 6;
    const InertiaRegion r = excluded_from_zq(20, values);
    CHECK(r.excluded(13, 0));
    CHECK(r.excluded(12, 0));
    CHECK(r.excluded(0, 13));
    CHECK(!r.excluded(14, 0));
  }
  SUBCASE("values equal to n exclude nothing") {
    const std::vector<int> values(8, 7);
    CHECK(excluded_from_zq(7, values).points(PointStatus::kExcluded).empty());
  }
  SUBCASE("star K_{1,4}") {
    const InertiaRegion r = excluded_from_zq(5, zq_profile(star(4)));
    CHECK(r.excluded(0, 1));
    CHECK(r.excluded(1, 0));
  }
  SUBCASE("extra trailing values are ignored") {
    const Graph g = barioli_fallat();
    std::vector<int> values = zq_profile(g);
    const InertiaRegion base = excluded_from_zq(g.n(), values);
    for (int extra = 0; extra < 4; ++extra) values.push_back(z(g).tokens);
    CHECK(excluded_from_zq(g.n(), values) == base);
  }
  SUBCASE("argument errors") {
    const std::vector<int> short_values(3, 1);
    CHECK_THROWS_AS(excluded_from_zq(5, short_values), ArgumentError);
    const std::vector<int> bad(4, 9);
    CHECK_THROWS_AS(excluded_from_zq(3, bad), ArgumentError);
  }
}

TEST_CASE("exclusions are southwest closed and symmetric") {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    const InertiaRegion r = excluded_from_zq(g.n(), zq_profile(g));
    for (auto [p, q] : r.points(PointStatus::kExcluded)) {
      CHECK(r.excluded(q, p));
      if (p + q < g.n()) {
        for (int s = 0; s <= p; ++s) {
          for (int t = 0; t <= q; ++t) CHECK(r.excluded(s, t));
        }
      }
    }
  }
}

TEST_CASE("northeast closure") {
  InertiaRegion r(20);
  r.certify(6, 6);
  const InertiaRegion closed = ne_close(r);
  for (int p = 6; p <= 14; ++p) CHECK(closed.certified(p, 6));
  for (int q = 6; q <= 14; ++q) CHECK(closed.certified(6, q));
  CHECK(closed.certified(7, 7));
  CHECK(!closed.certified(5, 6));

  CHECK(ne_close(InertiaRegion(4)) == InertiaRegion(4));

  InertiaRegion clash(20);
  clash.certify(6, 6);
  clash.exclude(7, 7);
  try {
    ne_close(clash);
    FAIL("expected a contradiction");
  } catch (const ContradictionError& e) {
    CHECK(e.p() == 7);
    CHECK(e.q() == 7);
  }
}

TEST_CASE("southwest closure stops at the hypotenuse") {
  InertiaRegion r(4);
  r.exclude(2, 2);
  const InertiaRegion closed = sw_close(r);
  CHECK(closed.points(PointStatus::kExcluded) == Points{{2, 2}});
  InertiaRegion inner(4);
  inner.exclude(2, 1);
  CHECK(sw_close(inner).points(PointStatus::kExcluded).size() == 8);  // two mirrored 3x2 blocks
}

TEST_CASE("merge") {
  InertiaRegion a(3);
  a.exclude(3, 0);
  InertiaRegion b(3);
  b.certify(1, 1);
  const InertiaRegion m = merge(a, b);
  CHECK(m.excluded(0, 3));
  CHECK(m.certified(1, 1));
  InertiaRegion c(3);
  c.certify(3, 0);
  CHECK_THROWS_AS(merge(a, c), ContradictionError);
  CHECK_THROWS_AS(merge(a, InertiaRegion(4)), ArgumentError);
}

TEST_CASE("Minkowski combination") {
  SUBCASE("two single vertices") {
    const InertiaRegion k1 = single_vertex();
    CHECK(k1.points(PointStatus::kCertified) == Points{{0, 0}, {1, 0}, {0, 1}});
    const InertiaRegion sum = minkowski_certified(k1, k1);
    CHECK(sum.n() == 2);
    CHECK(sum.certified(2, 0));
    CHECK(sum.certified(1, 1));
    CHECK(sum.certified(0, 2));
  }
  SUBCASE("unknown operand certifies nothing") {
    const InertiaRegion sum = minkowski_certified(InertiaRegion(3), single_vertex());
    CHECK(sum.points(PointStatus::kCertified).empty());
  }
  SUBCASE("tree with Z_0, Z_1, Z_2 = 1, 2, 3") {
    const std::vector<Graph> candidates = testing::trees(7);
    const Graph* q_tree = nullptr;
    for (const Graph& t : candidates) {
      if (zq(t, 0).tokens == 1 && zq(t, 1).tokens == 2 && zq(t, 2).tokens == 3) {
        q_tree = &t;
        break;
      }
    }
    REQUIRE(q_tree != nullptr);
    const InertiaRegion one = excluded_from_zq(7, zq_profile(*q_tree));
    const InertiaRegion two = minkowski_certified(one, one);
    CHECK(two.n() == 14);
    CHECK(two.excluded(7, 2));
    CHECK(!two.excluded(8, 2));
  }
  SUBCASE("commutative and associative on certified points") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const InertiaRegion a = random_certified(2, rng);
      const InertiaRegion b = random_certified(3, rng);
      const InertiaRegion c = random_certified(2, rng);
      CHECK(minkowski_certified(a, b) == minkowski_certified(b, a));
      CHECK(minkowski_certified(minkowski_certified(a, b), c) ==
            minkowski_certified(a, minkowski_certified(b, c)));
    }
  }
}

TEST_CASE("grid and CSV round trips") {
  std::vector<InertiaRegion> regions;
  regions.push_back(single_vertex());
  regions.push_back(excluded_from_zq(5, zq_profile(star(4))));
  InertiaRegion mixed = excluded_from_zq(10, zq_profile(barioli_fallat()));
  mixed.certify(4, 4);
  regions.push_back(ne_close(mixed));
  for (const InertiaRegion& r : regions) {
    CHECK(parse_grid(render_grid(r)) == r);
    CHECK(parse_csv(render_csv(r)) == r);
  }
  CHECK(render_grid(single_vertex()) == "O\nOO\n");
  CHECK(render_csv(single_vertex()) ==
        "p,q,status\n0,0,CERTIFIED\n1,0,CERTIFIED\n0,1,CERTIFIED\n");
  CHECK_THROWS_AS(parse_grid("O\nO?\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("p,q,status\n0,0,MAYBE\n"), ParseError);
}

}  // namespace
}  // namespace zqforce
