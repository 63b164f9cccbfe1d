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

#ifndef ZQFORCE_BUILDERS_HPP_
#define ZQFORCE_BUILDERS_HPP_

#include <string_view>
#include <vector>

#include "zqforce/graph.hpp"

namespace zqforce {

Graph path(int n);
// K_{1,p}; vertex 0 is the center.
Graph star(int p);
Graph complete(int n);
Graph empty_graph(int n);
Graph cycle(int n);
// Parts are labeled consecutively in the order given.
Graph complete_multipartite(const std::vector<int>& parts);

// Outer cycle u_i = i, inner vertices v_i = m + i with v_i ~ v_{i+k mod m},
// spokes u_i ~ v_i. Requires m >= 3 and 1 <= k < m/2.
// generalized_petersen(10, 3) is the Desargues graph.
Graph generalized_petersen(int m, int k);

// The 10-vertex Barioli-Fallat tree: center 0 ~ {1, 4, 7}; 1 ~ {2, 3};
// 4 ~ {5, 6}; 7 ~ {8, 9}.
Graph barioli_fallat();

// Builder mini-grammar NAME[:a,b,...], e.g. "petersen:10,3", "star:4",
// "multipartite:3,3", "barioli_fallat". Throws ArgumentError.
Graph build_named(std::string_view spec);

}  // namespace zqforce

#endif  // ZQFORCE_BUILDERS_HPP_
