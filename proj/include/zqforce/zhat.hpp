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

#ifndef ZQFORCE_ZHAT_HPP_
#define ZQFORCE_ZHAT_HPP_

#include <vector>

#include "zqforce/game.hpp"
#include "zqforce/graph.hpp"

namespace zqforce {

// Above this order the loop-assignment enumeration refuses without `force`.
inline constexpr int kZhatSoftLimit = 16;

struct ZhatOptions {
  int threads = 1;
  bool force = false;
};

// zq_looped(g, l, q) for every full loop assignment l, indexed by its packed
// encoding (bit v set = vertex v looped).
std::vector<int> zhat_values(const Graph& g, int q, const ZhatOptions& opts = {});

// Maximum of Z_q over all full loop assignments.
int zhat_q(const Graph& g, int q, const ZhatOptions& opts = {});

// Every full loop assignment attaining zhat_q, in ascending packed order.
std::vector<LoopAssignment> zhat_witness(const Graph& g, int q, const ZhatOptions& opts = {});

}  // namespace zqforce

#endif  // ZQFORCE_ZHAT_HPP_
