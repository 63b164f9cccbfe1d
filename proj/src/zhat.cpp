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

#include "zqforce/zhat.hpp"

#include <algorithm>
#include <string>

#include "zqforce/errors.hpp"
#include "zqforce/parallel.hpp"

namespace zqforce {

std::vector<int> zhat_values(const Graph& g, int q, const ZhatOptions& opts) {
  if (g.n() > kZhatSoftLimit && !opts.force) {
    throw CapacityError("loop enumeration over 2^" + std::to_string(g.n()) +
                        " assignments exceeds the limit of " +
                        std::to_string(kZhatSoftLimit) + " vertices; use force");
  }
  if (g.n() > kMaxTableVertices) {
    throw CapacityError("loop enumeration limited to " + std::to_string(kMaxTableVertices) +
                        " vertices");
  }
  const std::size_t count = std::size_t{1} << g.n();
  std::vector<int> values(count, 0);
  parallel_for(count, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t packed = begin; packed < end; ++packed) {
      values[packed] = zq_looped(g, LoopAssignment::from_packed(g.n(), packed), q).tokens;
    }
  });
  return values;
}

int zhat_q(const Graph& g, int q, const ZhatOptions& opts) {
  const std::vector<int> values = zhat_values(g, q, opts);
  return *std::max_element(values.begin(), values.end());
}

std::vector<LoopAssignment> zhat_witness(const Graph& g, int q, const ZhatOptions& opts) {
  const std::vector<int> values = zhat_values(g, q, opts);
  const int best = *std::max_element(values.begin(), values.end());
  std::vector<LoopAssignment> out;
  for (std::size_t packed = 0; packed < values.size(); ++packed) {
    if (values[packed] == best) out.push_back(LoopAssignment::from_packed(g.n(), packed));
  }
  return out;
}

}  // namespace zqforce
