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

#ifndef ZQFORCE_GRAPH_IO_HPP_
#define ZQFORCE_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "zqforce/graph.hpp"

namespace zqforce {

// McKay's graph6 encoding. A leading ">>graph6<<" header and trailing
// whitespace are accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// A vertex count followed by whitespace-separated "u v" pairs.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace zqforce

#endif  // ZQFORCE_GRAPH_IO_HPP_
