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

#ifndef ZQFORCE_CLI_HPP_
#define ZQFORCE_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace zqforce::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitMismatch = 3;

inline constexpr int kSchemaVersion = 1;

struct GraphInfo {
  std::string label;
  int n = 0;
  std::string graph6;

  bool operator==(const GraphInfo&) const = default;
};

struct ZqEntry {
  int q = 0;
  int value = 0;
  std::optional<int> upfront;
  std::optional<int> oracle;

  bool operator==(const ZqEntry&) const = default;
};

struct ZqReport {
  GraphInfo graph;
  std::string loops;  // empty for the plain game
  std::vector<ZqEntry> values;
  bool oracle_ok = true;
  double elapsed_seconds = 0.0;

  bool operator==(const ZqReport&) const = default;
};

struct ZhatReport {
  GraphInfo graph;
  int q = 0;
  int value = 0;
  std::vector<std::string> witnesses;  // loop strings, 'L'/'U' per vertex
  double elapsed_seconds = 0.0;

  bool operator==(const ZhatReport&) const = default;
};

struct InertiaReport {
  GraphInfo graph;
  std::vector<int> zq;  // indexed by q = 0..n
  int trials = 0;
  unsigned long long seed = 0;
  std::vector<std::vector<int>> excluded;   // [p, q] pairs
  std::vector<std::vector<int>> certified;  // [p, q] pairs
  std::string grid;
  double elapsed_seconds = 0.0;

  bool operator==(const InertiaReport&) const = default;
};

struct CertifyReport {
  std::string source;
  int n = 0;
  int p = 0;
  int q = 0;
  int z = 0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  std::vector<double> eigenvalues;

  bool operator==(const CertifyReport&) const = default;
};

void to_json(nlohmann::json& j, const GraphInfo& r);
void from_json(const nlohmann::json& j, GraphInfo& r);
void to_json(nlohmann::json& j, const ZqEntry& r);
void from_json(const nlohmann::json& j, ZqEntry& r);
void to_json(nlohmann::json& j, const ZqReport& r);
void from_json(const nlohmann::json& j, ZqReport& r);
void to_json(nlohmann::json& j, const ZhatReport& r);
void from_json(const nlohmann::json& j, ZhatReport& r);
void to_json(nlohmann::json& j, const InertiaReport& r);
void from_json(const nlohmann::json& j, InertiaReport& r);
void to_json(nlohmann::json& j, const CertifyReport& r);
void from_json(const nlohmann::json& j, CertifyReport& r);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zqforce::cli

#endif  // ZQFORCE_CLI_HPP_
