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

#ifndef ZQFORCE_ERRORS_HPP_
#define ZQFORCE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zqforce {

// Malformed graph or matrix text. `offset` is the byte position of the
// offending input, or npos when no single position applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset = npos)
      : std::runtime_error(offset == npos
                               ? what
                               : what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Input exceeds a documented size limit (word capacity, enumeration limits).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters to a builder or operation.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A grid point that is both excluded and certified.
class ContradictionError : public std::runtime_error {
 public:
  ContradictionError(int p, int q)
      : std::runtime_error("inertia point (" + std::to_string(p) + "," +
                           std::to_string(q) +
                           ") is both excluded and certified"),
        p_(p),
        q_(q) {}

  int p() const { return p_; }
  int q() const { return q_; }

 private:
  int p_;
  int q_;
};

class InsufficientTokensError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zqforce

#endif  // ZQFORCE_ERRORS_HPP_
