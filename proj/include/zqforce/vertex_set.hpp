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

#ifndef ZQFORCE_VERTEX_SET_HPP_
#define ZQFORCE_VERTEX_SET_HPP_

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace zqforce {

// Maximum number of vertices of any graph; one bit per vertex in a word.
inline constexpr int kWordCap = 64;

// A subset of {0, ..., kWordCap-1} packed into a single machine word.
class VertexSet {
 public:
  using Word = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  static constexpr VertexSet single(int v) { return VertexSet(Word{1} << v); }
  // {0, ..., n-1}
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }

  constexpr Word word() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  // Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= Word{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(Word{1} << v); }

  // Complement within {0, ..., n-1}.
  constexpr VertexSet complement(int n) const {
    return VertexSet(~bits_ & full(n).bits_);
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  // Members in ascending order.
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  // "{0,3,5}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  Word bits_ = 0;
};

}  // namespace zqforce

#endif  // ZQFORCE_VERTEX_SET_HPP_
