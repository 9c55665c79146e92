// Copyright 2026 The Authors.
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

#ifndef BASEMOD_ELEMENT_SET_HPP_
#define BASEMOD_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace basemod {

// Maximum ground-set size representable by ElementSet.
inline constexpr int kMaxElements = 64;

// A subset of a ground set {0, ..., n-1}, stored as a bitmask. Elements are
// indices in matroid construction order.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(int e) {
    return ElementSet(std::uint64_t{1} << e);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // Elements in ascending index order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  // Lexicographic order on ascending index lists, so that {0,1} < {0,2} <
  // {1,2}. Used for deterministic ordering of bases.
  friend bool lex_less(ElementSet a, ElementSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    const int first = std::countr_zero(diff);
    // The set holding the smallest differing element sorts first unless the
    // other set is a prefix of it.
    const std::uint64_t a_rest = a.bits_ >> first;
    const std::uint64_t b_rest = b.bits_ >> first;
    if (a.contains(first)) {
      // a has `first`, b does not: b either has a larger element next (then
      // a < b) or has nothing more (b is a prefix, b < a).
      return b_rest != 0;
    }
    return a_rest == 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

bool lex_less(ElementSet a, ElementSet b);

}  // namespace basemod

#endif  // BASEMOD_ELEMENT_SET_HPP_
