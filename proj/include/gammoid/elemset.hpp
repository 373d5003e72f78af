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

#ifndef GAMMOID_ELEMSET_HPP_
#define GAMMOID_ELEMSET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace gammoid {

// A subset of a fixed ground set {0, ..., n-1} with n <= 64, stored as a bit
// vector. All set algebra is exact; iteration is in ascending index order.
class ElemSet {
 public:
  static constexpr int kMaxGround = 64;

  constexpr ElemSet() = default;

  static constexpr ElemSet of_bits(std::uint64_t bits) { return ElemSet(bits); }

  static constexpr ElemSet single(int e) {
    return ElemSet(std::uint64_t{1} << e);
  }

  // The full ground set {0, ..., n-1}.
  static constexpr ElemSet full(int n) {
    return ElemSet(n == 0 ? 0 : (~std::uint64_t{0} >> (kMaxGround - n)));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int e) const {
    return (bits_ >> e) & std::uint64_t{1};
  }

  constexpr ElemSet with(int e) const {
    return ElemSet(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElemSet without(int e) const {
    return ElemSet(bits_ & ~(std::uint64_t{1} << e));
  }

  constexpr bool subset_of(ElemSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool proper_subset_of(ElemSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  constexpr ElemSet complement(int ground_size) const {
    return ElemSet(full(ground_size).bits_ & ~bits_);
  }

  // Lowest set index; undefined when empty.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ | b.bits_);
  }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & b.bits_);
  }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) {
    return ElemSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElemSet a, ElemSet b) {
    return a.bits_ == b.bits_;
  }
  friend constexpr bool operator!=(ElemSet a, ElemSet b) {
    return a.bits_ != b.bits_;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  explicit constexpr ElemSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Canonical order on sets: by size, then by bit pattern. Families sorted this
// way make every recursion over "strictly contained" members well-founded.
constexpr bool canon_less(ElemSet a, ElemSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace gammoid

#endif  // GAMMOID_ELEMSET_HPP_
