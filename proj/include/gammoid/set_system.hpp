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

#ifndef GAMMOID_SET_SYSTEM_HPP_
#define GAMMOID_SET_SYSTEM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "gammoid/elemset.hpp"

namespace gammoid {

// An ordered multiset of subsets of {0, ..., ground_size-1}. Duplicates are
// allowed; the set index j is significant and stable.
struct SetSystem {
  int ground_size = 0;
  std::vector<ElemSet> sets;

  int set_count() const { return static_cast<int>(sets.size()); }
};

// A partial injection from elements to set indices. Every matched element
// belongs to its matched set, and matched set indices are pairwise distinct.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::pair<int, int>> pairs)
      : pairs_(std::move(pairs)) {}

  // (element, set index) pairs in ascending element order.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }

  std::optional<int> set_of(int element) const {
    for (const auto& [e, j] : pairs_) {
      if (e == element) return j;
    }
    return std::nullopt;
  }
  std::optional<int> element_of(int set_index) const {
    for (const auto& [e, j] : pairs_) {
      if (j == set_index) return e;
    }
    return std::nullopt;
  }

  ElemSet matched_elements() const {
    ElemSet out;
    for (const auto& [e, j] : pairs_) out = out.with(e);
    return out;
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Maximum-cardinality matching between the elements of `restrict_to` and the
// sets of `system`. Deterministic: elements are processed in ascending index
// order, each element first takes the lowest-index free compatible set, and
// augmenting searches scan sets in ascending index order.
Matching max_matching(const SetSystem& system, ElemSet restrict_to);

struct HallResult {
  // Empty when the system satisfies Hall's condition; otherwise one
  // inclusion-minimal violating collection K of set indices.
  std::optional<std::vector<int>> violating;

  bool ok() const { return !violating.has_value(); }
};

// Checks |union of A_j over j in K| >= |K| for every K. Violations are
// witnessed by an inclusion-minimal K.
HallResult hall_check(const SetSystem& system);

struct TransversalResult {
  std::optional<Matching> matching;   // saturates every set when present
  std::vector<int> hall_witness;      // inclusion-minimal violating K on failure

  bool ok() const { return matching.has_value(); }
};

// A matching that saturates every set of the system, or the Hall witness.
TransversalResult transversal_of(const SetSystem& system);

}  // namespace gammoid

#endif  // GAMMOID_SET_SYSTEM_HPP_
