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

#include "gammoid/set_system.hpp"

#include <algorithm>

namespace gammoid {

namespace {

// Kuhn-style augmenting search from element `e`: scan sets in ascending index
// order, rematching previously matched elements recursively.
bool augment(const SetSystem& system, int e, std::vector<char>& visited,
             std::vector<int>& element_of_set, std::vector<int>& set_of_element) {
  for (int j = 0; j < system.set_count(); ++j) {
    if (visited[j] || !system.sets[j].contains(e)) continue;
    visited[j] = 1;
    if (element_of_set[j] < 0 ||
        augment(system, element_of_set[j], visited, element_of_set,
                set_of_element)) {
      element_of_set[j] = e;
      set_of_element[e] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_matching(const SetSystem& system, ElemSet restrict_to) {
  const int k = system.set_count();
  std::vector<int> element_of_set(static_cast<std::size_t>(k), -1);
  std::vector<int> set_of_element(ElemSet::kMaxGround, -1);
  std::vector<char> visited;

  for (int e : restrict_to.elements()) {
    // Take the lowest-index free compatible set before trying to augment, so
    // earlier elements keep their lowest-index assignments.
    bool placed = false;
    for (int j = 0; j < k; ++j) {
      if (element_of_set[j] < 0 && system.sets[j].contains(e)) {
        element_of_set[j] = e;
        set_of_element[e] = j;
        placed = true;
        break;
      }
    }
    if (!placed) {
      visited.assign(static_cast<std::size_t>(k), 0);
      augment(system, e, visited, element_of_set, set_of_element);
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < ElemSet::kMaxGround; ++e) {
    if (set_of_element[e] >= 0) pairs.emplace_back(e, set_of_element[e]);
  }
  return Matching(std::move(pairs));
}

namespace {

bool violates(const SetSystem& system, const std::vector<int>& k_indices) {
  ElemSet un;
  for (int j : k_indices) un = un | system.sets[static_cast<std::size_t>(j)];
  return un.size() < static_cast<int>(k_indices.size());
}

// Shrink a violating collection to an inclusion-minimal one. Removal can
// enable further removals, so iterate to a fixpoint.
std::vector<int> minimize_witness(const SetSystem& system,
                                  std::vector<int> k_indices) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < k_indices.size(); ++i) {
      std::vector<int> smaller = k_indices;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (violates(system, smaller)) {
        k_indices = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return k_indices;
}

}  // namespace

HallResult hall_check(const SetSystem& system) {
  const int k = system.set_count();
  Matching m = max_matching(system, ElemSet::full(system.ground_size));
  if (m.size() == k) return HallResult{};

  std::vector<char> in_matching(static_cast<std::size_t>(k), 0);
  std::vector<int> set_of_element(ElemSet::kMaxGround, -1);
  for (const auto& [e, j] : m.pairs()) {
    in_matching[static_cast<std::size_t>(j)] = 1;
    set_of_element[e] = j;
  }

  int j0 = -1;
  for (int j = 0; j < k; ++j) {
    if (!in_matching[static_cast<std::size_t>(j)]) {
      j0 = j;
      break;
    }
  }

  // Alternating reachability from the unmatched set: set -> its elements ->
  // their matched sets. The reachable collection violates Hall.
  std::vector<char> reach(static_cast<std::size_t>(k), 0);
  std::vector<int> queue = {j0};
  reach[static_cast<std::size_t>(j0)] = 1;
  while (!queue.empty()) {
    int j = queue.back();
    queue.pop_back();
    for (int e : system.sets[static_cast<std::size_t>(j)].elements()) {
      int jm = set_of_element[e];
      if (jm >= 0 && !reach[static_cast<std::size_t>(jm)]) {
        reach[static_cast<std::size_t>(jm)] = 1;
        queue.push_back(jm);
      }
    }
  }

  std::vector<int> witness;
  for (int j = 0; j < k; ++j) {
    if (reach[static_cast<std::size_t>(j)]) witness.push_back(j);
  }
  return HallResult{minimize_witness(system, std::move(witness))};
}

TransversalResult transversal_of(const SetSystem& system) {
  Matching m = max_matching(system, ElemSet::full(system.ground_size));
  if (m.size() == system.set_count()) {
    return TransversalResult{std::move(m), {}};
  }
  HallResult hall = hall_check(system);
  return TransversalResult{std::nullopt, *hall.violating};
}

}  // namespace gammoid
