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

#ifndef GAMMOID_DIGRAPH_HPP_
#define GAMMOID_DIGRAPH_HPP_

#include <utility>
#include <vector>

#include "gammoid/cyclic.hpp"
#include "gammoid/matroid.hpp"

namespace gammoid {

// A digraph on vertices {0, ..., n-1} with a sink set, presenting the strict
// gammoid M(D, V(D), S). No self-arcs; a vertex is in its own closed forward
// neighbourhood by definition, not by arc.
struct Digraph {
  int n = 0;
  ElemSet sinks;
  std::vector<ElemSet> out;  // out[v] never contains v

  static Digraph empty(int n, ElemSet sinks) {
    return Digraph{n, sinks, std::vector<ElemSet>(static_cast<std::size_t>(n))};
  }

  ElemSet forward(int v) const { return out[static_cast<std::size_t>(v)]; }
  ElemSet closed_forward(int v) const { return forward(v).with(v); }

  bool has_arc(int u, int v) const { return forward(u).contains(v); }
  void add_arc(int u, int v) {
    out[static_cast<std::size_t>(u)] = forward(u).with(v);
  }

  int arc_count() const;
  // All arcs in ascending (u, v) order.
  std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) = default;
};

struct Linking {
  int rank = 0;
  // Pairwise vertex-disjoint directed paths, one per linked element; a path
  // may be a single vertex when it lies in both X and S. Ordered by start
  // vertex ascending.
  std::vector<std::vector<int>> paths;
};

// Maximum number of vertex-disjoint paths from x into the sinks, with a
// witnessing path set. Computed as unit-vertex-capacity flow over the split
// digraph; augmenting searches scan vertices in ascending order, so the
// certificate is deterministic.
Linking linking_rank(const Digraph& d, ElemSet x);

// Rank only, without extracting the certificate.
int linking_rank_value(const Digraph& d, ElemSet x);

// The strict gammoid M(D, V(D), S) as a rank oracle.
Matroid strict_gammoid(const Digraph& d);

// The gammoid M(D, E, S) for a ground subset, re-indexed to {0, ..., |E|-1}.
Minor gammoid_on(const Digraph& d, ElemSet ground_subset);

// Removes a vertex and all incident arcs; remaining vertices re-indexed
// order-preservingly. This presents M(D, V, S) \ e only when no linking needs
// e as an interior vertex (e.g. e is a loop, or an isolated sink).
Digraph drop_vertex(const Digraph& d, int e);

// The unique maximal representation reachable from d: every non-sink vertex's
// closed forward neighbourhood becomes its closure in M(D, V, S), and arcs out
// of sinks are removed. The matroid is unchanged; an idempotence pass
// re-verifies that no further arc is addable.
Digraph maximalize(const Digraph& d);

// Groups equal closed forward neighbourhoods over non-sink vertices of a
// maximal representation: each distinct neighbourhood is a cyclic flat with
// value = multiplicity, which equals its gamma value. Caller maximalizes
// first.
FlatFamily read_flats(const Digraph& d_max);

struct ConstructResult {
  enum Status { kOk, kNoTransversal, kBoundExceeded };
  Status status = kOk;
  std::optional<Digraph> digraph;
  std::vector<int> hall_witness;  // multiset indices, on kNoTransversal
  int value_sum = 0;              // on kBoundExceeded

  bool ok() const { return status == kOk; }
};

// Builds a digraph whose closed forward neighbourhoods realize each family
// member with its attached multiplicity: the multiset gets value(X) copies of
// each flat X (canonical order, copies contiguous), a transversal matching
// assigns source vertices, matched vertices point at the rest of their set,
// and unmatched vertices form the sinks. Values must be >= 1.
ConstructResult construct_from_flats(const FlatFamily& family, int n);

// The multiset of closed forward neighbourhoods over non-sink vertices in
// ascending vertex order; presents the dual of M(D, V(D), S).
SetSystem neighbourhood_multiset(const Digraph& d);

}  // namespace gammoid

#endif  // GAMMOID_DIGRAPH_HPP_
