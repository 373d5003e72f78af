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

// Shared test fixtures, a deterministic RNG, and brute-force oracles that are
// independent of the library code paths they check.

#ifndef GAMMOID_TESTS_SUPPORT_HPP_
#define GAMMOID_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "gammoid/decide.hpp"

namespace gammoid::testing {

// SplitMix64: tiny, stable across platforms, good enough for corpus sampling.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool chance(int percent) { return below(100) < percent; }
};

// --- fixtures ---------------------------------------------------------------

// Digraph presenting U_{2,4}: arcs 0 -> {1,2,3}, 1 -> {0,2,3}, sinks {2,3}.
inline Digraph u24_digraph() {
  Digraph d = Digraph::empty(4, ElemSet::single(2).with(3));
  for (int v : {1, 2, 3}) d.add_arc(0, v);
  for (int v : {0, 2, 3}) d.add_arc(1, v);
  return d;
}

// Bipartite presentation {E, E} of U_{2,4}.
inline SetSystem u24_system() {
  return SetSystem{4, {ElemSet::full(4), ElemSet::full(4)}};
}

inline Matroid uniform_matroid(int rank, int n) {
  return Matroid(n, [rank](ElemSet x) { return std::min(x.size(), rank); });
}

// U_{1,2} on {0,1} plus a coloop 2.
inline Matroid u12_plus_coloop() {
  return Matroid(3, [](ElemSet x) {
    int r = std::min((x & ElemSet::full(2)).size(), 1);
    return r + (x.contains(2) ? 1 : 0);
  });
}

// Edges of K4 on vertices {a,b,c,d}: 0=ab 1=ac 2=ad 3=bc 4=bd 5=cd.
inline const std::vector<std::pair<int, int>>& k4_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return edges;
}

// Graphic rank of an edge subset of K4 via union-find: 4 - #components.
inline int k4_graphic_rank(ElemSet edge_set) {
  int parent[4] = {0, 1, 2, 3};
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int rank = 0;
  for (int e : edge_set.elements()) {
    auto [u, v] = k4_edges()[static_cast<std::size_t>(e)];
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      ++rank;
    }
  }
  return rank;
}

inline Matroid mk4_graphic_matroid() {
  return Matroid(6, [](ElemSet x) { return k4_graphic_rank(x); });
}

// The cyclic-flat family of M(K4): empty set, four triangles, full set.
inline FlatFamily mk4_flat_family() {
  FlatFamily family{6, {}};
  family.flats.push_back(FlatRecord{ElemSet{}, 0, std::nullopt});
  auto triangle = [](int a, int b, int c) {
    return ElemSet::single(a).with(b).with(c);
  };
  for (ElemSet t : {triangle(0, 1, 3), triangle(0, 2, 4), triangle(1, 2, 5),
                    triangle(3, 4, 5)}) {
    family.flats.push_back(FlatRecord{t, 2, std::nullopt});
  }
  family.flats.push_back(FlatRecord{ElemSet::full(6), 3, std::nullopt});
  family.sort_canonical();
  return family;
}

// Digraph with a loop vertex: arcs {0 -> 1}, sinks {1}, vertex 2 isolated.
inline Digraph loop_digraph() {
  Digraph d = Digraph::empty(3, ElemSet::single(1));
  d.add_arc(0, 1);
  return d;
}

// arcs {0 -> 1}, sinks {1}: presents U_{1,2}.
inline Digraph arrow_digraph() {
  Digraph d = Digraph::empty(2, ElemSet::single(1));
  d.add_arc(0, 1);
  return d;
}

// Strict gammoid on 7 vertices whose deletion of vertex 0 is NOT a strict
// gammoid: three 2-point lines {0,1,2}, {0,3,4}, {0,5,6} through the shared
// point 0, rank 4. Removing 0 leaves three 4-circuits pairwise spanning, and
// the full set ends up with gamma -1.
inline Digraph three_lines_digraph() {
  Digraph d =
      Digraph::empty(7, ElemSet::single(2).with(4).with(5).with(6));
  d.add_arc(0, 5);
  d.add_arc(0, 6);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  d.add_arc(3, 0);
  d.add_arc(3, 4);
  return d;
}

// The dual transversal presentation of three_lines_digraph (its neighbourhood
// multiset); contracting element 0 of this transversal matroid is the NO
// instance on the bipartite side.
inline SetSystem three_lines_dual_system() {
  return neighbourhood_multiset(three_lines_digraph());
}

// Strict gammoid on 7 vertices: two 3-circuits {0,1,2} and {0,3,4} sharing
// vertex 0, plus a disjoint 2-circuit {5,6}. Deleting 0 raises the gamma of
// {1,2,3,4}, so this is the rare positive-discrepancy configuration.
inline Digraph shared_point_digraph() {
  Digraph d =
      Digraph::empty(7, ElemSet::single(0).with(2).with(4).with(6));
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  d.add_arc(3, 0);
  d.add_arc(3, 4);
  d.add_arc(5, 6);
  return d;
}

// --- random corpus -----------------------------------------------------------

inline Digraph random_digraph(Rng& rng, int n) {
  int arc_percent = 10 + rng.below(50);
  int sink_percent = 20 + rng.below(50);
  Digraph d = Digraph::empty(n, ElemSet{});
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng.chance(arc_percent)) d.add_arc(u, v);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (rng.chance(sink_percent)) d.sinks = d.sinks.with(v);
  }
  return d;
}

inline SetSystem random_system(Rng& rng, int n) {
  int set_count = 1 + rng.below(n);
  int member_percent = 20 + rng.below(60);
  SetSystem system{n, {}};
  for (int j = 0; j < set_count; ++j) {
    ElemSet s;
    for (int e = 0; e < n; ++e) {
      if (rng.chance(member_percent)) s = s.with(e);
    }
    system.sets.push_back(s);
  }
  return system;
}

// Precomputed gamma tables for a matroid and its single-element deletion,
// for checking the deletion-discrepancy identities.
struct DeltaContext {
  Matroid mplus;
  int e;
  Minor deleted;
  FlatFamily gamma_plus;
  FlatFamily gamma_del;

  static DeltaContext make(Matroid m, int element) {
    Minor del = delete_elements(m, ElemSet::single(element));
    FlatFamily gp = gamma_family(m);
    FlatFamily gd = gamma_family(del.matroid);
    return DeltaContext{std::move(m), element, std::move(del), std::move(gp),
                        std::move(gd)};
  }

  // gamma_{M+\e}(X - e) - gamma_{M+}(X), X in parent labels.
  int delta(ElemSet x) const {
    int gd = gamma_of(deleted.matroid, gamma_del, deleted.lower(x.without(e)));
    int gp = gamma_of(mplus, gamma_plus, x);
    return gd - gp;
  }

  // Cyclic flats of M+ contained in x, excluding x itself.
  std::vector<ElemSet> down_strict(ElemSet x) const {
    std::vector<ElemSet> out;
    for (const FlatRecord& rec : gamma_plus.flats) {
      if (rec.set.subset_of(x) && rec.set != x) out.push_back(rec.set);
    }
    return out;
  }
};

// --- independent oracles ------------------------------------------------------

// Maximum matching size by brute-force injection enumeration over sets.
inline int brute_matching_size(const SetSystem& system, ElemSet restrict_to) {
  std::function<int(int, ElemSet)> go = [&](int j, ElemSet used) {
    if (j == system.set_count()) return 0;
    int best = go(j + 1, used);
    ElemSet candidates =
        (system.sets[static_cast<std::size_t>(j)] & restrict_to) - used;
    for (int e : candidates.elements()) {
      best = std::max(best, 1 + go(j + 1, used.with(e)));
    }
    return best;
  };
  return go(0, ElemSet{});
}

// Dual rank from first principles: r*(X) = max |I| over I inside X whose
// complement still spans M.
inline int brute_dual_rank(const Matroid& m, ElemSet x) {
  const int n = m.ground_size();
  const int r = m.rank_full();
  int best = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    ElemSet i = ElemSet::of_bits(bits);
    if (!i.subset_of(x)) continue;
    if (m.rank(i.complement(n)) == r) best = std::max(best, i.size());
  }
  return best;
}

inline bool same_matroid(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) return false;
  const std::uint64_t end = std::uint64_t{1} << a.ground_size();
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    if (a.rank(ElemSet::of_bits(bits)) != b.rank(ElemSet::of_bits(bits))) {
      return false;
    }
  }
  return true;
}

}  // namespace gammoid::testing

#endif  // GAMMOID_TESTS_SUPPORT_HPP_
