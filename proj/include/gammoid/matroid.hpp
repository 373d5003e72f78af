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

#ifndef GAMMOID_MATROID_HPP_
#define GAMMOID_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "gammoid/set_system.hpp"

namespace gammoid {

// A matroid given by its rank function. Rank queries are memoized per matroid
// value, keyed by bit pattern; copies share the memo table, so passing
// matroids around keeps the cache warm. Externally behaves as a pure function
// and is safe to query from concurrent callers.
//
// Closure and restriction-coloop queries default to rank-query loops; an
// instantiation that can answer them directly (e.g. by flow reachability on a
// digraph) may supply its own routines, which must agree with the defaults.
class Matroid {
 public:
  struct Ops {
    std::function<int(ElemSet)> rank;
    std::function<ElemSet(ElemSet)> closure;              // optional
    std::function<ElemSet(ElemSet)> restriction_coloops;  // optional
  };

  Matroid(int ground_size, std::function<int(ElemSet)> rank_fn);
  Matroid(int ground_size, Ops ops);

  int ground_size() const { return n_; }
  ElemSet ground() const { return ElemSet::full(n_); }

  int rank(ElemSet x) const;
  int rank_full() const { return rank(ground()); }
  int nullity(ElemSet x) const { return x.size() - rank(x); }

  // Elements whose addition does not raise the rank of x (a superset of x).
  ElemSet closure(ElemSet x) const;
  bool is_flat(ElemSet x) const { return closure(x) == x; }

  // L* = {e in x : rank(x - e) < rank(x)}, the coloops of the restriction to x.
  ElemSet restriction_coloops(ElemSet x) const;
  bool is_cyclic(ElemSet x) const { return restriction_coloops(x).empty(); }

  ElemSet loops() const { return closure(ElemSet{}); }

 private:
  struct Memo;

  int n_;
  Ops ops_;
  std::shared_ptr<Memo> memo_;
};

// Transversal matroid of a bipartite presentation: rank(X) is the maximum
// matching size of X against the system.
Matroid transversal_matroid(const SetSystem& system);

// Dual via rank*(X) = rank(E-X) + |X| - rank(E).
Matroid dual_matroid(const Matroid& m);

// A minor with its ground set re-indexed to {0, ..., k-1}. to_parent[i] is the
// parent-ground index of the minor's element i (ascending).
struct Minor {
  Matroid matroid;
  std::vector<int> to_parent;

  ElemSet lift(ElemSet x) const;   // minor indices -> parent indices
  ElemSet lower(ElemSet x) const;  // parent indices (within kept set) -> minor
};

Minor delete_elements(const Matroid& m, ElemSet x);
Minor contract_elements(const Matroid& m, ElemSet x);
Minor restrict_to(const Matroid& m, ElemSet x);

}  // namespace gammoid

#endif  // GAMMOID_MATROID_HPP_
