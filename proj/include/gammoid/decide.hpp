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

#ifndef GAMMOID_DECIDE_HPP_
#define GAMMOID_DECIDE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammoid/digraph.hpp"

namespace gammoid {

enum class Verdict { kYes, kNo };

// A NO outcome carries one of these, each re-checkable from the inputs alone.
struct Witness {
  enum Kind {
    kNegativeEta,      // candidate flat with eta < 0
    kBoundExceeded,    // sum of values over proper flats exceeds the bound
    kNoTransversal,    // flat multiset has no transversal (Hall witness)
    kRankMismatch,     // r_M(Z0 u Z1) != r_M'(Z0 u Z1)
    kClosureMismatch,  // cl_M(Z0 u Z1) != cl_M'(Z0 u Z1)
  };

  Kind kind;
  ElemSet flat;                   // kNegativeEta
  int eta = 0;                    // kNegativeEta
  int value_sum = 0;              // kBoundExceeded
  int bound = 0;                  // kBoundExceeded
  std::vector<int> hall_witness;  // kNoTransversal (multiset indices)
  ElemSet z0, z1;                 // mismatches
  int rank_lhs = 0, rank_rhs = 0;
  ElemSet closure_lhs, closure_rhs;

  const char* kind_name() const;
};

// Intermediate families of the deletion decision, for debugging and golden
// tests. F, F', F'' live on the original ground set; E and F_M live on the
// reduced ground (element_map[i] is the original index of reduced element i).
struct DeletionTrace {
  FlatFamily family_f;
  FlatFamily family_f_prime;
  FlatFamily family_f_second;
  FlatFamily family_e;  // values are eta
  FlatFamily family_m;  // positive-eta members; values are gamma of M \ e
  std::vector<int> element_map;
};

struct DeletionDecision {
  Verdict verdict = Verdict::kNo;
  // On YES: a maximal representation of M \ e on the reduced ground set.
  std::optional<Digraph> representation;
  std::optional<Witness> witness;
  DeletionTrace trace;

  bool yes() const { return verdict == Verdict::kYes; }
};

// Deduplicated pairwise joins (including self-joins, so the input family is
// contained in the result). Input members must be cyclic flats of m.
FlatFamily family_joins(const Matroid& m, const FlatFamily& family);

// {F - e : F in candidates} filtered to cyclic flats of the deleted matroid.
// Candidates are on the parent ground; the result is on the minor's ground.
FlatFamily family_E(const Minor& deleted, int e, const FlatFamily& candidates);

// Fills eta values bottom-up over the candidate family:
//   eta(Z) = n(Z) - sum of eta(Z') over family members Z' strictly inside Z.
FlatFamily with_eta(const Matroid& m, FlatFamily family_e);

// eta of an arbitrary subset against a prepared candidate family; sets
// containing no family member have eta equal to their nullity.
int eta_of(const Matroid& m, const FlatFamily& family_e_with_eta, ElemSet x);

// Decides whether M(D, V, S) \ e is a strict gammoid, returning a maximal
// representation on YES and a re-checkable witness on NO.
DeletionDecision decide_deletion(const Digraph& d, int e);

class NormalizeError : public std::runtime_error {
 public:
  explicit NormalizeError(const std::string& what)
      : std::runtime_error(what) {}
};

struct NormalizeResult {
  std::optional<SetSystem> system;  // same matroid with exactly rank-many sets
  SetSystem stuck;                  // irreducible oversized presentation

  bool ok() const { return system.has_value(); }
};

// Repeatedly removes a set whose removal changes no subset rank until the
// presentation has exactly rank-many sets. Verification compares full rank
// tables, so the ground size is bounded by the oracle limit.
NormalizeResult normalize_presentation(const SetSystem& system,
                                       OracleLimit limit = {});

// Digraph presenting the dual of the transversal matroid of a normalized
// presentation (set count == rank): a transversal matching chooses source
// vertices, matched vertices point at the rest of their set, unmatched
// vertices are sinks. Throws std::invalid_argument if no transversal exists.
Digraph dual_digraph_of_transversal(const SetSystem& system);

struct ContractionDecision {
  Verdict verdict = Verdict::kNo;
  // On YES: a bipartite presentation of M / e on the reduced ground set.
  std::optional<SetSystem> presentation;
  std::optional<Witness> witness;
  // The underlying deletion run on the dual side; absent in the loop case.
  std::optional<DeletionDecision> dual_trace;
  std::vector<int> element_map;

  bool yes() const { return verdict == Verdict::kYes; }
};

// Decides whether M / e is transversal for the transversal matroid of the
// given presentation, through the dual deletion pipeline.
ContractionDecision decide_contraction(const SetSystem& system, int e,
                                       OracleLimit limit = {});

}  // namespace gammoid

#endif  // GAMMOID_DECIDE_HPP_
