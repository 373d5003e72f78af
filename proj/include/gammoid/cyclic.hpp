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

#ifndef GAMMOID_CYCLIC_HPP_
#define GAMMOID_CYCLIC_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammoid/matroid.hpp"

namespace gammoid {

struct CyclicFlat {
  ElemSet set;
  int rank = 0;
};

// One record of a flat family: a set with its rank and an optional attached
// value (gamma for Z(M)-style families, eta for candidate families).
struct FlatRecord {
  ElemSet set;
  int rank = 0;
  std::optional<int> value;
};

// An ordered list of flat records over a common ground set, kept in canonical
// (size, bit pattern) order. Sets are pairwise distinct.
struct FlatFamily {
  int ground_size = 0;
  std::vector<FlatRecord> flats;

  int size() const { return static_cast<int>(flats.size()); }
  bool contains(ElemSet s) const;
  std::optional<int> value_of(ElemSet s) const;
  void sort_canonical();
};

// Thrown when an exhaustive enumeration would exceed the configured bound.
class OracleLimitError : public std::runtime_error {
 public:
  explicit OracleLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a flat family offered as cyclic-flat data violates Z1..Z4.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleLimit {
  int max_n = 20;

  void check(int n, const char* where) const;
};

// All cyclic flats of m with their ranks, including the loop set (possibly
// empty), by exhaustive enumeration over subsets. Canonically sorted.
FlatFamily enumerate_cyclic_flats(const Matroid& m, OracleLimit limit = {});

// X minus the coloops of the restriction to X: the unique maximal cyclic set
// inside X. Preserves nullity; yields a cyclic flat whenever X is a flat.
ElemSet max_cyclic_subset(const Matroid& m, ElemSet x);

// Lattice operations on cyclic flats: join is the closure of the union, meet
// is the maximal cyclic subset of the intersection.
CyclicFlat lattice_join(const Matroid& m, ElemSet z0, ElemSet z1);
CyclicFlat lattice_meet(const Matroid& m, ElemSet z0, ElemSet z1);

struct AxiomViolation {
  enum Axiom { kZ1, kZ2, kZ3, kZ4 };
  Axiom axiom;
  ElemSet x;
  ElemSet y;
  std::string detail;

  const char* axiom_name() const;
};

// Checks the cyclic-flat axioms on a (set, rank) family:
//   Z1  the family is a lattice under inclusion,
//   Z2  the minimum has rank 0,
//   Z3  0 < r(Y)-r(X) < |Y-X| for members X strictly inside Y,
//   Z4  r(X)+r(Y) >= r(X v Y) + r(X ^ Y) + |(X n Y) - (X ^ Y)|.
// Returns the first violation in scan order, or nullopt when all hold.
std::optional<AxiomViolation> validate_axioms(const FlatFamily& family);

// Matroid whose cyclic flats are exactly `family`, via
// r(X) = min(|X|, min over members Z of r(Z) + |X-Z|).
// Requires validate_axioms to pass; throws AxiomError otherwise.
Matroid matroid_from_cyclic_flats(const FlatFamily& family);

// Z(M) with gamma values attached:
//   gamma(X) = n(X) - sum of gamma(Z) over cyclic flats Z strictly inside X,
// evaluated bottom-up in canonical order.
FlatFamily gamma_family(const Matroid& m, OracleLimit limit = {});

// Z(M) with beta values attached:
//   beta(X) = r(M) - r(X) - sum of beta(Z) over cyclic flats Z strictly
//   containing X, evaluated top-down.
FlatFamily beta_family(const Matroid& m, OracleLimit limit = {});

// gamma/beta of an arbitrary subset given a prepared family for the same
// matroid (as returned by gamma_family/beta_family).
int gamma_of(const Matroid& m, const FlatFamily& gamma_flats, ElemSet x);
int beta_of(const Matroid& m, const FlatFamily& beta_flats, ElemSet x);

// Cyclic flats with positive gamma, values attached.
FlatFamily positive_gamma_flats(const Matroid& m, OracleLimit limit = {});

struct SweepResult {
  bool ok = false;
  // Minimal-cardinality (then lowest bit pattern) negative witness.
  std::optional<ElemSet> witness;
  std::optional<int> witness_value;
};

// Decides "is a strict gammoid" (gamma >= 0 on every subset) by exhaustive
// sweep. The default sweeps all 2^n subsets; `pruned` restricts the sweep to
// cyclic sets, which is equivalent but shares reasoning with the code under
// test, so it is off by default.
SweepResult strict_gammoid_sweep(const Matroid& m, OracleLimit limit = {},
                                 bool pruned = false);

// Decides "is transversal" (beta >= 0 on every subset) by exhaustive sweep.
SweepResult transversal_sweep(const Matroid& m, OracleLimit limit = {});

// gamma_{M+\e}(X-e) - gamma_{M+}(X), the single-element deletion discrepancy.
int delta_gamma(const Matroid& mplus, int e, ElemSet x, OracleLimit limit = {});

// Family members contained in at least one target.
FlatFamily downset(const FlatFamily& family, std::span<const ElemSet> targets);

}  // namespace gammoid

#endif  // GAMMOID_CYCLIC_HPP_
