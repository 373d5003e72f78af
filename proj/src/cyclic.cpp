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

#include "gammoid/cyclic.hpp"

#include <algorithm>
#include <utility>

namespace gammoid {

bool FlatFamily::contains(ElemSet s) const {
  for (const FlatRecord& rec : flats) {
    if (rec.set == s) return true;
  }
  return false;
}

std::optional<int> FlatFamily::value_of(ElemSet s) const {
  for (const FlatRecord& rec : flats) {
    if (rec.set == s) return rec.value;
  }
  return std::nullopt;
}

void FlatFamily::sort_canonical() {
  std::sort(flats.begin(), flats.end(),
            [](const FlatRecord& a, const FlatRecord& b) {
              return canon_less(a.set, b.set);
            });
}

void OracleLimit::check(int n, const char* where) const {
  if (n > max_n) {
    throw OracleLimitError(std::string(where) + ": ground size " +
                           std::to_string(n) + " exceeds the oracle limit " +
                           std::to_string(max_n));
  }
}

FlatFamily enumerate_cyclic_flats(const Matroid& m, OracleLimit limit) {
  const int n = m.ground_size();
  limit.check(n, "enumerate_cyclic_flats");
  FlatFamily family{n, {}};
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    ElemSet x = ElemSet::of_bits(bits);
    if (m.is_flat(x) && m.is_cyclic(x)) {
      family.flats.push_back(FlatRecord{x, m.rank(x), std::nullopt});
    }
  }
  family.sort_canonical();
  return family;
}

ElemSet max_cyclic_subset(const Matroid& m, ElemSet x) {
  return x - m.restriction_coloops(x);
}

CyclicFlat lattice_join(const Matroid& m, ElemSet z0, ElemSet z1) {
  ElemSet j = m.closure(z0 | z1);
  return CyclicFlat{j, m.rank(j)};
}

CyclicFlat lattice_meet(const Matroid& m, ElemSet z0, ElemSet z1) {
  ElemSet meet = max_cyclic_subset(m, z0 & z1);
  return CyclicFlat{meet, m.rank(meet)};
}

const char* AxiomViolation::axiom_name() const {
  switch (axiom) {
    case kZ1: return "Z1";
    case kZ2: return "Z2";
    case kZ3: return "Z3";
    case kZ4: return "Z4";
  }
  return "?";
}

namespace {

// Least upper bound of (a, b) within the family, by inclusion; -1 if none.
int family_lub(const FlatFamily& family, ElemSet a, ElemSet b) {
  int best = -1;
  for (int i = 0; i < family.size(); ++i) {
    ElemSet s = family.flats[static_cast<std::size_t>(i)].set;
    if (!a.subset_of(s) || !b.subset_of(s)) continue;
    if (best < 0 ||
        s.proper_subset_of(family.flats[static_cast<std::size_t>(best)].set)) {
      best = i;
    }
  }
  if (best < 0) return -1;
  // The candidate must be below every upper bound, not just minimal.
  ElemSet cand = family.flats[static_cast<std::size_t>(best)].set;
  for (const FlatRecord& rec : family.flats) {
    if (a.subset_of(rec.set) && b.subset_of(rec.set) &&
        !cand.subset_of(rec.set)) {
      return -1;
    }
  }
  return best;
}

int family_glb(const FlatFamily& family, ElemSet a, ElemSet b) {
  int best = -1;
  for (int i = 0; i < family.size(); ++i) {
    ElemSet s = family.flats[static_cast<std::size_t>(i)].set;
    if (!s.subset_of(a) || !s.subset_of(b)) continue;
    if (best < 0 ||
        family.flats[static_cast<std::size_t>(best)].set.proper_subset_of(s)) {
      best = i;
    }
  }
  if (best < 0) return -1;
  ElemSet cand = family.flats[static_cast<std::size_t>(best)].set;
  for (const FlatRecord& rec : family.flats) {
    if (rec.set.subset_of(a) && rec.set.subset_of(b) &&
        !rec.set.subset_of(cand)) {
      return -1;
    }
  }
  return best;
}

}  // namespace

std::optional<AxiomViolation> validate_axioms(const FlatFamily& family) {
  const int k = family.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (family.flats[static_cast<std::size_t>(i)].set ==
          family.flats[static_cast<std::size_t>(j)].set) {
        return AxiomViolation{AxiomViolation::kZ1,
                              family.flats[static_cast<std::size_t>(i)].set,
                              family.flats[static_cast<std::size_t>(j)].set,
                              "duplicate sets in family"};
      }
    }
  }
  if (k == 0) {
    return AxiomViolation{AxiomViolation::kZ2, ElemSet{}, ElemSet{},
                          "family is empty, no minimum element"};
  }

  // Z1: every pair has a join and a meet inside the family.
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      ElemSet a = family.flats[static_cast<std::size_t>(i)].set;
      ElemSet b = family.flats[static_cast<std::size_t>(j)].set;
      if (family_lub(family, a, b) < 0) {
        return AxiomViolation{AxiomViolation::kZ1, a, b,
                              "pair has no least upper bound in the family"};
      }
      if (family_glb(family, a, b) < 0) {
        return AxiomViolation{AxiomViolation::kZ1, a, b,
                              "pair has no greatest lower bound in the family"};
      }
    }
  }

  // Z2: the lattice minimum has rank zero. With Z1 established the minimum is
  // the fold of pairwise meets, i.e. the unique member below all others.
  int bottom = 0;
  for (int i = 1; i < k; ++i) {
    bottom = family_glb(family, family.flats[static_cast<std::size_t>(bottom)].set,
                        family.flats[static_cast<std::size_t>(i)].set);
  }
  if (family.flats[static_cast<std::size_t>(bottom)].rank != 0) {
    return AxiomViolation{
        AxiomViolation::kZ2, family.flats[static_cast<std::size_t>(bottom)].set,
        ElemSet{}, "minimum element has nonzero rank"};
  }

  // Z3: proper containment forces 0 < rank gap < size gap.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const FlatRecord& x = family.flats[static_cast<std::size_t>(i)];
      const FlatRecord& y = family.flats[static_cast<std::size_t>(j)];
      if (!x.set.proper_subset_of(y.set)) continue;
      int rank_gap = y.rank - x.rank;
      int size_gap = (y.set - x.set).size();
      if (!(0 < rank_gap && rank_gap < size_gap)) {
        return AxiomViolation{AxiomViolation::kZ3, x.set, y.set,
                              "rank gap " + std::to_string(rank_gap) +
                                  " not strictly between 0 and " +
                                  std::to_string(size_gap)};
      }
    }
  }

  // Z4: submodularity with the intersection correction term.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const FlatRecord& x = family.flats[static_cast<std::size_t>(i)];
      const FlatRecord& y = family.flats[static_cast<std::size_t>(j)];
      const FlatRecord& join =
          family.flats[static_cast<std::size_t>(family_lub(family, x.set, y.set))];
      const FlatRecord& meet =
          family.flats[static_cast<std::size_t>(family_glb(family, x.set, y.set))];
      int lhs = x.rank + y.rank;
      int rhs = join.rank + meet.rank + ((x.set & y.set) - meet.set).size();
      if (lhs < rhs) {
        return AxiomViolation{AxiomViolation::kZ4, x.set, y.set,
                              "r(X)+r(Y) = " + std::to_string(lhs) + " < " +
                                  std::to_string(rhs)};
      }
    }
  }
  return std::nullopt;
}

Matroid matroid_from_cyclic_flats(const FlatFamily& family) {
  if (auto violation = validate_axioms(family)) {
    throw AxiomError(
        std::string("cyclic-flat family violates ") + violation->axiom_name() +
        " at " + violation->x.to_string() + ", " + violation->y.to_string() +
        ": " + violation->detail);
  }
  return Matroid(family.ground_size, [family](ElemSet x) {
    int r = x.size();
    for (const FlatRecord& rec : family.flats) {
      r = std::min(r, rec.rank + (x - rec.set).size());
    }
    return r;
  });
}

FlatFamily gamma_family(const Matroid& m, OracleLimit limit) {
  FlatFamily family = enumerate_cyclic_flats(m, limit);
  for (std::size_t i = 0; i < family.flats.size(); ++i) {
    FlatRecord& rec = family.flats[i];
    int sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (family.flats[j].set.proper_subset_of(rec.set)) {
        sum += *family.flats[j].value;
      }
    }
    rec.value = m.nullity(rec.set) - sum;
  }
  return family;
}

FlatFamily beta_family(const Matroid& m, OracleLimit limit) {
  FlatFamily family = enumerate_cyclic_flats(m, limit);
  const int r = m.rank_full();
  for (std::size_t i = family.flats.size(); i-- > 0;) {
    FlatRecord& rec = family.flats[i];
    int sum = 0;
    for (std::size_t j = i + 1; j < family.flats.size(); ++j) {
      if (rec.set.proper_subset_of(family.flats[j].set)) {
        sum += *family.flats[j].value;
      }
    }
    rec.value = r - rec.rank - sum;
  }
  return family;
}

int gamma_of(const Matroid& m, const FlatFamily& gamma_flats, ElemSet x) {
  int sum = 0;
  for (const FlatRecord& rec : gamma_flats.flats) {
    if (rec.set.proper_subset_of(x)) sum += *rec.value;
  }
  return m.nullity(x) - sum;
}

int beta_of(const Matroid& m, const FlatFamily& beta_flats, ElemSet x) {
  int sum = 0;
  for (const FlatRecord& rec : beta_flats.flats) {
    if (x.proper_subset_of(rec.set)) sum += *rec.value;
  }
  return m.rank_full() - m.rank(x) - sum;
}

FlatFamily positive_gamma_flats(const Matroid& m, OracleLimit limit) {
  FlatFamily all = gamma_family(m, limit);
  FlatFamily out{all.ground_size, {}};
  for (const FlatRecord& rec : all.flats) {
    if (*rec.value > 0) out.flats.push_back(rec);
  }
  return out;
}

namespace {

SweepResult sweep(const Matroid& m, const FlatFamily& flats, bool use_gamma,
                  bool pruned) {
  const int n = m.ground_size();
  SweepResult result{true, std::nullopt, std::nullopt};
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    ElemSet x = ElemSet::of_bits(bits);
    if (pruned && !m.is_cyclic(x)) continue;
    int v = use_gamma ? gamma_of(m, flats, x) : beta_of(m, flats, x);
    if (v < 0) {
      result.ok = false;
      if (!result.witness || canon_less(x, *result.witness)) {
        result.witness = x;
        result.witness_value = v;
      }
    }
  }
  return result;
}

}  // namespace

SweepResult strict_gammoid_sweep(const Matroid& m, OracleLimit limit,
                                 bool pruned) {
  limit.check(m.ground_size(), "strict_gammoid_sweep");
  return sweep(m, gamma_family(m, limit), /*use_gamma=*/true, pruned);
}

SweepResult transversal_sweep(const Matroid& m, OracleLimit limit) {
  limit.check(m.ground_size(), "transversal_sweep");
  return sweep(m, beta_family(m, limit), /*use_gamma=*/false,
               /*pruned=*/false);
}

int delta_gamma(const Matroid& mplus, int e, ElemSet x, OracleLimit limit) {
  Minor deleted = delete_elements(mplus, ElemSet::single(e));
  FlatFamily gamma_deleted = gamma_family(deleted.matroid, limit);
  FlatFamily gamma_plus = gamma_family(mplus, limit);
  int g_deleted =
      gamma_of(deleted.matroid, gamma_deleted, deleted.lower(x.without(e)));
  int g_plus = gamma_of(mplus, gamma_plus, x);
  return g_deleted - g_plus;
}

FlatFamily downset(const FlatFamily& family, std::span<const ElemSet> targets) {
  FlatFamily out{family.ground_size, {}};
  for (const FlatRecord& rec : family.flats) {
    for (ElemSet t : targets) {
      if (rec.set.subset_of(t)) {
        out.flats.push_back(rec);
        break;
      }
    }
  }
  return out;
}

}  // namespace gammoid
