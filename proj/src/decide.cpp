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

#include "gammoid/decide.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace gammoid {

const char* Witness::kind_name() const {
  switch (kind) {
    case kNegativeEta: return "negative_eta";
    case kBoundExceeded: return "bound_exceeded";
    case kNoTransversal: return "no_transversal";
    case kRankMismatch: return "rank_mismatch";
    case kClosureMismatch: return "closure_mismatch";
  }
  return "?";
}

FlatFamily family_joins(const Matroid& m, const FlatFamily& family) {
  // Joins depend only on the union, so deduplicate unions before closing.
  std::unordered_set<std::uint64_t> seen_unions;
  std::unordered_set<std::uint64_t> seen_results;
  FlatFamily out{family.ground_size, {}};
  const int k = family.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      ElemSet un = family.flats[static_cast<std::size_t>(i)].set |
                   family.flats[static_cast<std::size_t>(j)].set;
      if (!seen_unions.insert(un.bits()).second) continue;
      ElemSet join = m.closure(un);
      if (seen_results.insert(join.bits()).second) {
        out.flats.push_back(FlatRecord{join, m.rank(join), std::nullopt});
      }
    }
  }
  out.sort_canonical();
  return out;
}

FlatFamily family_E(const Minor& deleted, int e, const FlatFamily& candidates) {
  std::unordered_set<std::uint64_t> seen;
  FlatFamily out{deleted.matroid.ground_size(), {}};
  for (const FlatRecord& rec : candidates.flats) {
    ElemSet lowered = deleted.lower(rec.set.without(e));
    if (!seen.insert(lowered.bits()).second) continue;
    if (deleted.matroid.is_flat(lowered) && deleted.matroid.is_cyclic(lowered)) {
      out.flats.push_back(
          FlatRecord{lowered, deleted.matroid.rank(lowered), std::nullopt});
    }
  }
  out.sort_canonical();
  return out;
}

FlatFamily with_eta(const Matroid& m, FlatFamily family_e) {
  family_e.sort_canonical();
  for (std::size_t i = 0; i < family_e.flats.size(); ++i) {
    FlatRecord& rec = family_e.flats[i];
    int sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (family_e.flats[j].set.proper_subset_of(rec.set)) {
        sum += *family_e.flats[j].value;
      }
    }
    rec.value = m.nullity(rec.set) - sum;
  }
  return family_e;
}

int eta_of(const Matroid& m, const FlatFamily& family_e_with_eta, ElemSet x) {
  int sum = 0;
  for (const FlatRecord& rec : family_e_with_eta.flats) {
    if (rec.set.proper_subset_of(x)) sum += *rec.value;
  }
  return m.nullity(x) - sum;
}

namespace {

std::vector<int> reduced_element_map(int n, int e) {
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 0; v < n; ++v) {
    if (v != e) map.push_back(v);
  }
  return map;
}

DeletionDecision no_decision(Witness witness, DeletionTrace trace) {
  return DeletionDecision{Verdict::kNo, std::nullopt, std::move(witness),
                          std::move(trace)};
}

}  // namespace

DeletionDecision decide_deletion(const Digraph& d, int e) {
  if (e < 0 || e >= d.n) {
    throw std::out_of_range("decide_deletion: element " + std::to_string(e) +
                            " not in [0, " + std::to_string(d.n) + ")");
  }
  const int n = d.n;
  DeletionTrace trace;
  trace.element_map = reduced_element_map(n, e);
  trace.family_f.ground_size = n;
  trace.family_f_prime.ground_size = n;
  trace.family_f_second.ground_size = n;
  trace.family_e.ground_size = n - 1;
  trace.family_m.ground_size = n - 1;

  // Degenerate elements are dispatched before the main algorithm: dropping a
  // loop, or an isolated sink, cannot disturb any other linking.
  const bool is_loop = linking_rank_value(d, ElemSet::single(e)) == 0;
  bool isolated_sink = d.sinks.contains(e) && d.forward(e).empty();
  if (isolated_sink) {
    for (int v = 0; v < n && isolated_sink; ++v) {
      if (v != e && d.forward(v).contains(e)) isolated_sink = false;
    }
  }
  if (is_loop || isolated_sink) {
    return DeletionDecision{Verdict::kYes, maximalize(drop_vertex(d, e)),
                            std::nullopt, std::move(trace)};
  }

  Digraph d_max = maximalize(d);
  Matroid m_plus = strict_gammoid(d_max);

  trace.family_f = read_flats(d_max);
  trace.family_f_prime = family_joins(m_plus, trace.family_f);
  trace.family_f_second = family_joins(m_plus, trace.family_f_prime);

  // M = M+ \ e; its ranks come from linkings in the original digraph over
  // e-free sets (paths may still route through e). Sharing m_plus keeps one
  // memo across the join and candidate phases.
  Minor deleted = delete_elements(m_plus, ElemSet::single(e));
  trace.family_e =
      with_eta(deleted.matroid, family_E(deleted, e, trace.family_f_second));

  for (const FlatRecord& rec : trace.family_e.flats) {
    if (*rec.value < 0) {
      Witness w;
      w.kind = Witness::kNegativeEta;
      w.flat = rec.set;
      w.eta = *rec.value;
      return no_decision(std::move(w), std::move(trace));
    }
  }

  for (const FlatRecord& rec : trace.family_e.flats) {
    if (*rec.value > 0) trace.family_m.flats.push_back(rec);
  }

  const ElemSet reduced_ground = ElemSet::full(n - 1);
  int proper_sum = 0;
  for (const FlatRecord& rec : trace.family_m.flats) {
    if (rec.set != reduced_ground) proper_sum += *rec.value;
  }
  if (proper_sum > n - 1) {
    Witness w;
    w.kind = Witness::kBoundExceeded;
    w.value_sum = proper_sum;
    w.bound = n - 1;
    return no_decision(std::move(w), std::move(trace));
  }

  ConstructResult built = construct_from_flats(trace.family_m, n - 1);
  if (built.status == ConstructResult::kBoundExceeded) {
    Witness w;
    w.kind = Witness::kBoundExceeded;
    w.value_sum = built.value_sum;
    w.bound = n - 1;
    return no_decision(std::move(w), std::move(trace));
  }
  if (built.status == ConstructResult::kNoTransversal) {
    Witness w;
    w.kind = Witness::kNoTransversal;
    w.hall_witness = built.hall_witness;
    return no_decision(std::move(w), std::move(trace));
  }

  Matroid m_prime = strict_gammoid(*built.digraph);
  const int k = trace.family_m.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      ElemSet z0 = trace.family_m.flats[static_cast<std::size_t>(i)].set;
      ElemSet z1 = trace.family_m.flats[static_cast<std::size_t>(j)].set;
      ElemSet un = z0 | z1;
      int rank_m = deleted.matroid.rank(un);
      int rank_mp = m_prime.rank(un);
      if (rank_m != rank_mp) {
        Witness w;
        w.kind = Witness::kRankMismatch;
        w.z0 = z0;
        w.z1 = z1;
        w.rank_lhs = rank_m;
        w.rank_rhs = rank_mp;
        return no_decision(std::move(w), std::move(trace));
      }
      ElemSet cl_m = deleted.matroid.closure(un);
      ElemSet cl_mp = m_prime.closure(un);
      if (cl_m != cl_mp) {
        Witness w;
        w.kind = Witness::kClosureMismatch;
        w.z0 = z0;
        w.z1 = z1;
        w.closure_lhs = cl_m;
        w.closure_rhs = cl_mp;
        return no_decision(std::move(w), std::move(trace));
      }
    }
  }

  return DeletionDecision{Verdict::kYes, maximalize(*built.digraph),
                          std::nullopt, std::move(trace)};
}

NormalizeResult normalize_presentation(const SetSystem& system,
                                       OracleLimit limit) {
  SetSystem current = system;
  const int r = transversal_matroid(current).rank_full();
  if (current.set_count() > r) {
    limit.check(system.ground_size, "normalize_presentation");
  }

  auto rank_table = [](const SetSystem& s) {
    Matroid m = transversal_matroid(s);
    std::vector<std::int8_t> table(std::size_t{1} << s.ground_size);
    for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
      table[bits] = static_cast<std::int8_t>(m.rank(ElemSet::of_bits(bits)));
    }
    return table;
  };

  while (current.set_count() > r) {
    std::vector<std::int8_t> want = rank_table(current);
    bool removed = false;
    for (int j = 0; j < current.set_count(); ++j) {
      SetSystem candidate{current.ground_size, {}};
      for (int i = 0; i < current.set_count(); ++i) {
        if (i != j) {
          candidate.sets.push_back(current.sets[static_cast<std::size_t>(i)]);
        }
      }
      if (rank_table(candidate) == want) {
        current = std::move(candidate);
        removed = true;
        break;
      }
    }
    if (!removed) {
      return NormalizeResult{std::nullopt, std::move(current)};
    }
  }
  return NormalizeResult{std::move(current), {}};
}

Digraph dual_digraph_of_transversal(const SetSystem& system) {
  TransversalResult tr = transversal_of(system);
  if (!tr.ok()) {
    throw std::invalid_argument(
        "dual_digraph_of_transversal: presentation has no transversal; "
        "normalize so the set count equals the rank");
  }
  Digraph d = Digraph::empty(system.ground_size,
                             ElemSet::full(system.ground_size));
  for (const auto& [t, j] : tr.matching->pairs()) {
    d.out[static_cast<std::size_t>(t)] =
        system.sets[static_cast<std::size_t>(j)].without(t);
    d.sinks = d.sinks.without(t);
  }
  return d;
}

ContractionDecision decide_contraction(const SetSystem& system, int e,
                                       OracleLimit limit) {
  const int n = system.ground_size;
  if (e < 0 || e >= n) {
    throw std::out_of_range("decide_contraction: element " +
                            std::to_string(e) + " not in [0, " +
                            std::to_string(n) + ")");
  }

  ContractionDecision decision;
  decision.element_map = reduced_element_map(n, e);

  ElemSet support;
  for (ElemSet s : system.sets) support = support | s;
  if (!support.contains(e)) {
    // A loop: M / e = M \ e, and deleting e keeps every set as-is.
    SetSystem presentation{n - 1, {}};
    auto shift = [e](ElemSet s) {
      ElemSet out;
      for (int v : s.elements()) out = out.with(v < e ? v : v - 1);
      return out;
    };
    for (ElemSet s : system.sets) presentation.sets.push_back(shift(s));
    decision.verdict = Verdict::kYes;
    decision.presentation = std::move(presentation);
    return decision;
  }

  NormalizeResult normalized = normalize_presentation(system, limit);
  if (!normalized.ok()) {
    throw NormalizeError(
        "normalize_presentation: no removable set found with " +
        std::to_string(normalized.stuck.set_count()) + " sets");
  }

  Digraph dual_rep = dual_digraph_of_transversal(*normalized.system);
  DeletionDecision del = decide_deletion(dual_rep, e);
  if (del.yes()) {
    decision.verdict = Verdict::kYes;
    decision.presentation = neighbourhood_multiset(*del.representation);
  } else {
    decision.verdict = Verdict::kNo;
    decision.witness = del.witness;
  }
  decision.dual_trace = std::move(del);
  return decision;
}

}  // namespace gammoid
