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

#include "gammoid/report.hpp"

#include <cstdint>

namespace gammoid {

std::string content_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string("fnv1a64:") + buf;
}

Json elemset_json(ElemSet s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(e);
  return out;
}

Json family_json(const FlatFamily& family, const char* value_key) {
  Json out = Json::array();
  for (const FlatRecord& rec : family.flats) {
    Json item;
    item["set"] = elemset_json(rec.set);
    item["rank"] = rec.rank;
    if (rec.value) item[value_key] = *rec.value;
    out.push_back(std::move(item));
  }
  return out;
}

Json digraph_payload(const Digraph& d) {
  Json out;
  out["kind"] = "digraph";
  out["vertices"] = d.n;
  out["sinks"] = elemset_json(d.sinks);
  Json arcs = Json::array();
  for (const auto& [u, v] : d.arcs()) arcs.push_back(Json::array({u, v}));
  out["arcs"] = std::move(arcs);
  return out;
}

Json system_payload(const SetSystem& system,
                    const std::vector<std::string>& names) {
  Json out;
  out["kind"] = "bipartite";
  out["elements"] = system.ground_size;
  Json sets = Json::array();
  for (int j = 0; j < system.set_count(); ++j) {
    Json item;
    item["name"] = j < static_cast<int>(names.size())
                       ? names[static_cast<std::size_t>(j)]
                       : "s" + std::to_string(j);
    item["members"] = elemset_json(system.sets[static_cast<std::size_t>(j)]);
    sets.push_back(std::move(item));
  }
  out["sets"] = std::move(sets);
  return out;
}

Digraph digraph_from_payload(const Json& payload) {
  Digraph d = Digraph::empty(payload.at("vertices").get<int>(), ElemSet{});
  for (const Json& v : payload.at("sinks")) {
    d.sinks = d.sinks.with(v.get<int>());
  }
  for (const Json& arc : payload.at("arcs")) {
    d.add_arc(arc.at(0).get<int>(), arc.at(1).get<int>());
  }
  return d;
}

SetSystem system_from_payload(const Json& payload,
                              std::vector<std::string>* names) {
  SetSystem system{payload.at("elements").get<int>(), {}};
  if (names) names->clear();
  for (const Json& item : payload.at("sets")) {
    ElemSet members;
    for (const Json& v : item.at("members")) {
      members = members.with(v.get<int>());
    }
    system.sets.push_back(members);
    if (names) names->push_back(item.at("name").get<std::string>());
  }
  return system;
}

Json witness_json(const Witness& w) {
  Json out;
  out["kind"] = w.kind_name();
  switch (w.kind) {
    case Witness::kNegativeEta:
      out["flat"] = elemset_json(w.flat);
      out["eta"] = w.eta;
      break;
    case Witness::kBoundExceeded:
      out["sum"] = w.value_sum;
      out["bound"] = w.bound;
      break;
    case Witness::kNoTransversal:
      out["hall_witness"] = w.hall_witness;
      break;
    case Witness::kRankMismatch:
      out["z0"] = elemset_json(w.z0);
      out["z1"] = elemset_json(w.z1);
      out["rank_m"] = w.rank_lhs;
      out["rank_mprime"] = w.rank_rhs;
      break;
    case Witness::kClosureMismatch:
      out["z0"] = elemset_json(w.z0);
      out["z1"] = elemset_json(w.z1);
      out["closure_m"] = elemset_json(w.closure_lhs);
      out["closure_mprime"] = elemset_json(w.closure_rhs);
      break;
  }
  return out;
}

namespace {

Json digraph_input_json(const Digraph& d) {
  Json input = digraph_payload(d);
  input["digest"] = content_digest(print_digraph(d));
  input["warnings"] = digraph_warnings(d);
  return input;
}

Json system_input_json(const SetSystem& system,
                       const std::vector<std::string>& names) {
  Json input = system_payload(system, names);
  input["digest"] = content_digest(print_bipartite(system, names));
  return input;
}

Json deletion_body(const DeletionDecision& decision) {
  Json out;
  out["verdict"] = decision.yes() ? "yes" : "no";
  out["witness"] =
      decision.witness ? witness_json(*decision.witness) : Json(nullptr);
  Json trace;
  trace["element_map"] = decision.trace.element_map;
  trace["family_f"] = family_json(decision.trace.family_f, "gamma");
  trace["family_f_prime"] = family_json(decision.trace.family_f_prime, "gamma");
  trace["family_f_second"] =
      family_json(decision.trace.family_f_second, "gamma");
  trace["family_e"] = family_json(decision.trace.family_e, "eta");
  trace["family_m"] = family_json(decision.trace.family_m, "gamma");
  out["trace"] = std::move(trace);
  out["representation"] = decision.representation
                              ? digraph_payload(*decision.representation)
                              : Json(nullptr);
  return out;
}

}  // namespace

Json deletion_report(const Digraph& input, int element,
                     const DeletionDecision& decision) {
  Json out;
  out["command"] = "delete-check";
  out["input"] = digraph_input_json(input);
  out["element"] = element;
  Json body = deletion_body(decision);
  for (auto& [key, value] : body.items()) out[key] = std::move(value);
  return out;
}

Json contraction_report(const SetSystem& input,
                        const std::vector<std::string>& names, int element,
                        const ContractionDecision& decision) {
  Json out;
  out["command"] = "contract-check";
  out["input"] = system_input_json(input, names);
  out["element"] = element;
  out["verdict"] = decision.yes() ? "yes" : "no";
  out["witness"] =
      decision.witness ? witness_json(*decision.witness) : Json(nullptr);
  out["element_map"] = decision.element_map;
  out["dual_deletion"] = decision.dual_trace
                             ? deletion_body(*decision.dual_trace)
                             : Json(nullptr);
  out["presentation"] =
      decision.presentation
          ? system_payload(*decision.presentation,
                           default_set_names(decision.presentation->set_count()))
          : Json(nullptr);
  return out;
}

Json maximalize_report(const Digraph& input, const Digraph& output) {
  Json out;
  out["command"] = "maximalize";
  out["input"] = digraph_input_json(input);
  out["representation"] = digraph_payload(output);
  return out;
}

Json read_flats_report(const Digraph& input, const FlatFamily& flats) {
  Json out;
  out["command"] = "read-flats";
  out["input"] = digraph_input_json(input);
  out["flats"] = family_json(flats, "gamma");
  return out;
}

Json dualize_digraph_report(const Digraph& input, const SetSystem& output) {
  Json out;
  out["command"] = "dualize";
  out["input"] = digraph_input_json(input);
  out["dual"] = system_payload(output, default_set_names(output.set_count()));
  return out;
}

Json dualize_bipartite_report(const SetSystem& input,
                              const std::vector<std::string>& names,
                              const Digraph& output) {
  Json out;
  out["command"] = "dualize";
  out["input"] = system_input_json(input, names);
  out["dual"] = digraph_payload(output);
  return out;
}

Json oracle_report(DocKind kind, std::string_view canonical_input,
                   const Matroid& m, const std::string& mode,
                   OracleLimit limit) {
  Json out;
  out["command"] = "oracle";
  Json input;
  switch (kind) {
    case DocKind::kDigraph: input["kind"] = "digraph"; break;
    case DocKind::kBipartite: input["kind"] = "bipartite"; break;
    case DocKind::kFlats: input["kind"] = "flats"; break;
  }
  input["digest"] = content_digest(canonical_input);
  input["ground_size"] = m.ground_size();
  out["input"] = std::move(input);
  out["mode"] = mode;
  out["max_n"] = limit.max_n;

  limit.check(m.ground_size(), "oracle");

  auto witness_entry = [](const SweepResult& sweep) {
    if (sweep.ok) return Json(nullptr);
    Json w;
    w["set"] = elemset_json(*sweep.witness);
    w["value"] = *sweep.witness_value;
    return w;
  };

  if (mode == "cyclic-flats") {
    out["flats"] = family_json(gamma_family(m, limit), "gamma");
  } else if (mode == "gamma-all" || mode == "beta-all") {
    const bool use_gamma = mode == "gamma-all";
    FlatFamily flats = use_gamma ? gamma_family(m, limit)
                                 : beta_family(m, limit);
    Json table = Json::array();
    const std::uint64_t end = std::uint64_t{1} << m.ground_size();
    for (std::uint64_t bits = 0; bits < end; ++bits) {
      ElemSet x = ElemSet::of_bits(bits);
      Json row;
      row["set"] = elemset_json(x);
      row["value"] = use_gamma ? gamma_of(m, flats, x) : beta_of(m, flats, x);
      table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
    SweepResult sweep = use_gamma ? strict_gammoid_sweep(m, limit)
                                  : transversal_sweep(m, limit);
    out["verdict"] = sweep.ok ? "yes" : "no";
    out["witness"] = witness_entry(sweep);
  } else if (mode == "strict-gammoid") {
    SweepResult sweep = strict_gammoid_sweep(m, limit);
    out["verdict"] = sweep.ok ? "yes" : "no";
    out["witness"] = witness_entry(sweep);
  } else if (mode == "transversal") {
    SweepResult sweep = transversal_sweep(m, limit);
    out["verdict"] = sweep.ok ? "yes" : "no";
    out["witness"] = witness_entry(sweep);
  } else {
    throw std::invalid_argument("oracle: unknown mode '" + mode + "'");
  }
  return out;
}

std::string report_text(const Json& report) {
  return report.dump(2) + "\n";
}

}  // namespace gammoid
