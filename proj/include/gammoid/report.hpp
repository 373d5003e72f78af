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

#ifndef GAMMOID_REPORT_HPP_
#define GAMMOID_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gammoid/io.hpp"

namespace gammoid {

// Reports use insertion-ordered JSON so serialized output is stable for
// golden-file comparison. No timestamps or other run-varying fields.
using Json = nlohmann::ordered_json;

// "fnv1a64:<16 hex digits>" over the canonical printed form of the input.
std::string content_digest(std::string_view text);

Json elemset_json(ElemSet s);
// [{"set": [...], "rank": r, "<value_key>": v}, ...]; value omitted if unset.
Json family_json(const FlatFamily& family, const char* value_key);

Json digraph_payload(const Digraph& d);
Json system_payload(const SetSystem& system,
                    const std::vector<std::string>& names);

// Re-parsing payloads must reproduce the exact representation.
Digraph digraph_from_payload(const Json& payload);
SetSystem system_from_payload(const Json& payload,
                              std::vector<std::string>* names = nullptr);

Json witness_json(const Witness& w);

Json deletion_report(const Digraph& input, int element,
                     const DeletionDecision& decision);
Json contraction_report(const SetSystem& input,
                        const std::vector<std::string>& names, int element,
                        const ContractionDecision& decision);
Json maximalize_report(const Digraph& input, const Digraph& output);
Json read_flats_report(const Digraph& input, const FlatFamily& flats);
Json dualize_digraph_report(const Digraph& input, const SetSystem& output);
Json dualize_bipartite_report(const SetSystem& input,
                              const std::vector<std::string>& names,
                              const Digraph& output);

// Oracle sweeps over a matroid from any of the three input formats.
Json oracle_report(DocKind kind, std::string_view canonical_input,
                   const Matroid& m, const std::string& mode,
                   OracleLimit limit);

// Canonical serialized form: 2-space indent, trailing newline.
std::string report_text(const Json& report);

}  // namespace gammoid

#endif  // GAMMOID_REPORT_HPP_
