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

#include "gammoid.h"

#include <cstring>
#include <new>
#include <string>

#include "gammoid/report.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gammoid_status fail(gammoid_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Maps core exceptions onto status codes. Every fallible entry point funnels
// through here so the C surface never leaks an exception.
template <typename Fn>
gammoid_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GAMMOID_OK;
  } catch (const gammoid::ParseError& e) {
    return fail(GAMMOID_ERROR_PARSE, e.what());
  } catch (const gammoid::OracleLimitError& e) {
    return fail(GAMMOID_ERROR_LIMIT, e.what());
  } catch (const gammoid::NormalizeError& e) {
    return fail(GAMMOID_ERROR_NORMALIZE, e.what());
  } catch (const gammoid::AxiomError& e) {
    return fail(GAMMOID_ERROR_AXIOMS, e.what());
  } catch (const std::out_of_range& e) {
    return fail(GAMMOID_ERROR_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GAMMOID_ERROR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(GAMMOID_ERROR_INTERNAL, e.what());
  }
}

gammoid::OracleLimit limit_from(uint32_t max_n) {
  gammoid::OracleLimit limit;
  if (max_n > 0) limit.max_n = static_cast<int>(max_n);
  return limit;
}

}  // namespace

struct gammoid_digraph {
  gammoid::Digraph d;
};

struct gammoid_system {
  gammoid::SetSystem system;
  std::vector<std::string> names;
};

struct gammoid_report {
  gammoid::Json json;
  int verdict = -1;  // 1 yes, 0 no, -1 none
};

namespace {

gammoid_report* make_report(gammoid::Json json) {
  auto* r = new gammoid_report{std::move(json), -1};
  if (r->json.contains("verdict")) {
    r->verdict = r->json["verdict"] == "yes" ? 1 : 0;
  }
  return r;
}

}  // namespace

extern "C" {

const char* gammoid_status_name(gammoid_status status) {
  switch (status) {
    case GAMMOID_OK: return "ok";
    case GAMMOID_ERROR_PARSE: return "parse_error";
    case GAMMOID_ERROR_RANGE: return "range_error";
    case GAMMOID_ERROR_LIMIT: return "limit_error";
    case GAMMOID_ERROR_NORMALIZE: return "normalize_error";
    case GAMMOID_ERROR_AXIOMS: return "axioms_error";
    case GAMMOID_ERROR_INVALID: return "invalid_argument";
    case GAMMOID_ERROR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* gammoid_last_error(void) { return g_last_error.c_str(); }

void gammoid_string_free(char* text) { delete[] text; }
void gammoid_digraph_free(gammoid_digraph* d) { delete d; }
void gammoid_system_free(gammoid_system* s) { delete s; }
void gammoid_report_free(gammoid_report* r) { delete r; }

gammoid_status gammoid_digraph_parse(const char* text, gammoid_digraph** out) {
  if (!text || !out) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] { *out = new gammoid_digraph{gammoid::parse_digraph(text)}; });
}

gammoid_status gammoid_system_parse(const char* text, gammoid_system** out) {
  if (!text || !out) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] {
    gammoid::BipartiteDoc doc = gammoid::parse_bipartite(text);
    *out = new gammoid_system{std::move(doc.system), std::move(doc.names)};
  });
}

char* gammoid_digraph_print(const gammoid_digraph* d) {
  if (!d) return nullptr;
  return dup_string(gammoid::print_digraph(d->d));
}

char* gammoid_system_print(const gammoid_system* s) {
  if (!s) return nullptr;
  return dup_string(gammoid::print_bipartite(s->system, s->names));
}

gammoid_status gammoid_maximalize(const gammoid_digraph* d,
                                  gammoid_digraph** out,
                                  gammoid_report** report) {
  if (!d) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] {
    gammoid::Digraph maximal = gammoid::maximalize(d->d);
    if (report) {
      *report = make_report(gammoid::maximalize_report(d->d, maximal));
    }
    if (out) *out = new gammoid_digraph{std::move(maximal)};
  });
}

gammoid_status gammoid_read_flats(const gammoid_digraph* d,
                                  gammoid_report** report) {
  if (!d || !report) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] {
    gammoid::FlatFamily flats = gammoid::read_flats(gammoid::maximalize(d->d));
    *report = make_report(gammoid::read_flats_report(d->d, flats));
  });
}

gammoid_status gammoid_digraph_dual(const gammoid_digraph* d,
                                    gammoid_system** out,
                                    gammoid_report** report) {
  if (!d) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] {
    gammoid::SetSystem dual = gammoid::neighbourhood_multiset(d->d);
    if (report) {
      *report = make_report(gammoid::dualize_digraph_report(d->d, dual));
    }
    if (out) {
      *out = new gammoid_system{
          dual, gammoid::default_set_names(dual.set_count())};
    }
  });
}

gammoid_status gammoid_system_dual(const gammoid_system* s, uint32_t max_n,
                                   gammoid_digraph** out,
                                   gammoid_report** report) {
  if (!s) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] {
    gammoid::NormalizeResult normalized =
        gammoid::normalize_presentation(s->system, limit_from(max_n));
    if (!normalized.ok()) {
      throw gammoid::NormalizeError(
          "normalize_presentation: no removable set found");
    }
    gammoid::Digraph dual =
        gammoid::dual_digraph_of_transversal(*normalized.system);
    if (report) {
      *report = make_report(
          gammoid::dualize_bipartite_report(s->system, s->names, dual));
    }
    if (out) *out = new gammoid_digraph{std::move(dual)};
  });
}

gammoid_status gammoid_delete_check(const gammoid_digraph* d, uint32_t element,
                                    gammoid_report** report) {
  if (!d || !report) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] {
    gammoid::DeletionDecision decision =
        gammoid::decide_deletion(d->d, static_cast<int>(element));
    *report = make_report(
        gammoid::deletion_report(d->d, static_cast<int>(element), decision));
  });
}

gammoid_status gammoid_contract_check(const gammoid_system* s,
                                      uint32_t element, uint32_t max_n,
                                      gammoid_report** report) {
  if (!s || !report) return fail(GAMMOID_ERROR_INVALID, "null argument");
  return guarded([&] {
    gammoid::ContractionDecision decision = gammoid::decide_contraction(
        s->system, static_cast<int>(element), limit_from(max_n));
    *report = make_report(gammoid::contraction_report(
        s->system, s->names, static_cast<int>(element), decision));
  });
}

gammoid_status gammoid_oracle(const char* input_text, const char* mode,
                              uint32_t max_n, gammoid_report** report) {
  if (!input_text || !mode || !report) {
    return fail(GAMMOID_ERROR_INVALID, "null argument");
  }
  return guarded([&] {
    gammoid::OracleLimit limit = limit_from(max_n);
    gammoid::DocKind kind = gammoid::detect_kind(input_text);
    switch (kind) {
      case gammoid::DocKind::kDigraph: {
        gammoid::Digraph d = gammoid::parse_digraph(input_text);
        *report = make_report(gammoid::oracle_report(
            kind, gammoid::print_digraph(d), gammoid::strict_gammoid(d), mode,
            limit));
        break;
      }
      case gammoid::DocKind::kBipartite: {
        gammoid::BipartiteDoc doc = gammoid::parse_bipartite(input_text);
        *report = make_report(gammoid::oracle_report(
            kind, gammoid::print_bipartite(doc.system, doc.names),
            gammoid::transversal_matroid(doc.system), mode, limit));
        break;
      }
      case gammoid::DocKind::kFlats: {
        gammoid::FlatFamily family = gammoid::parse_flats(input_text);
        *report = make_report(gammoid::oracle_report(
            kind, gammoid::print_flats(family),
            gammoid::matroid_from_cyclic_flats(family), mode, limit));
        break;
      }
    }
  });
}

int gammoid_report_verdict(const gammoid_report* r) {
  return r ? r->verdict : -1;
}

char* gammoid_report_json(const gammoid_report* r) {
  if (!r) return nullptr;
  return dup_string(gammoid::report_text(r->json));
}

}  // extern "C"
