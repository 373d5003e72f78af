/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API for the gammoid toolkit: strict-gammoid and transversal-matroid
 * decision procedures over text presentations. Handles are opaque; every
 * fallible call returns a status code and leaves a human-readable message in
 * thread-local storage, readable via gammoid_last_error(). Strings returned
 * as char* are owned by the caller and released with gammoid_string_free().
 */

#ifndef GAMMOID_H_
#define GAMMOID_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gammoid_status {
  GAMMOID_OK = 0,
  GAMMOID_ERROR_PARSE = 1,     /* malformed input text (message has the line) */
  GAMMOID_ERROR_RANGE = 2,     /* element index out of range */
  GAMMOID_ERROR_LIMIT = 3,     /* exhaustive sweep beyond the oracle limit */
  GAMMOID_ERROR_NORMALIZE = 4, /* oversized presentation is irreducible */
  GAMMOID_ERROR_AXIOMS = 5,    /* cyclic-flat family violates Z1..Z4 */
  GAMMOID_ERROR_INVALID = 6,   /* bad argument (mode name, null pointer) */
  GAMMOID_ERROR_INTERNAL = 7
} gammoid_status;

typedef struct gammoid_digraph gammoid_digraph;   /* digraph presentation */
typedef struct gammoid_system gammoid_system;     /* bipartite presentation */
typedef struct gammoid_report gammoid_report;     /* structured result */

const char* gammoid_status_name(gammoid_status status);

/* Message for the most recent failure on this thread; empty on success. */
const char* gammoid_last_error(void);

void gammoid_string_free(char* text);
void gammoid_digraph_free(gammoid_digraph* d);
void gammoid_system_free(gammoid_system* s);
void gammoid_report_free(gammoid_report* r);

/* --- presentations ------------------------------------------------------ */

gammoid_status gammoid_digraph_parse(const char* text, gammoid_digraph** out);
gammoid_status gammoid_system_parse(const char* text, gammoid_system** out);

/* Canonical text form (round-trips through the parser byte-for-byte). */
char* gammoid_digraph_print(const gammoid_digraph* d);
char* gammoid_system_print(const gammoid_system* s);

/* --- operations ---------------------------------------------------------- */

gammoid_status gammoid_maximalize(const gammoid_digraph* d,
                                  gammoid_digraph** out,
                                  gammoid_report** report);

gammoid_status gammoid_read_flats(const gammoid_digraph* d,
                                  gammoid_report** report);

gammoid_status gammoid_digraph_dual(const gammoid_digraph* d,
                                    gammoid_system** out,
                                    gammoid_report** report);

/* max_n == 0 means the default oracle limit; only needed when the
 * presentation has more sets than its rank. */
gammoid_status gammoid_system_dual(const gammoid_system* s, uint32_t max_n,
                                   gammoid_digraph** out,
                                   gammoid_report** report);

gammoid_status gammoid_delete_check(const gammoid_digraph* d, uint32_t element,
                                    gammoid_report** report);

gammoid_status gammoid_contract_check(const gammoid_system* s,
                                      uint32_t element, uint32_t max_n,
                                      gammoid_report** report);

/* Exhaustive oracle over a digraph, bipartite, or flats text input.
 * Modes: gamma-all, beta-all, cyclic-flats, strict-gammoid, transversal. */
gammoid_status gammoid_oracle(const char* input_text, const char* mode,
                              uint32_t max_n, gammoid_report** report);

/* --- reports -------------------------------------------------------------- */

/* 1 = yes, 0 = no, -1 = the report carries no verdict. */
int gammoid_report_verdict(const gammoid_report* r);

/* Serialized JSON document, stable field order, trailing newline. */
char* gammoid_report_json(const gammoid_report* r);

#ifdef __cplusplus
}
#endif

#endif /* GAMMOID_H_ */
