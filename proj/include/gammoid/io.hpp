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

#ifndef GAMMOID_IO_HPP_
#define GAMMOID_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gammoid/decide.hpp"

namespace gammoid {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

enum class DocKind { kDigraph, kBipartite, kFlats };

// Distinguishes the three text formats by their directive keywords:
// digraph files start with `vertices`, bipartite and flats files start with
// `elements` and then carry `set` or `flat` lines.
DocKind detect_kind(std::string_view text);

// Digraph file: `vertices <n>`, one `sinks <i> ...` line (possibly with no
// indices), zero or more `arc <u> <v>` lines. `#` starts a comment; blank
// lines are ignored. Duplicate arcs and self-arcs are rejected.
Digraph parse_digraph(std::string_view text);
std::string print_digraph(const Digraph& d);

struct BipartiteDoc {
  SetSystem system;
  std::vector<std::string> names;  // one per set, in order
};

// Bipartite file: `elements <n>`, then `set <name> <i> ...` lines. Duplicate
// set contents are allowed (multiset); order is preserved. Empty sets are
// legal.
BipartiteDoc parse_bipartite(std::string_view text);
std::string print_bipartite(const SetSystem& system,
                            const std::vector<std::string>& names = {});

// Canonical names s0, s1, ... for presentations produced by the library.
std::vector<std::string> default_set_names(int count);

// Flats file: `elements <n>`, then `flat <rank> <i> ...` lines describing a
// cyclic-flat family with ranks. Feeds matroid_from_cyclic_flats.
FlatFamily parse_flats(std::string_view text);
std::string print_flats(const FlatFamily& family);

// Arcs leaving sink vertices do not affect the presented matroid and are
// ignored by neighbourhood read-off; reported so callers can flag them.
std::vector<std::string> digraph_warnings(const Digraph& d);

}  // namespace gammoid

#endif  // GAMMOID_IO_HPP_
