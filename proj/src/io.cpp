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

#include "gammoid/io.hpp"

#include <charconv>
#include <sstream>

namespace gammoid {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Tokenized non-empty lines, comments stripped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = (eol == std::string_view::npos)
                               ? text.substr(pos)
                               : text.substr(pos, eol - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' ||
                                raw[i] == '\r')) {
        ++i;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r') {
        ++i;
      }
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

int parse_int(const Line& line, const std::string& token, const char* what) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line.number, std::string("expected a nonnegative ") +
                                      what + ", got '" + token + "'");
  }
  return value;
}

int parse_index(const Line& line, const std::string& token, int n) {
  int v = parse_int(line, token, "index");
  if (v >= n) {
    throw ParseError(line.number, "index " + token + " out of range [0, " +
                                      std::to_string(n) + ")");
  }
  return v;
}

int parse_header(const std::vector<Line>& lines, const char* keyword) {
  if (lines.empty()) {
    throw ParseError(1, std::string("empty input, expected '") + keyword +
                            " <n>'");
  }
  const Line& first = lines.front();
  if (first.tokens[0] != keyword || first.tokens.size() != 2) {
    throw ParseError(first.number,
                     std::string("expected '") + keyword + " <n>'");
  }
  int n = parse_int(first, first.tokens[1], "count");
  if (n > ElemSet::kMaxGround) {
    throw ParseError(first.number,
                     "ground size " + std::to_string(n) + " exceeds the " +
                         std::to_string(ElemSet::kMaxGround) +
                         "-element limit");
  }
  return n;
}

}  // namespace

DocKind detect_kind(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  const std::string& head = lines.front().tokens[0];
  if (head == "vertices") return DocKind::kDigraph;
  if (head != "elements") {
    throw ParseError(lines.front().number,
                     "expected 'vertices <n>' or 'elements <n>', got '" +
                         head + "'");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens[0] == "set") return DocKind::kBipartite;
    if (lines[i].tokens[0] == "flat") return DocKind::kFlats;
  }
  throw ParseError(lines.back().number,
                   "cannot tell bipartite from flats input: no 'set' or "
                   "'flat' lines");
}

Digraph parse_digraph(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  int n = parse_header(lines, "vertices");
  Digraph d = Digraph::empty(n, ElemSet{});

  bool saw_sinks = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& head = line.tokens[0];
    if (head == "sinks") {
      if (saw_sinks) throw ParseError(line.number, "duplicate 'sinks' line");
      saw_sinks = true;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        int v = parse_index(line, line.tokens[t], n);
        if (d.sinks.contains(v)) {
          throw ParseError(line.number,
                           "duplicate sink " + std::to_string(v));
        }
        d.sinks = d.sinks.with(v);
      }
    } else if (head == "arc") {
      if (line.tokens.size() != 3) {
        throw ParseError(line.number, "expected 'arc <u> <v>'");
      }
      int u = parse_index(line, line.tokens[1], n);
      int v = parse_index(line, line.tokens[2], n);
      if (u == v) {
        throw ParseError(line.number,
                         "self-arc at vertex " + std::to_string(u));
      }
      if (d.has_arc(u, v)) {
        throw ParseError(line.number, "duplicate arc " + std::to_string(u) +
                                          " -> " + std::to_string(v));
      }
      d.add_arc(u, v);
    } else {
      throw ParseError(line.number, "unknown directive '" + head + "'");
    }
  }
  if (!saw_sinks) {
    throw ParseError(lines.back().number, "missing 'sinks' line");
  }
  return d;
}

std::string print_digraph(const Digraph& d) {
  std::ostringstream out;
  out << "vertices " << d.n << "\n";
  out << "sinks";
  for (int v : d.sinks.elements()) out << " " << v;
  out << "\n";
  for (const auto& [u, v] : d.arcs()) {
    out << "arc " << u << " " << v << "\n";
  }
  return out.str();
}

BipartiteDoc parse_bipartite(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  int n = parse_header(lines, "elements");
  BipartiteDoc doc;
  doc.system.ground_size = n;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "set") {
      throw ParseError(line.number,
                       "unknown directive '" + line.tokens[0] + "'");
    }
    if (line.tokens.size() < 2) {
      throw ParseError(line.number, "expected 'set <name> <i> ...'");
    }
    ElemSet members;
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      int v = parse_index(line, line.tokens[t], n);
      if (members.contains(v)) {
        throw ParseError(line.number,
                         "duplicate member " + std::to_string(v));
      }
      members = members.with(v);
    }
    doc.system.sets.push_back(members);
    doc.names.push_back(line.tokens[1]);
  }
  return doc;
}

std::string print_bipartite(const SetSystem& system,
                            const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "elements " << system.ground_size << "\n";
  for (int j = 0; j < system.set_count(); ++j) {
    out << "set "
        << (j < static_cast<int>(names.size())
                ? names[static_cast<std::size_t>(j)]
                : "s" + std::to_string(j));
    for (int v : system.sets[static_cast<std::size_t>(j)].elements()) {
      out << " " << v;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> default_set_names(int count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) names.push_back("s" + std::to_string(j));
  return names;
}

FlatFamily parse_flats(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  int n = parse_header(lines, "elements");
  FlatFamily family{n, {}};

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "flat") {
      throw ParseError(line.number,
                       "unknown directive '" + line.tokens[0] + "'");
    }
    if (line.tokens.size() < 2) {
      throw ParseError(line.number, "expected 'flat <rank> <i> ...'");
    }
    int rank = parse_int(line, line.tokens[1], "rank");
    ElemSet members;
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      int v = parse_index(line, line.tokens[t], n);
      if (members.contains(v)) {
        throw ParseError(line.number,
                         "duplicate member " + std::to_string(v));
      }
      members = members.with(v);
    }
    if (family.contains(members)) {
      throw ParseError(line.number, "duplicate flat " + members.to_string());
    }
    family.flats.push_back(FlatRecord{members, rank, std::nullopt});
  }
  family.sort_canonical();
  return family;
}

std::string print_flats(const FlatFamily& family) {
  FlatFamily sorted = family;
  sorted.sort_canonical();
  std::ostringstream out;
  out << "elements " << sorted.ground_size << "\n";
  for (const FlatRecord& rec : sorted.flats) {
    out << "flat " << rec.rank;
    for (int v : rec.set.elements()) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> digraph_warnings(const Digraph& d) {
  std::vector<std::string> warnings;
  for (int v : d.sinks.elements()) {
    if (!d.forward(v).empty()) {
      warnings.push_back("sink " + std::to_string(v) +
                         " has outgoing arcs; they do not change the matroid "
                         "and are ignored by neighbourhood read-off");
    }
  }
  return warnings;
}

}  // namespace gammoid
