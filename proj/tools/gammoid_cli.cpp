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

// Command-line front end over the gammoid C API. Exit codes: 0 success
// (or YES under --exit-status), 1 NO under --exit-status, 2 usage or input
// errors.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gammoid.h"

namespace {

constexpr int kExitError = 2;

struct StringDeleter {
  void operator()(char* s) const { gammoid_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct DigraphDeleter {
  void operator()(gammoid_digraph* d) const { gammoid_digraph_free(d); }
};
using DigraphHandle = std::unique_ptr<gammoid_digraph, DigraphDeleter>;

struct SystemDeleter {
  void operator()(gammoid_system* s) const { gammoid_system_free(s); }
};
using SystemHandle = std::unique_ptr<gammoid_system, SystemDeleter>;

struct ReportDeleter {
  void operator()(gammoid_report* r) const { gammoid_report_free(r); }
};
using ReportHandle = std::unique_ptr<gammoid_report, ReportDeleter>;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "gammoid: " << message << "\n";
  std::exit(kExitError);
}

void check(gammoid_status status) {
  if (status != GAMMOID_OK) {
    die(std::string(gammoid_status_name(status)) + ": " +
        gammoid_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Write via a temp file in the same directory plus rename, so a report path
// never holds a half-written document.
void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) die("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) die("cannot rename '" + tmp.string() + "' to '" + path + "'");
}

void emit_report(const gammoid_report* report, const std::string& out_path) {
  ApiString json(gammoid_report_json(report));
  if (out_path.empty()) {
    std::cout << json.get();
  } else {
    write_atomic(out_path, json.get());
  }
}

void emit_text(const std::string& text, const std::string& path) {
  if (!path.empty()) write_atomic(path, text);
}

std::uint32_t oracle_limit_default() {
  if (const char* env = std::getenv("MATROID_MAX_ORACLE_N")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<std::uint32_t>(v);
    die("MATROID_MAX_ORACLE_N must be a positive integer");
  }
  return 0;  // library default
}

DigraphHandle parse_digraph_file(const std::string& path) {
  std::string text = read_file(path);
  gammoid_digraph* d = nullptr;
  check(gammoid_digraph_parse(text.c_str(), &d));
  return DigraphHandle(d);
}

SystemHandle parse_system_file(const std::string& path) {
  std::string text = read_file(path);
  gammoid_system* s = nullptr;
  check(gammoid_system_parse(text.c_str(), &s));
  return SystemHandle(s);
}

bool starts_with_keyword(const std::string& text, const std::string& keyword) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line.substr(0, line.find('#')));
    std::string token;
    if (ls >> token) return token == keyword;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strict-gammoid and transversal-matroid decision toolkit"};
  app.require_subcommand(1);

  std::string input, out, text_out, mode;
  std::uint32_t element = 0;
  std::uint32_t max_n = 0;
  bool exit_status = false;

  auto* del = app.add_subcommand(
      "delete-check", "decide whether deleting one element from the strict "
                      "gammoid of a digraph leaves a strict gammoid");
  del->add_option("--input", input, "digraph file")->required();
  del->add_option("--element", element, "element to delete")->required();
  del->add_option("--out", out, "report path (default: stdout)");
  del->add_flag("--exit-status", exit_status,
                "exit 0 on YES, 1 on NO, 2 on errors");

  auto* con = app.add_subcommand(
      "contract-check", "decide whether contracting one element of a "
                        "transversal matroid leaves a transversal matroid");
  con->add_option("--input", input, "bipartite file")->required();
  con->add_option("--element", element, "element to contract")->required();
  con->add_option("--out", out, "report path (default: stdout)");
  con->add_option("--max-n", max_n, "oracle limit for normalization");
  con->add_flag("--exit-status", exit_status,
                "exit 0 on YES, 1 on NO, 2 on errors");

  auto* maxi = app.add_subcommand("maximalize",
                                  "maximal representation of a digraph");
  maxi->add_option("--input", input, "digraph file")->required();
  maxi->add_option("--out", out, "report path (default: stdout)");
  maxi->add_option("--text-out", text_out, "also write the digraph file");

  auto* flats = app.add_subcommand(
      "read-flats", "gamma-weighted cyclic flats of a digraph's gammoid");
  flats->add_option("--input", input, "digraph file")->required();
  flats->add_option("--out", out, "report path (default: stdout)");

  auto* dual = app.add_subcommand(
      "dualize", "dual presentation: digraph -> bipartite or bipartite -> "
                 "digraph");
  dual->add_option("--input", input, "digraph or bipartite file")->required();
  dual->add_option("--out", out, "report path (default: stdout)");
  dual->add_option("--text-out", text_out, "also write the dual as a file");
  dual->add_option("--max-n", max_n, "oracle limit for normalization");

  auto* oracle = app.add_subcommand(
      "oracle", "exhaustive gamma/beta sweeps and verdicts at desk scale");
  oracle->add_option("--input", input, "digraph, bipartite, or flats file")
      ->required();
  oracle
      ->add_option("--mode", mode,
                   "gamma-all | beta-all | cyclic-flats | strict-gammoid | "
                   "transversal")
      ->required();
  oracle->add_option("--max-n", max_n, "oracle limit (default 20)");
  oracle->add_option("--out", out, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (max_n == 0) max_n = oracle_limit_default();

  if (del->parsed()) {
    DigraphHandle d = parse_digraph_file(input);
    gammoid_report* report = nullptr;
    check(gammoid_delete_check(d.get(), element, &report));
    ReportHandle r(report);
    emit_report(r.get(), out);
    return exit_status ? (gammoid_report_verdict(r.get()) == 1 ? 0 : 1) : 0;
  }

  if (con->parsed()) {
    SystemHandle s = parse_system_file(input);
    gammoid_report* report = nullptr;
    check(gammoid_contract_check(s.get(), element, max_n, &report));
    ReportHandle r(report);
    emit_report(r.get(), out);
    return exit_status ? (gammoid_report_verdict(r.get()) == 1 ? 0 : 1) : 0;
  }

  if (maxi->parsed()) {
    DigraphHandle d = parse_digraph_file(input);
    gammoid_digraph* maximal = nullptr;
    gammoid_report* report = nullptr;
    check(gammoid_maximalize(d.get(), &maximal, &report));
    DigraphHandle m(maximal);
    ReportHandle r(report);
    emit_report(r.get(), out);
    ApiString text(gammoid_digraph_print(m.get()));
    emit_text(text.get(), text_out);
    return 0;
  }

  if (flats->parsed()) {
    DigraphHandle d = parse_digraph_file(input);
    gammoid_report* report = nullptr;
    check(gammoid_read_flats(d.get(), &report));
    ReportHandle r(report);
    emit_report(r.get(), out);
    return 0;
  }

  if (dual->parsed()) {
    std::string text = read_file(input);
    gammoid_report* report = nullptr;
    if (starts_with_keyword(text, "vertices")) {
      gammoid_digraph* d = nullptr;
      check(gammoid_digraph_parse(text.c_str(), &d));
      DigraphHandle dh(d);
      gammoid_system* s = nullptr;
      check(gammoid_digraph_dual(dh.get(), &s, &report));
      SystemHandle sh(s);
      ReportHandle r(report);
      emit_report(r.get(), out);
      ApiString dual_text(gammoid_system_print(sh.get()));
      emit_text(dual_text.get(), text_out);
    } else {
      gammoid_system* s = nullptr;
      check(gammoid_system_parse(text.c_str(), &s));
      SystemHandle sh(s);
      gammoid_digraph* d = nullptr;
      check(gammoid_system_dual(sh.get(), max_n, &d, &report));
      DigraphHandle dh(d);
      ReportHandle r(report);
      emit_report(r.get(), out);
      ApiString dual_text(gammoid_digraph_print(dh.get()));
      emit_text(dual_text.get(), text_out);
    }
    return 0;
  }

  if (oracle->parsed()) {
    std::string text = read_file(input);
    gammoid_report* report = nullptr;
    check(gammoid_oracle(text.c_str(), mode.c_str(), max_n, &report));
    ReportHandle r(report);
    emit_report(r.get(), out);
    return 0;
  }

  return kExitError;
}
