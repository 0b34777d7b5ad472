// Copyright 2026 The clp2chc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "clp2chc/driver.hpp"

namespace {

clp2chc::Integer parse_integer(const std::string& s) {
  if (s.empty()) throw CLI::ValidationError("--int-range", "empty bound");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos) {
    throw CLI::ValidationError("--int-range", "not an integer: " + s);
  }
  return clp2chc::Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace clp2chc;

  CLI::App app{"Translate Prolog/CLP(Z) programs into SMT-LIB constrained Horn clauses."};
  app.set_version_flag("--version", "clp2chc 0.1.0");

  RunConfig cfg;
  std::string style = "modern";
  std::string mode = "translate";
  std::string int_range;
  bool no_peephole = false;
  std::optional<std::string> output;
  std::optional<std::string> solver;

  app.add_option("input", cfg.input, "Prolog source file")->required();
  app.add_option("-o,--output", output, "Write the script here instead of standard output");
  app.add_option("--style", style, "Datatype declaration style")
      ->check(CLI::IsMember({"modern", "legacy"}));
  app.add_flag("--no-peephole", no_peephole, "Keep redundant wrappers and testers");
  app.add_flag("--force-features", cfg.translate.force_features,
               "Always declare anInt, aList and L");
  app.add_option("--mode", mode, "translate, oracle, solve or diff")
      ->check(CLI::IsMember({"translate", "oracle", "solve", "diff"}));
  app.add_option("--depth", cfg.bounds.term_depth, "Oracle: maximal term depth")
      ->check(CLI::PositiveNumber);
  app.add_option("--int-range", int_range, "Oracle: integer range LO:HI");
  app.add_option("--max-list-len", cfg.bounds.max_list_len, "Oracle: maximal list length");
  app.add_option("--max-iter", cfg.bounds.max_iterations, "Oracle: maximal number of rounds")
      ->check(CLI::PositiveNumber);
  app.add_option("--solver", solver, "CHC solver executable (default $CLP2CHC_SOLVER)");
  app.add_option("--solver-arg", cfg.solver_args, "Extra solver argument, repeatable")
      ->allow_extra_args(false);
  app.add_option("--timeout", cfg.timeout_seconds, "Solver timeout in seconds")
      ->check(CLI::PositiveNumber);
  app.add_flag("--dump-ast", cfg.dump_ast, "Print the parsed program as comments");

  try {
    app.parse(argc, argv);
    if (!int_range.empty()) {
      auto colon = int_range.find(':', 1);
      if (colon == std::string::npos) throw CLI::ValidationError("--int-range", "expected LO:HI");
      cfg.bounds.int_min = parse_integer(int_range.substr(0, colon));
      cfg.bounds.int_max = parse_integer(int_range.substr(colon + 1));
      if (cfg.bounds.int_min > cfg.bounds.int_max) {
        throw CLI::ValidationError("--int-range", "LO is greater than HI");
      }
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  static const std::map<std::string, Mode> modes{
      {"translate", Mode::kTranslate}, {"oracle", Mode::kOracle}, {"solve", Mode::kSolve}, {"diff", Mode::kDiff}};
  cfg.mode = modes.at(mode);
  cfg.style = style == "legacy" ? smt::DatatypeStyle::kLegacy : smt::DatatypeStyle::kModern;
  cfg.translate.peephole = !no_peephole;
  cfg.output = output;
  cfg.solver = solver;

  RunReport report = run(cfg, std::cout);
  std::cout.flush();
  for (const auto& m : report.diagnostics) std::cerr << format_message(cfg.input, m) << '\n';
  return report.exit_code;
}
