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
#pragma once

// End-to-end runs: read a program, translate it, and optionally evaluate it
// with the bounded oracle and/or hand the script to an external CHC solver.

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clp2chc/oracle.hpp"
#include "clp2chc/smtlib.hpp"
#include "clp2chc/translator.hpp"

namespace clp2chc {

enum class Mode { kTranslate, kOracle, kSolve, kDiff };

struct RunConfig {
  std::string input;
  /// Script destination; standard output when empty.
  std::optional<std::string> output;
  smt::DatatypeStyle style = smt::DatatypeStyle::kModern;
  TranslateOptions translate;
  Mode mode = Mode::kTranslate;
  oracle::Bounds bounds;
  /// Defaults to $CLP2CHC_SOLVER when unset.
  std::optional<std::string> solver;
  std::vector<std::string> solver_args;
  double timeout_seconds = 60.0;
  /// Print the parsed program before translating.
  bool dump_ast = false;
};

enum class Status { kTranslated, kSat, kUnsat, kUnknown, kAgree, kDisagree, kError };

std::string_view to_string(Status s);
std::string_view to_string(Mode m);

struct Message {
  syntax::Diagnostic::Severity severity;
  std::string text;
  std::optional<Span> span;
};

struct PhaseTiming {
  std::string phase;
  double seconds;
};

struct RunReport {
  Status status = Status::kError;
  int exit_code = 1;
  std::vector<Message> diagnostics;
  std::vector<PhaseTiming> timings;
  std::optional<oracle::QueryAnswer> oracle;
  /// First sat/unsat/unknown line of the solver, if it ran.
  std::optional<std::string> solver_answer;
};

/// `file:line:col: severity: message`.
std::string format_message(const std::string& file, const Message& m);

/// Runs one configuration. Scripts, oracle answers and the final status go
/// to `out`; diagnostics are collected in the report and not printed.
///
/// Exit codes: 0 success (including solver or diff answers of unknown),
/// 1 input, parse, translation or oracle errors, 2 solver missing, failing to
/// start, timing out or answering garbage, 3 diff disagreement.
RunReport run(const RunConfig& cfg, std::ostream& out);

struct SolverResult {
  enum class Outcome { kAnswered, kTimeout, kLaunchFailure, kNoAnswer };
  Outcome outcome = Outcome::kLaunchFailure;
  std::string answer;  // sat, unsat or unknown
  std::string output;  // everything the solver printed
  std::string error;
};

/// Writes the script to a temporary `.smt2` file and runs
/// `solver args... file`, killing it after `timeout_seconds`.
SolverResult run_solver(const std::string& solver, const std::vector<std::string>& args,
                        const std::string& script, double timeout_seconds);

/// $CLP2CHC_SOLVER, if set and non-empty.
std::optional<std::string> default_solver();

}  // namespace clp2chc
