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

// The subset of SMT-LIB v2 used for constrained Horn clauses over algebraic
// datatypes: set-logic, datatype and function declarations, assertions and
// check-sat.

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "clp2chc/common.hpp"

namespace clp2chc::smt {

struct SmtTerm;

struct Symbol {
  std::string name;  // raw symbol, without pipe quotes
  bool operator==(const Symbol&) const = default;
};

struct IntConst {
  Integer value;  // non-negative numeral; negation is the application (- n)
  bool operator==(const IntConst&) const = default;
};

struct Apply {
  Box<SmtTerm> head;
  std::vector<SmtTerm> args;  // at least one
  bool operator==(const Apply&) const;
};

struct SortedVar {
  std::string name;
  std::string sort;
  bool operator==(const SortedVar&) const = default;
};

struct Forall {
  std::vector<SortedVar> bindings;  // non-empty, pairwise distinct names
  Box<SmtTerm> body;
  bool operator==(const Forall&) const;
};

/// `((_ is C) t)`
struct IndexedTester {
  std::string constructor;
  Box<SmtTerm> arg;
  bool operator==(const IndexedTester&) const;
};

struct SmtTerm {
  using Node = std::variant<Symbol, IntConst, Apply, Forall, IndexedTester>;
  Node node;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& as() const { return std::get<T>(node); }

  bool operator==(const SmtTerm&) const = default;

  /// True for a symbol with the given name.
  bool is_symbol(std::string_view name) const {
    return is<Symbol>() && as<Symbol>().name == name;
  }
  /// Name of the head symbol of an application, or empty.
  std::string_view head_name() const;
};

SmtTerm sym(std::string name);
SmtTerm num(Integer value);
/// Application; with no arguments this is the bare symbol.
SmtTerm app(std::string head, std::vector<SmtTerm> args);
SmtTerm forall(std::vector<SortedVar> bindings, SmtTerm body);
SmtTerm tester(std::string constructor, SmtTerm arg);

struct Selector {
  std::string name;
  std::string sort;
  bool operator==(const Selector&) const = default;
};

struct Constructor {
  std::string name;
  std::vector<Selector> selectors;
  bool operator==(const Constructor&) const = default;
};

struct Datatype {
  std::string name;
  std::vector<Constructor> constructors;
  bool operator==(const Datatype&) const = default;
};

struct SetLogic {
  std::string logic;
  bool operator==(const SetLogic&) const = default;
};
struct DeclareDatatypes {
  std::vector<Datatype> sorts;
  bool operator==(const DeclareDatatypes&) const = default;
};
struct DeclareFun {
  std::string name;
  std::vector<std::string> arg_sorts;
  std::string result_sort;
  bool operator==(const DeclareFun&) const = default;
};
struct Assert {
  SmtTerm term;
  bool operator==(const Assert&) const = default;
};
struct CheckSat {
  bool operator==(const CheckSat&) const = default;
};

using Command = std::variant<SetLogic, DeclareDatatypes, DeclareFun, Assert, CheckSat>;

struct Script {
  std::vector<Command> commands;
  bool operator==(const Script&) const = default;
};

/// Violations of the Script invariants (set-logic first, check-sat last,
/// declarations before assertions, distinct forall bindings, non-empty
/// applications); empty when valid.
std::vector<std::string> validate(const Script& s);

enum class DatatypeStyle {
  kModern,  // (declare-datatype U (...)) / (declare-datatypes ((U 0) (L 0)) (...))
  kLegacy,  // (declare-datatypes () ((U ...) (L ...)))
};

/// Prints a symbol, pipe-quoting it when it is not a legal simple symbol or is
/// a reserved word.
std::string quote_symbol(std::string_view name);
bool is_simple_symbol(std::string_view name);

std::string to_string(const SmtTerm& t);

/// Deterministic text of a script; one command per top-level form, long
/// forms broken over lines with 4-space indentation.
std::string emit(const Script& s, DatatypeStyle style = DatatypeStyle::kModern);
std::string emit(const Command& c, DatatypeStyle style = DatatypeStyle::kModern);

class SmtParseError : public Error {
 public:
  using Error::Error;
};

/// Reads a script; accepts both datatype declaration styles. Throws
/// SmtParseError on malformed input or when the Script invariants fail.
Script parse_script(std::string_view text);
SmtTerm parse_term(std::string_view text);

struct EqualityOptions {
  /// Compare datatype constructors in declaration order instead of as a set.
  bool ordered_constructors = false;
};

/// Equality modulo renaming and reordering of forall-bound variables,
/// datatype declaration style, nested and single-element conjunctions, and
/// (unless requested) constructor order.
bool structurally_equal(const Script& a, const Script& b, EqualityOptions opts = {});

/// The normal form compared by structurally_equal.
Script normalize(const Script& s, EqualityOptions opts = {});

}  // namespace clp2chc::smt
