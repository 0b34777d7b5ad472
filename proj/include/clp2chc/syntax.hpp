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

// Reader and printer for the Prolog / CLP(Z) subset accepted by the
// translator: facts, rules and queries over variables, atoms, compound
// terms, lists, integers and integer arithmetic.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clp2chc/common.hpp"

namespace clp2chc::syntax {

// ---------------------------------------------------------------------------
// Tokens
// ---------------------------------------------------------------------------

enum class TokenKind {
  kAtom,      // lowercase identifier or quoted atom
  kVariable,  // uppercase or underscore identifier
  kInteger,   // non-negative decimal literal
  kPunct,     // ( ) [ ] , | and the clause terminator "."
  kOperator,  // symbolic operators such as :- #= \+
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;  // atom name without quotes, variable name, digits, ...
  Span span;
  bool quoted = false;  // atoms only

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

class LexError : public Error {
 public:
  using Error::Error;
};

/// Splits source text into tokens. Whitespace and `%` comments are skipped.
/// The returned sequence always ends with a kEnd token.
std::vector<Token> tokenize(std::string_view text);

// ---------------------------------------------------------------------------
// Abstract syntax
// ---------------------------------------------------------------------------

struct Term;

struct Var {
  std::string name;
  bool operator==(const Var&) const = default;
};

struct Atom {
  std::string name;
  bool operator==(const Atom&) const = default;
};

struct Compound {
  std::string name;
  std::vector<Term> args;  // never empty
  bool operator==(const Compound&) const;
};

/// `[e1, ..., en]` or `[e1, ..., en | tail]` (n >= 1 when a tail is present).
struct ListTerm {
  std::vector<Term> elements;
  std::optional<Box<Term>> tail;
  bool operator==(const ListTerm&) const;
};

struct IntLit {
  Integer value;  // non-negative; negative literals are Neg applied to IntLit
  bool operator==(const IntLit&) const = default;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv, kMod, kNeg };

struct ArithExpr {
  ArithOp op;
  std::vector<Term> operands;  // two operands, one for kNeg
  bool operator==(const ArithExpr&) const;
};

struct Term {
  using Node = std::variant<Var, Atom, Compound, ListTerm, IntLit, ArithExpr>;
  Node node;
  Span span;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& as() const { return std::get<T>(node); }

  // Structural: spans are ignored.
  bool operator==(const Term& other) const { return node == other.node; }
};

Term make_var(std::string name);
Term make_atom(std::string name);
Term make_int(Integer value);
Term make_compound(std::string name, std::vector<Term> args);
Term make_list(std::vector<Term> elements, std::optional<Term> tail = std::nullopt);
Term make_arith(ArithOp op, std::vector<Term> operands);

enum class CompareOp { kEq, kGt, kGe, kLt, kLe, kNe };

struct BodyItem;

struct Call {
  std::string predicate;
  std::vector<Term> args;
  bool operator==(const Call&) const = default;
};

struct Unify {
  Term lhs, rhs;
  bool operator==(const Unify&) const = default;
};

struct TermDiseq {
  Term lhs, rhs;
  bool operator==(const TermDiseq&) const = default;
};

struct Negation {
  Box<BodyItem> inner;
  bool operator==(const Negation&) const;
};

struct ArithConstraint {
  CompareOp op;
  Term lhs, rhs;
  bool operator==(const ArithConstraint&) const = default;
};

struct BodyItem {
  using Node = std::variant<Call, Unify, TermDiseq, Negation, ArithConstraint>;
  Node node;
  Span span;

  template <typename T>
  bool is() const { return std::holds_alternative<T>(node); }
  template <typename T>
  const T& as() const { return std::get<T>(node); }

  bool operator==(const BodyItem& other) const { return node == other.node; }
};

enum class ClauseKind { kFact, kRule, kQuery };

struct Clause {
  ClauseKind kind;
  std::optional<Call> head;  // absent for queries
  std::vector<BodyItem> body;
  Span span;

  bool operator==(const Clause& other) const {
    return kind == other.kind && head == other.head && body == other.body;
  }
};

struct Diagnostic {
  enum class Severity { kNote, kWarning, kError };
  Severity severity;
  std::string message;
  Span span;
};

struct Database {
  std::vector<Clause> clauses;
  std::vector<Diagnostic> diagnostics;  // parser warnings (dropped directives)

  bool operator==(const Database& other) const { return clauses == other.clauses; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, Span span, std::vector<std::string> expected = {})
      : Error(message, span), expected_(std::move(expected)) {}
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

/// Raised for syntactically valid input outside the supported fragment
/// (cut, disjunction, I/O and meta builtins).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

Database parse_program(std::string_view text);

std::string print_term(const Term& t);
std::string print_body_item(const BodyItem& b);
std::string print_clause(const Clause& c);
/// One clause per line.
std::string print_program(const Database& db);

/// True when `name` can be written as an atom without quotes.
bool is_plain_atom(std::string_view name);

std::string_view to_string(ArithOp op);
std::string_view to_string(CompareOp op);

/// Distinct variable names in order of first occurrence.
void collect_variables(const Term& t, std::vector<std::string>& out);
void collect_variables(const BodyItem& b, std::vector<std::string>& out);
std::vector<std::string> clause_variables(const Clause& c);

}  // namespace clp2chc::syntax
