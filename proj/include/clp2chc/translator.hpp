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

// Translation of Prolog clauses into constrained Horn clauses over a single
// universal datatype U. Every Prolog term becomes a U-term; integers are
// wrapped by `anInt`, lists by `aList` over the list datatype L. Typing
// requirements that Prolog checks at run time become side conditions
// (`((_ is anInt) t)`, `((_ is aList) t)`) assumed in the clause antecedent.

#include <string>
#include <vector>

#include "clp2chc/signatures.hpp"
#include "clp2chc/smtlib.hpp"
#include "clp2chc/syntax.hpp"

namespace clp2chc {

namespace symbols {
inline constexpr const char* kUniverse = "U";
inline constexpr const char* kList = "L";
inline constexpr const char* kAnInt = "anInt";
inline constexpr const char* kTheInt = "theInt";
inline constexpr const char* kAList = "aList";
inline constexpr const char* kTheList = "theList";
inline constexpr const char* kNil = "nil";
inline constexpr const char* kCons = "cons";
inline constexpr const char* kHead = "head";
inline constexpr const char* kTail = "tail";
inline constexpr const char* kDefault = "u$default";
}  // namespace symbols

struct SideCondition {
  enum class Kind { kIsList, kIsInt };
  Kind kind;
  smt::SmtTerm term;

  smt::SmtTerm to_smt() const;
  bool operator==(const SideCondition&) const = default;
};

/// A translated term `s'` together with the side conditions it was derived
/// under. Conditions are duplicate-free and kept in insertion order.
struct JudgementResult {
  smt::SmtTerm translated;
  std::vector<SideCondition> conditions;

  void add_condition(SideCondition c);
  void add_conditions(const std::vector<SideCondition>& cs);
};

struct TranslateOptions {
  /// Rewrite `(theInt (anInt e))` to `e`, `(theList (aList l))` to `l`, drop
  /// testers that hold by construction, and state `#=` against an
  /// anInt-term as a plain equation. Off gives the rule-by-rule output.
  bool peephole = true;
  /// Declare anInt, aList and L even when the program does not need them.
  bool force_features = false;
};

/// `\+` applied to a predicate call; the result would not be a Horn clause.
class NegatedPredicateError : public Error {
 public:
  using Error::Error;
};

JudgementResult translate_term(const syntax::Term& t, const NameTable& table,
                               const TranslateOptions& opts = {});

/// Translation of a body item to a Boolean term.
JudgementResult translate_body_item(const syntax::BodyItem& b, const NameTable& table,
                                    const TranslateOptions& opts = {});

/// The assertion for one clause.
smt::Command translate_clause(const syntax::Clause& c, const NameTable& table,
                              const TranslateOptions& opts = {});

std::vector<smt::Command> build_declarations(const std::vector<FunctionSig>& funcs,
                                             const std::vector<PredicateSig>& preds,
                                             const FeatureSet& feats, const NameTable& table);

struct Translation {
  smt::Script script;
  NameTable names;
  /// Informational notes, e.g. unifications that fail the occurs-check.
  std::vector<syntax::Diagnostic> notes;
};

Translation translate(const syntax::Database& db, const TranslateOptions& opts = {});

/// set-logic HORN, declarations, one assertion per clause, check-sat.
smt::Script translate_program(const syntax::Database& db, const TranslateOptions& opts = {});

/// Sort errors of a script against its own declarations; empty when every
/// assertion is well-sorted.
std::vector<std::string> check_sorts(const smt::Script& s);

/// Assertions that are not constrained Horn clauses: facts, quantified facts,
/// rules with a predicate consequent, or queries with consequent false.
std::vector<std::string> check_horn_shape(const smt::Script& s);

}  // namespace clp2chc
