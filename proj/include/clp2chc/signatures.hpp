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

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "clp2chc/syntax.hpp"

namespace clp2chc {

/// A function symbol (constructor of the universal datatype). Atoms have
/// arity zero.
struct FunctionSig {
  std::string name;
  std::size_t arity = 0;
  Span first_occurrence;

  bool operator==(const FunctionSig& o) const { return name == o.name && arity == o.arity; }
};

struct PredicateSig {
  std::string name;
  std::size_t arity = 0;
  bool operator==(const PredicateSig&) const = default;
};

struct FeatureSet {
  bool uses_lists = false;
  bool uses_integers = false;
  bool operator==(const FeatureSet&) const = default;
};

/// Function signatures of all terms in the program, each (name, arity) once,
/// ordered by first occurrence in a pre-order walk of the clauses.
/// Variables, integers, list syntax and arithmetic operators contribute
/// nothing themselves but are descended into.
std::vector<FunctionSig> collect_functions(const syntax::Database& db);
std::vector<FunctionSig> collect_functions(const syntax::Term& t);

/// Predicates used in heads and calls, ordered by first occurrence.
std::vector<PredicateSig> collect_predicates(const syntax::Database& db);

FeatureSet detect_features(const syntax::Database& db);

enum class Namespace { kConstructor, kSelector, kPredicate, kVariable };

/// Mapping from Prolog names to SMT-LIB symbols. The stored symbols are raw
/// symbol names; use smt::quote_symbol to print them.
///
/// Names are kept verbatim when they are legal simple symbols, unique across
/// all namespaces and not reserved. Otherwise the arity is appended when one
/// name is used with several arities (`foo$1`, `foo$2`), constructors that
/// share a name with a predicate get `$c`, reserved words get `$<arity>`, and
/// a counter resolves whatever collision remains. Names that are not legal
/// simple symbols stay as they are and are printed pipe-quoted.
class NameTable {
 public:
  NameTable() = default;

  /// Builds the table for a program; the result depends only on the order of
  /// the given signatures.
  static NameTable build(const std::vector<FunctionSig>& funcs,
                         const std::vector<PredicateSig>& preds);

  /// Symbol for a constructor, predicate or variable; selectors take the
  /// constructor name and the 1-based argument index as `arity`.
  std::string mangle(const std::string& name, std::size_t arity, Namespace ns) const;

  std::string constructor(const std::string& name, std::size_t arity) const {
    return mangle(name, arity, Namespace::kConstructor);
  }
  std::string selector(const std::string& ctor, std::size_t index) const {
    return mangle(ctor, index, Namespace::kSelector);
  }
  std::string predicate(const std::string& name, std::size_t arity) const {
    return mangle(name, arity, Namespace::kPredicate);
  }
  /// Variables are bound per clause; they avoid every global symbol but may
  /// repeat across clauses.
  std::string variable(const std::string& name) const {
    return mangle(name, 0, Namespace::kVariable);
  }

  /// All global symbols (constructors, selectors, predicates) in the table.
  std::vector<std::string> symbols() const;

  /// Reverse lookup: the Prolog (name, arity) behind a global symbol.
  std::optional<std::tuple<Namespace, std::string, std::size_t>> lookup(
      const std::string& symbol) const;

  static bool is_reserved(const std::string& symbol);

 private:
  using Key = std::tuple<Namespace, std::string, std::size_t>;
  std::string claim(std::string candidate);

  std::map<Key, std::string> forward_;
  std::map<std::string, Key> reverse_;
  std::set<std::string> used_;
};

}  // namespace clp2chc
