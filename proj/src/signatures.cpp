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
#include "clp2chc/signatures.hpp"

#include <algorithm>
#include <unordered_set>

namespace clp2chc {

using namespace syntax;

namespace {

void add_function(std::vector<FunctionSig>& out, const std::string& name, std::size_t arity,
                  const Span& span) {
  for (const auto& f : out) {
    if (f.name == name && f.arity == arity) return;
  }
  out.push_back(FunctionSig{name, arity, span});
}

void functions_of(const Term& t, std::vector<FunctionSig>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          add_function(out, n.name, 0, t.span);
        } else if constexpr (std::is_same_v<T, Compound>) {
          add_function(out, n.name, n.args.size(), t.span);
          for (const auto& a : n.args) functions_of(a, out);
        } else if constexpr (std::is_same_v<T, ListTerm>) {
          for (const auto& e : n.elements) functions_of(e, out);
          if (n.tail) functions_of(**n.tail, out);
        } else if constexpr (std::is_same_v<T, ArithExpr>) {
          for (const auto& a : n.operands) functions_of(a, out);
        }
      },
      t.node);
}

void functions_of(const BodyItem& b, std::vector<FunctionSig>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : n.args) functions_of(a, out);
        } else if constexpr (std::is_same_v<T, Negation>) {
          functions_of(*n.inner, out);
        } else {
          functions_of(n.lhs, out);
          functions_of(n.rhs, out);
        }
      },
      b.node);
}

void predicates_of(const BodyItem& b, std::vector<PredicateSig>& out) {
  if (b.is<Call>()) {
    PredicateSig sig{b.as<Call>().predicate, b.as<Call>().args.size()};
    if (std::find(out.begin(), out.end(), sig) == out.end()) out.push_back(sig);
  } else if (b.is<Negation>()) {
    predicates_of(*b.as<Negation>().inner, out);
  }
}

void features_of(const Term& t, FeatureSet& f) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Compound>) {
          for (const auto& a : n.args) features_of(a, f);
        } else if constexpr (std::is_same_v<T, ListTerm>) {
          f.uses_lists = true;
          for (const auto& e : n.elements) features_of(e, f);
          if (n.tail) features_of(**n.tail, f);
        } else if constexpr (std::is_same_v<T, IntLit>) {
          f.uses_integers = true;
        } else if constexpr (std::is_same_v<T, ArithExpr>) {
          f.uses_integers = true;
          for (const auto& a : n.operands) features_of(a, f);
        }
      },
      t.node);
}

void features_of(const BodyItem& b, FeatureSet& f) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : n.args) features_of(a, f);
        } else if constexpr (std::is_same_v<T, Negation>) {
          features_of(*n.inner, f);
        } else {
          if constexpr (std::is_same_v<T, ArithConstraint>) f.uses_integers = true;
          features_of(n.lhs, f);
          features_of(n.rhs, f);
        }
      },
      b.node);
}

}  // namespace

std::vector<FunctionSig> collect_functions(const Term& t) {
  std::vector<FunctionSig> out;
  functions_of(t, out);
  return out;
}

std::vector<FunctionSig> collect_functions(const Database& db) {
  std::vector<FunctionSig> out;
  for (const auto& c : db.clauses) {
    if (c.head) {
      for (const auto& a : c.head->args) functions_of(a, out);
    }
    for (const auto& b : c.body) functions_of(b, out);
  }
  return out;
}

std::vector<PredicateSig> collect_predicates(const Database& db) {
  std::vector<PredicateSig> out;
  for (const auto& c : db.clauses) {
    if (c.head) {
      PredicateSig sig{c.head->predicate, c.head->args.size()};
      if (std::find(out.begin(), out.end(), sig) == out.end()) out.push_back(sig);
    }
    for (const auto& b : c.body) predicates_of(b, out);
  }
  return out;
}

FeatureSet detect_features(const Database& db) {
  FeatureSet f;
  for (const auto& c : db.clauses) {
    if (c.head) {
      for (const auto& a : c.head->args) features_of(a, f);
    }
    for (const auto& b : c.body) features_of(b, f);
  }
  return f;
}

// ---------------------------------------------------------------------------
// NameTable
// ---------------------------------------------------------------------------

bool NameTable::is_reserved(const std::string& symbol) {
  static const std::unordered_set<std::string> kReserved = {
      // SMT-LIB reserved words and commands
      "!", "_", "as", "BINARY", "DECIMAL", "exists", "HEXADECIMAL", "forall", "let", "match",
      "NUMERAL", "par", "STRING", "assert", "check-sat", "declare-datatype",
      "declare-datatypes", "declare-fun", "declare-const", "define-fun", "set-logic",
      "get-model", "exit", "push", "pop",
      // Core and integer theory symbols
      "true", "false", "not", "and", "or", "xor", "=>", "=", "distinct", "ite", "Bool", "Int",
      "+", "-", "*", "div", "mod", "abs", "<", "<=", ">", ">=", "is",
      // Symbols introduced by the encoding
      "U", "L", "nil", "cons", "head", "tail", "aList", "theList", "anInt", "theInt",
      "u$default"};
  return kReserved.count(symbol) > 0;
}

std::string NameTable::claim(std::string candidate) {
  // `|` and `\` cannot appear even in a quoted symbol.
  std::string clean;
  for (char ch : candidate) {
    if (ch == '|') {
      clean += "$bar";
    } else if (ch == '\\') {
      clean += "$bsl";
    } else {
      clean += ch;
    }
  }
  candidate = std::move(clean);
  if (used_.count(candidate) || is_reserved(candidate)) {
    std::string base = candidate;
    for (std::size_t i = 1;; ++i) {
      candidate = base + "$" + std::to_string(i);
      if (!used_.count(candidate) && !is_reserved(candidate)) break;
    }
  }
  used_.insert(candidate);
  return candidate;
}

NameTable NameTable::build(const std::vector<FunctionSig>& funcs,
                           const std::vector<PredicateSig>& preds) {
  NameTable table;
  std::map<std::string, std::size_t> pred_arities, func_arities;
  for (const auto& p : preds) ++pred_arities[p.name];
  for (const auto& f : funcs) ++func_arities[f.name];

  // Predicates first: a name shared with a constructor stays with the
  // predicate.
  for (const auto& p : preds) {
    std::string candidate = p.name;
    if (pred_arities[p.name] > 1 || is_reserved(candidate)) {
      candidate += "$" + std::to_string(p.arity);
    }
    Key key{Namespace::kPredicate, p.name, p.arity};
    std::string symbol = table.claim(candidate);
    table.forward_[key] = symbol;
    table.reverse_[symbol] = key;
  }
  for (const auto& f : funcs) {
    std::string candidate = f.name;
    if (func_arities[f.name] > 1 || is_reserved(candidate)) {
      candidate += "$" + std::to_string(f.arity);
    }
    if (pred_arities.count(f.name)) candidate += "$c";
    Key key{Namespace::kConstructor, f.name, f.arity};
    std::string symbol = table.claim(candidate);
    table.forward_[key] = symbol;
    table.reverse_[symbol] = key;
  }
  for (const auto& f : funcs) {
    const std::string& ctor = table.forward_.at({Namespace::kConstructor, f.name, f.arity});
    for (std::size_t i = 1; i <= f.arity; ++i) {
      // Selectors are keyed by the mangled constructor so that foo/1 and
      // foo/2 get distinct selector entries.
      Key key{Namespace::kSelector, ctor, i};
      std::string symbol = table.claim(ctor + "_" + std::to_string(i));
      table.forward_[key] = symbol;
      table.reverse_[symbol] = key;
    }
  }
  return table;
}

std::string NameTable::mangle(const std::string& name, std::size_t arity, Namespace ns) const {
  if (ns == Namespace::kVariable) {
    if (!used_.count(name) && !is_reserved(name)) return name;
    std::string base = name + "$v";
    std::string candidate = base;
    for (std::size_t i = 1; used_.count(candidate) || is_reserved(candidate); ++i) {
      candidate = base + std::to_string(i);
    }
    return candidate;
  }
  if (ns == Namespace::kSelector) {
    // Accept either the Prolog constructor name or its mangled symbol.
    auto it = forward_.find({Namespace::kSelector, name, arity});
    if (it != forward_.end()) return it->second;
    for (const auto& [key, symbol] : forward_) {
      if (std::get<0>(key) == Namespace::kConstructor && std::get<1>(key) == name) {
        auto sel = forward_.find({Namespace::kSelector, symbol, arity});
        if (sel != forward_.end()) return sel->second;
      }
    }
    throw Error("unknown selector " + name + "_" + std::to_string(arity));
  }
  auto it = forward_.find({ns, name, arity});
  if (it == forward_.end()) {
    throw Error(std::string(ns == Namespace::kPredicate ? "unknown predicate " : "unknown function ") +
                name + "/" + std::to_string(arity));
  }
  return it->second;
}

std::vector<std::string> NameTable::symbols() const {
  return std::vector<std::string>(used_.begin(), used_.end());
}

std::optional<std::tuple<Namespace, std::string, std::size_t>> NameTable::lookup(
    const std::string& symbol) const {
  auto it = reverse_.find(symbol);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

}  // namespace clp2chc
