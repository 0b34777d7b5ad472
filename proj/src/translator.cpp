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
#include "clp2chc/translator.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace clp2chc {

using namespace syntax;
using smt::SmtTerm;
using smt::app;
using smt::sym;

smt::SmtTerm SideCondition::to_smt() const {
  return smt::tester(kind == Kind::kIsInt ? symbols::kAnInt : symbols::kAList, term);
}

void JudgementResult::add_condition(SideCondition c) {
  if (std::find(conditions.begin(), conditions.end(), c) == conditions.end()) {
    conditions.push_back(std::move(c));
  }
}

void JudgementResult::add_conditions(const std::vector<SideCondition>& cs) {
  for (const auto& c : cs) add_condition(c);
}

namespace {

SideCondition is_int(SmtTerm t) { return {SideCondition::Kind::kIsInt, std::move(t)}; }
SideCondition is_list(SmtTerm t) { return {SideCondition::Kind::kIsList, std::move(t)}; }

SmtTerm the_int(SmtTerm t) { return app(symbols::kTheInt, {std::move(t)}); }
SmtTerm an_int(SmtTerm t) { return app(symbols::kAnInt, {std::move(t)}); }

// ---------------------------------------------------------------------------
// Peephole
// ---------------------------------------------------------------------------

SmtTerm simplify(const SmtTerm& t) {
  if (!t.is<smt::Apply>()) {
    if (t.is<smt::IndexedTester>()) {
      const auto& it = t.as<smt::IndexedTester>();
      return smt::tester(it.constructor, simplify(*it.arg));
    }
    return t;
  }
  const auto& a = t.as<smt::Apply>();
  std::vector<SmtTerm> args;
  for (const auto& x : a.args) args.push_back(simplify(x));
  std::string_view head = t.head_name();
  if (args.size() == 1) {
    if (head == symbols::kTheInt && args[0].head_name() == symbols::kAnInt) {
      return args[0].as<smt::Apply>().args[0];
    }
    if (head == symbols::kTheList && args[0].head_name() == symbols::kAList) {
      return args[0].as<smt::Apply>().args[0];
    }
  }
  return SmtTerm{smt::Apply{a.head, std::move(args)}};
}

bool holds_by_construction(const SideCondition& c) {
  return c.term.head_name() ==
         (c.kind == SideCondition::Kind::kIsInt ? symbols::kAnInt : symbols::kAList);
}

JudgementResult simplify(JudgementResult r) {
  JudgementResult out{simplify(r.translated), {}};
  for (auto& c : r.conditions) {
    SideCondition s{c.kind, simplify(c.term)};
    if (!holds_by_construction(s)) out.add_condition(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

std::string_view smt_operator(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "+";
    case ArithOp::kSub:
    case ArithOp::kNeg: return "-";
    case ArithOp::kMul: return "*";
    case ArithOp::kDiv: return "div";
    case ArithOp::kMod: return "mod";
  }
  return "?";
}

JudgementResult mechanical_term(const Term& t, const NameTable& table) {
  return std::visit(
      [&](const auto& n) -> JudgementResult {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return {sym(table.variable(n.name)), {}};
        } else if constexpr (std::is_same_v<T, Atom>) {
          return {sym(table.constructor(n.name, 0)), {}};
        } else if constexpr (std::is_same_v<T, Compound>) {
          JudgementResult r{sym(""), {}};
          std::vector<SmtTerm> args;
          for (const auto& a : n.args) {
            auto sub = mechanical_term(a, table);
            args.push_back(std::move(sub.translated));
            r.add_conditions(sub.conditions);
          }
          r.translated = app(table.constructor(n.name, n.args.size()), std::move(args));
          return r;
        } else if constexpr (std::is_same_v<T, ListTerm>) {
          JudgementResult r{sym(""), {}};
          std::vector<SmtTerm> elems;
          for (const auto& e : n.elements) {
            auto sub = mechanical_term(e, table);
            elems.push_back(std::move(sub.translated));
            r.add_conditions(sub.conditions);
          }
          SmtTerm rest = sym(symbols::kNil);
          if (n.tail) {
            auto sub = mechanical_term(**n.tail, table);
            r.add_conditions(sub.conditions);
            r.add_condition(is_list(sub.translated));
            rest = app(symbols::kTheList, {std::move(sub.translated)});
          }
          for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
            rest = app(symbols::kCons, {std::move(*it), std::move(rest)});
          }
          r.translated = app(symbols::kAList, {std::move(rest)});
          return r;
        } else if constexpr (std::is_same_v<T, IntLit>) {
          return {an_int(smt::num(n.value)), {}};
        } else {
          if (n.op == ArithOp::kNeg && n.operands[0].template is<IntLit>()) {
            const Integer& v = n.operands[0].template as<IntLit>().value;
            return {an_int(app("-", {smt::num(v)})), {}};
          }
          JudgementResult r{sym(""), {}};
          std::vector<SmtTerm> operands;
          std::vector<SideCondition> own;
          for (const auto& o : n.operands) {
            auto sub = mechanical_term(o, table);
            r.add_conditions(sub.conditions);
            own.push_back(is_int(sub.translated));
            operands.push_back(the_int(std::move(sub.translated)));
          }
          r.add_conditions(own);
          r.translated = an_int(app(std::string(smt_operator(n.op)), std::move(operands)));
          return r;
        }
      },
      t.node);
}

// ---------------------------------------------------------------------------
// Body items
// ---------------------------------------------------------------------------

std::string_view smt_comparison(CompareOp op) {
  switch (op) {
    case CompareOp::kEq:
    case CompareOp::kNe: return "=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
  }
  return "?";
}

JudgementResult call_result(const Call& c, const NameTable& table, const TranslateOptions& opts) {
  JudgementResult r{sym(""), {}};
  std::vector<SmtTerm> args;
  for (const auto& a : c.args) {
    auto sub = translate_term(a, table, opts);
    args.push_back(std::move(sub.translated));
    r.add_conditions(sub.conditions);
  }
  r.translated = app(table.predicate(c.predicate, c.args.size()), std::move(args));
  return r;
}

JudgementResult body_item(const BodyItem& b, const NameTable& table, const TranslateOptions& opts) {
  return std::visit(
      [&](const auto& n) -> JudgementResult {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Call>) {
          return call_result(n, table, opts);
        } else if constexpr (std::is_same_v<T, Unify> || std::is_same_v<T, TermDiseq>) {
          auto l = translate_term(n.lhs, table, opts);
          auto r = translate_term(n.rhs, table, opts);
          JudgementResult out{app("=", {l.translated, r.translated}), l.conditions};
          out.add_conditions(r.conditions);
          if constexpr (std::is_same_v<T, TermDiseq>) {
            out.translated = app("not", {std::move(out.translated)});
          }
          return out;
        } else if constexpr (std::is_same_v<T, Negation>) {
          const BodyItem& inner = *n.inner;
          if (inner.is<Call>()) {
            throw NegatedPredicateError(
                "negation of predicate " + inner.as<Call>().predicate + "/" +
                    std::to_string(inner.as<Call>().args.size()) +
                    " is not a constrained Horn clause",
                b.span);
          }
          auto sub = body_item(inner, table, opts);
          sub.translated = app("not", {std::move(sub.translated)});
          return sub;
        } else {
          auto l = translate_term(n.lhs, table, opts);
          auto r = translate_term(n.rhs, table, opts);
          JudgementResult out{sym(""), l.conditions};
          out.add_conditions(r.conditions);
          bool wrapped = l.translated.head_name() == symbols::kAnInt ||
                         r.translated.head_name() == symbols::kAnInt;
          if (opts.peephole && n.op == CompareOp::kEq && wrapped) {
            // (= s t) with an anInt side already forces both sides to be
            // integers.
            out.translated = app("=", {l.translated, r.translated});
            return out;
          }
          out.add_condition(is_int(l.translated));
          out.add_condition(is_int(r.translated));
          out.translated = app(std::string(smt_comparison(n.op)),
                               {the_int(l.translated), the_int(r.translated)});
          if (n.op == CompareOp::kNe) out.translated = app("not", {std::move(out.translated)});
          return out;
        }
      },
      b.node);
}

SmtTerm conjunction(std::vector<SmtTerm> items) {
  if (items.size() == 1) return std::move(items.front());
  return app("and", std::move(items));
}

bool occurs_in(const std::string& var, const Term& t) {
  std::vector<std::string> vars;
  collect_variables(t, vars);
  return std::find(vars.begin(), vars.end(), var) != vars.end();
}

void occurs_check_notes(const BodyItem& b, std::vector<Diagnostic>& out) {
  if (b.is<Negation>()) return occurs_check_notes(*b.as<Negation>().inner, out);
  if (!b.is<Unify>()) return;
  const auto& u = b.as<Unify>();
  auto check = [&](const Term& var_side, const Term& other) {
    if (var_side.is<Var>() && !other.is<Var>() && occurs_in(var_side.as<Var>().name, other)) {
      out.push_back({Diagnostic::Severity::kNote,
                     "variable " + var_side.as<Var>().name +
                         " occurs on both sides of '='; finite-term semantics make this "
                         "equation unsatisfiable",
                     b.span});
      return true;
    }
    return false;
  };
  if (!check(u.lhs, u.rhs)) check(u.rhs, u.lhs);
}

}  // namespace

JudgementResult translate_term(const Term& t, const NameTable& table, const TranslateOptions& opts) {
  auto r = mechanical_term(t, table);
  return opts.peephole ? simplify(std::move(r)) : r;
}

JudgementResult translate_body_item(const BodyItem& b, const NameTable& table,
                                    const TranslateOptions& opts) {
  auto r = body_item(b, table, opts);
  return opts.peephole ? simplify(std::move(r)) : r;
}

smt::Command translate_clause(const Clause& c, const NameTable& table,
                              const TranslateOptions& opts) {
  std::vector<SmtTerm> antecedent;
  JudgementResult conditions{sym(""), {}};
  SmtTerm consequent = sym("false");
  if (c.head) {
    auto head = call_result(*c.head, table, opts);
    if (opts.peephole) head = simplify(std::move(head));
    consequent = std::move(head.translated);
    conditions.add_conditions(head.conditions);
  }
  for (const auto& b : c.body) {
    auto item = translate_body_item(b, table, opts);
    antecedent.push_back(std::move(item.translated));
    conditions.add_conditions(item.conditions);
  }
  for (const auto& cond : conditions.conditions) antecedent.push_back(cond.to_smt());

  SmtTerm body = antecedent.empty()
                     ? std::move(consequent)
                     : app("=>", {conjunction(std::move(antecedent)), std::move(consequent)});
  std::vector<smt::SortedVar> bindings;
  for (const auto& v : clause_variables(c)) {
    bindings.push_back({table.variable(v), symbols::kUniverse});
  }
  if (!bindings.empty()) body = smt::forall(std::move(bindings), std::move(body));
  return smt::Assert{std::move(body)};
}

std::vector<smt::Command> build_declarations(const std::vector<FunctionSig>& funcs,
                                             const std::vector<PredicateSig>& preds,
                                             const FeatureSet& feats, const NameTable& table) {
  smt::Datatype universe{symbols::kUniverse, {}};
  if (feats.uses_integers) {
    universe.constructors.push_back({symbols::kAnInt, {{symbols::kTheInt, "Int"}}});
  }
  if (feats.uses_lists) {
    universe.constructors.push_back({symbols::kAList, {{symbols::kTheList, symbols::kList}}});
  }
  for (const auto& f : funcs) {
    smt::Constructor ctor{table.constructor(f.name, f.arity), {}};
    for (std::size_t i = 1; i <= f.arity; ++i) {
      ctor.selectors.push_back({table.selector(ctor.name, i), symbols::kUniverse});
    }
    universe.constructors.push_back(std::move(ctor));
  }
  // U must be well-founded: with no constructor buildable without a U
  // argument (e.g. only f/1) there would be no values at all.
  bool has_base = std::any_of(universe.constructors.begin(), universe.constructors.end(), [](const auto& c) {
    return std::none_of(c.selectors.begin(), c.selectors.end(),
                        [](const smt::Selector& s) { return s.sort == symbols::kUniverse; });
  });
  if (!has_base) universe.constructors.push_back({symbols::kDefault, {}});

  smt::DeclareDatatypes types{{std::move(universe)}};
  if (feats.uses_lists) {
    types.sorts.push_back(
        {symbols::kList,
         {{symbols::kNil, {}},
          {symbols::kCons, {{symbols::kHead, symbols::kUniverse}, {symbols::kTail, symbols::kList}}}}});
  }
  std::vector<smt::Command> out{std::move(types)};
  for (const auto& p : preds) {
    out.push_back(smt::DeclareFun{table.predicate(p.name, p.arity),
                                  std::vector<std::string>(p.arity, symbols::kUniverse), "Bool"});
  }
  return out;
}

Translation translate(const Database& db, const TranslateOptions& opts) {
  auto funcs = collect_functions(db);
  auto preds = collect_predicates(db);
  auto feats = detect_features(db);
  if (opts.force_features) feats = FeatureSet{true, true};

  Translation out{{}, NameTable::build(funcs, preds), {}};
  auto& commands = out.script.commands;
  commands.push_back(smt::SetLogic{"HORN"});
  for (auto& d : build_declarations(funcs, preds, feats, out.names)) commands.push_back(std::move(d));
  for (const auto& c : db.clauses) {
    commands.push_back(translate_clause(c, out.names, opts));
    for (const auto& b : c.body) occurs_check_notes(b, out.notes);
  }
  commands.push_back(smt::CheckSat{});
  return out;
}

smt::Script translate_program(const Database& db, const TranslateOptions& opts) {
  return translate(db, opts).script;
}

// ---------------------------------------------------------------------------
// Sort checking
// ---------------------------------------------------------------------------

namespace {

struct FunSort {
  std::vector<std::string> args;
  std::string result;
};

class SortChecker {
 public:
  explicit SortChecker(const smt::Script& s) {
    for (const auto& c : s.commands) {
      if (auto* d = std::get_if<smt::DeclareDatatypes>(&c)) {
        for (const auto& dt : d->sorts) {
          for (const auto& ctor : dt.constructors) {
            FunSort f{{}, dt.name};
            for (const auto& sel : ctor.selectors) {
              f.args.push_back(sel.sort);
              funs_[sel.name] = FunSort{{dt.name}, sel.sort};
            }
            funs_[ctor.name] = f;
            ctor_sort_[ctor.name] = dt.name;
          }
        }
      } else if (auto* f = std::get_if<smt::DeclareFun>(&c)) {
        funs_[f->name] = FunSort{f->arg_sorts, f->result_sort};
      }
    }
  }

  void check(const smt::Script& s, std::vector<std::string>& errors) {
    for (std::size_t i = 0; i < s.commands.size(); ++i) {
      if (auto* a = std::get_if<smt::Assert>(&s.commands[i])) {
        errors_.clear();
        auto sort = infer(a->term, {});
        if (sort && *sort != "Bool") errors_.push_back("assertion is not Boolean");
        for (const auto& e : errors_) {
          errors.push_back("command " + std::to_string(i + 1) + ": " + e);
        }
      }
    }
  }

 private:
  using Env = std::map<std::string, std::string>;

  std::optional<std::string> fail(const std::string& msg) {
    errors_.push_back(msg);
    return std::nullopt;
  }

  std::optional<std::string> infer(const SmtTerm& t, const Env& env) {
    if (t.is<smt::IntConst>()) return "Int";
    if (t.is<smt::Symbol>()) {
      const std::string& name = t.as<smt::Symbol>().name;
      if (auto it = env.find(name); it != env.end()) return it->second;
      if (name == "true" || name == "false") return "Bool";
      auto it = funs_.find(name);
      if (it == funs_.end()) return fail("unknown symbol " + name);
      if (!it->second.args.empty()) return fail(name + " used without arguments");
      return it->second.result;
    }
    if (t.is<smt::Forall>()) {
      const auto& f = t.as<smt::Forall>();
      Env inner = env;
      for (const auto& b : f.bindings) inner[b.name] = b.sort;
      auto body = infer(*f.body, inner);
      if (body && *body != "Bool") return fail("quantified body is not Boolean");
      return "Bool";
    }
    if (t.is<smt::IndexedTester>()) {
      const auto& it = t.as<smt::IndexedTester>();
      auto ctor = ctor_sort_.find(it.constructor);
      if (ctor == ctor_sort_.end()) return fail("tester of unknown constructor " + it.constructor);
      expect(*it.arg, ctor->second, env, "tester argument");
      return "Bool";
    }
    const auto& a = t.as<smt::Apply>();
    if (!a.head->is<smt::Symbol>()) return fail("application of a non-symbol");
    const std::string& head = a.head->as<smt::Symbol>().name;
    std::size_t n = a.args.size();

    auto all = [&](const std::string& sort) {
      for (const auto& x : a.args) expect(x, sort, env, head + " argument");
    };
    if (head == "+" || head == "*" || (head == "-" && n >= 1)) {
      all("Int");
      return "Int";
    }
    if (head == "div" || head == "mod") {
      if (n != 2) return fail(head + " expects 2 arguments");
      all("Int");
      return "Int";
    }
    if (head == "<" || head == "<=" || head == ">" || head == ">=") {
      if (n != 2) return fail(head + " expects 2 arguments");
      all("Int");
      return "Bool";
    }
    if (head == "and" || head == "or" || head == "not" || head == "=>") {
      if (head == "not" && n != 1) return fail("not expects 1 argument");
      if (head == "=>" && n != 2) return fail("=> expects 2 arguments");
      all("Bool");
      return "Bool";
    }
    if (head == "=") {
      if (n != 2) return fail("= expects 2 arguments");
      auto l = infer(a.args[0], env);
      auto r = infer(a.args[1], env);
      if (l && r && *l != *r) return fail("= over different sorts " + *l + " and " + *r);
      return "Bool";
    }
    auto it = funs_.find(head);
    if (it == funs_.end()) return fail("unknown function " + head);
    if (it->second.args.size() != n) {
      return fail(head + " expects " + std::to_string(it->second.args.size()) + " arguments");
    }
    for (std::size_t i = 0; i < n; ++i) expect(a.args[i], it->second.args[i], env, head + " argument");
    return it->second.result;
  }

  void expect(const SmtTerm& t, const std::string& sort, const Env& env, const std::string& what) {
    auto s = infer(t, env);
    if (s && *s != sort) {
      errors_.push_back(what + " " + smt::to_string(t) + " has sort " + *s + ", expected " + sort);
    }
  }

  std::map<std::string, FunSort> funs_;
  std::map<std::string, std::string> ctor_sort_;
  std::vector<std::string> errors_;
};

bool mentions_predicate(const SmtTerm& t, const std::set<std::string>& preds) {
  if (t.is<smt::Symbol>()) return preds.count(t.as<smt::Symbol>().name) > 0;
  if (t.is<smt::Apply>()) {
    const auto& a = t.as<smt::Apply>();
    if (mentions_predicate(*a.head, preds)) return true;
    return std::any_of(a.args.begin(), a.args.end(),
                       [&](const SmtTerm& x) { return mentions_predicate(x, preds); });
  }
  if (t.is<smt::Forall>()) return mentions_predicate(*t.as<smt::Forall>().body, preds);
  if (t.is<smt::IndexedTester>()) return mentions_predicate(*t.as<smt::IndexedTester>().arg, preds);
  return false;
}

bool is_predicate_atom(const SmtTerm& t, const std::set<std::string>& preds) {
  if (t.is<smt::Symbol>()) return preds.count(t.as<smt::Symbol>().name) > 0;
  if (!t.is<smt::Apply>() || !preds.count(std::string(t.head_name()))) return false;
  const auto& args = t.as<smt::Apply>().args;
  return std::none_of(args.begin(), args.end(),
                      [&](const SmtTerm& x) { return mentions_predicate(x, preds); });
}

}  // namespace

std::vector<std::string> check_sorts(const smt::Script& s) {
  std::vector<std::string> errors;
  SortChecker(s).check(s, errors);
  return errors;
}

std::vector<std::string> check_horn_shape(const smt::Script& s) {
  std::set<std::string> preds;
  for (const auto& c : s.commands) {
    if (auto* f = std::get_if<smt::DeclareFun>(&c); f && f->result_sort == "Bool") {
      preds.insert(f->name);
    }
  }
  std::vector<std::string> errors;
  for (std::size_t i = 0; i < s.commands.size(); ++i) {
    auto* a = std::get_if<smt::Assert>(&s.commands[i]);
    if (!a) continue;
    const SmtTerm* body = &a->term;
    if (body->is<smt::Forall>()) body = &*body->as<smt::Forall>().body;
    auto where = "command " + std::to_string(i + 1) + ": ";
    if (body->head_name() != "=>") {
      if (!is_predicate_atom(*body, preds)) errors.push_back(where + "fact is not a predicate atom");
      continue;
    }
    const auto& impl = body->as<smt::Apply>();
    const SmtTerm& ante = impl.args[0];
    const SmtTerm& cons = impl.args[1];
    if (!cons.is_symbol("false") && !is_predicate_atom(cons, preds)) {
      errors.push_back(where + "consequent is neither a predicate atom nor false");
    }
    std::vector<const SmtTerm*> conjuncts;
    if (ante.head_name() == "and") {
      for (const auto& x : ante.as<smt::Apply>().args) conjuncts.push_back(&x);
    } else {
      conjuncts.push_back(&ante);
    }
    for (const auto* x : conjuncts) {
      if (x->is<smt::Forall>()) {
        errors.push_back(where + "quantifier in antecedent");
      } else if (!is_predicate_atom(*x, preds) && mentions_predicate(*x, preds)) {
        errors.push_back(where + "predicate under a connective: " + smt::to_string(*x));
      }
    }
  }
  return errors;
}

}  // namespace clp2chc
