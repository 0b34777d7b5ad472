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
#include "support/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "clp2chc/oracle.hpp"
#include "clp2chc/signatures.hpp"
#include "clp2chc/smtlib.hpp"
#include "clp2chc/translator.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

namespace props {

using namespace clp2chc;
using namespace clp2chc::syntax;

namespace {

Outcome failure(std::size_t cases, std::string detail) { return Outcome{false, cases, std::move(detail)}; }

std::string join(const std::set<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += "  " + x + "\n";
  return out;
}

}  // namespace

Outcome parse_roundtrip(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Database db = testgen::random_program(rng);
    std::string text = print_program(db);
    try {
      Database back = parse_program(text);
      if (!(back == db)) return failure(i + 1, "round-trip changed the program:\n" + text + "--- reparsed:\n" + print_program(back));
    } catch (const std::exception& e) {
      return failure(i + 1, std::string("reparse failed: ") + e.what() + "\n" + text);
    }
  }
  return Outcome{true, n, {}};
}

Outcome emit_parse_inverse(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    smt::Script s = testgen::random_script(rng);
    auto problems = smt::validate(s);
    if (!problems.empty()) return failure(i + 1, "generator produced an invalid script: " + problems[0]);
    for (auto style : {smt::DatatypeStyle::kModern, smt::DatatypeStyle::kLegacy}) {
      std::string text = smt::emit(s, style);
      try {
        if (!(smt::parse_script(text) == s)) return failure(i + 1, "emit/parse changed the script:\n" + text);
      } catch (const std::exception& e) {
        return failure(i + 1, std::string("parse_script failed: ") + e.what() + "\n" + text);
      }
    }
  }
  return Outcome{true, n, {}};
}

namespace {

using smt::SmtTerm;

SmtTerm rename_bound(const SmtTerm& t, std::map<std::string, std::string>& env, std::size_t& counter) {
  if (t.is<smt::Symbol>()) {
    auto it = env.find(t.as<smt::Symbol>().name);
    return it == env.end() ? t : smt::sym(it->second);
  }
  if (t.is<smt::Apply>()) {
    const auto& a = t.as<smt::Apply>();
    smt::Apply out{rename_bound(*a.head, env, counter), {}};
    for (const auto& x : a.args) out.args.push_back(rename_bound(x, env, counter));
    return SmtTerm{std::move(out)};
  }
  if (t.is<smt::IndexedTester>()) {
    const auto& x = t.as<smt::IndexedTester>();
    return smt::tester(x.constructor, rename_bound(*x.arg, env, counter));
  }
  if (t.is<smt::Forall>()) {
    const auto& f = t.as<smt::Forall>();
    auto saved = env;
    std::vector<smt::SortedVar> vars;
    for (const auto& v : f.bindings) {
      std::string fresh = "renamed" + std::to_string(counter++);
      env[v.name] = fresh;
      vars.push_back({fresh, v.sort});
    }
    SmtTerm body = rename_bound(*f.body, env, counter);
    env = std::move(saved);
    return smt::forall(std::move(vars), std::move(body));
  }
  return t;
}

smt::Script alpha_rename(const smt::Script& s) {
  smt::Script out = s;
  std::size_t counter = 0;
  for (auto& c : out.commands) {
    if (auto* a = std::get_if<smt::Assert>(&c)) {
      std::map<std::string, std::string> env;
      a->term = rename_bound(a->term, env, counter);
    }
  }
  return out;
}

smt::Script perturb(const smt::Script& s) {
  smt::Script out = s;
  out.commands.insert(out.commands.end() - 1, smt::Assert{smt::sym("true")});
  return out;
}

}  // namespace

Outcome structural_equivalence(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    smt::Script s = testgen::random_script(rng);
    smt::Script restyled = smt::parse_script(smt::emit(s, smt::DatatypeStyle::kLegacy));
    smt::Script renamed = alpha_rename(restyled);
    smt::Script other = perturb(s);
    const std::vector<const smt::Script*> same{&s, &restyled, &renamed};
    for (auto* a : same) {
      for (auto* b : same) {
        if (!smt::structurally_equal(*a, *b)) {
          return failure(i + 1, "variants not equal:\n" + smt::emit(*a) + "---\n" + smt::emit(*b));
        }
      }
      if (smt::structurally_equal(*a, other) || smt::structurally_equal(other, *a)) {
        return failure(i + 1, "perturbed script compared equal:\n" + smt::emit(other));
      }
    }
  }
  return Outcome{true, n, {}};
}

Outcome translation_well_formed(const std::vector<Database>& programs) {
  for (std::size_t i = 0; i < programs.size(); ++i) {
    for (bool peephole : {true, false}) {
      TranslateOptions opts;
      opts.peephole = peephole;
      smt::Script s;
      try {
        s = translate_program(programs[i], opts);
      } catch (const std::exception& e) {
        return failure(i + 1, std::string("translation threw: ") + e.what() + "\n");
      }
      auto sorts = check_sorts(s);
      if (!sorts.empty()) return failure(i + 1, "sort error: " + sorts[0] + "\n" + smt::emit(s));
      auto shape = check_horn_shape(s);
      if (!shape.empty()) return failure(i + 1, "not Horn: " + shape[0] + "\n" + smt::emit(s));
      auto invalid = smt::validate(s);
      if (!invalid.empty()) return failure(i + 1, "invalid script: " + invalid[0]);
    }
  }
  return Outcome{true, programs.size(), {}};
}

Outcome generated_translation_well_formed(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  std::vector<Database> programs;
  for (std::size_t i = 0; i < n; ++i) programs.push_back(testgen::random_program(rng));
  Outcome o = translation_well_formed(programs);
  if (!o.ok) o.detail = print_program(programs[o.cases - 1]) + o.detail;
  return o;
}

Outcome negated_predicate_rejected() {
  const std::vector<std::string> programs{
      "p(X) :- \\+ q(X).",
      "?- \\+ man(tom).",
      "p :- \\+ \\+ q.",
      "r(X) :- s(X), \\+ (t(X)).",
  };
  for (std::size_t i = 0; i < programs.size(); ++i) {
    Database db = parse_program(programs[i]);
    try {
      translate_program(db);
      return failure(i + 1, "no error for " + programs[i]);
    } catch (const NegatedPredicateError& e) {
      if (!e.span()) return failure(i + 1, "error without a source span for " + programs[i]);
    }
  }
  // Negated constraints stay legal.
  Database ok = parse_program("p(X) :- q(X), \\+ X = a, \\+ X #< 3.");
  try {
    translate_program(ok);
  } catch (const std::exception& e) {
    return failure(programs.size() + 1, std::string("negated constraint rejected: ") + e.what());
  }
  return Outcome{true, programs.size() + 1, {}};
}

Outcome mangle_distinct(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  const std::vector<std::string> names{"f", "p", "U", "L", "assert", "and", "p$1", "f$c", "f_1", "f$1_1",
                                       "x y", "nil", "a|b", "a$barb", "theInt", "u$default", "Int"};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FunctionSig> funcs;
    std::vector<PredicateSig> preds;
    std::set<std::pair<std::string, std::size_t>> fseen, pseen;
    std::size_t nf = rng.below(8), np = rng.below(6);
    for (std::size_t k = 0; k < nf; ++k) {
      std::string name = rng.pick(names);
      std::size_t arity = rng.below(3);
      if (fseen.insert({name, arity}).second) funcs.push_back({name, arity, {}});
    }
    for (std::size_t k = 0; k < np; ++k) {
      std::string name = rng.pick(names);
      std::size_t arity = rng.below(3);
      if (pseen.insert({name, arity}).second) preds.push_back({name, arity});
    }
    NameTable t = NameTable::build(funcs, preds);
    std::vector<std::string> symbols;
    for (const auto& f : funcs) {
      symbols.push_back(t.constructor(f.name, f.arity));
      for (std::size_t a = 1; a <= f.arity; ++a) symbols.push_back(t.selector(t.constructor(f.name, f.arity), a));
    }
    for (const auto& p : preds) symbols.push_back(t.predicate(p.name, p.arity));
    std::set<std::string> distinct(symbols.begin(), symbols.end());
    std::ostringstream desc;
    for (const auto& s : symbols) desc << s << ' ';
    if (distinct.size() != symbols.size()) return failure(i + 1, "duplicate symbols: " + desc.str());
    for (const auto& s : symbols) {
      if (NameTable::is_reserved(s)) return failure(i + 1, "reserved symbol emitted: " + s);
      if (s.find('|') != std::string::npos || s.find('\\') != std::string::npos) {
        return failure(i + 1, "unprintable symbol: " + s);
      }
    }
    for (const std::string v : {"X", "U", "L", "f", "p"}) {
      if (distinct.count(t.variable(v))) return failure(i + 1, "variable clashes: " + v);
    }
    if (NameTable::build(funcs, preds).symbols() != t.symbols()) return failure(i + 1, "not deterministic");
  }
  return Outcome{true, n, {}};
}

Outcome lists_feature(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    testgen::ProgramShape shape;
    shape.lists = rng.chance(0.5);
    Database db = testgen::random_program(rng, shape);
    std::string text = print_program(db);
    bool bracket = text.find('[') != std::string::npos;
    if (detect_features(db).uses_lists != bracket) return failure(i + 1, "feature mismatch for:\n" + text);
  }
  return Outcome{true, n, {}};
}

Outcome emit_line_width(std::size_t n, std::uint64_t seed) {
  testgen::Rng rng(seed);
  auto check = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.size() > 120 && line.find('|') == std::string::npos) return line;
    }
    return {};
  };
  for (std::size_t i = 0; i < n; ++i) {
    smt::Script s = i % 2 ? testgen::random_script(rng) : translate_program(testgen::random_program(rng));
    for (auto style : {smt::DatatypeStyle::kModern, smt::DatatypeStyle::kLegacy}) {
      std::string bad = check(smt::emit(s, style));
      if (!bad.empty()) return failure(i + 1, "line of " + std::to_string(bad.size()) + " chars: " + bad);
    }
  }
  return Outcome{true, n, {}};
}

Database tiny_program(std::uint64_t seed, bool lists, bool integers) {
  testgen::Rng rng(seed);
  const std::vector<std::string> vars{"X", "Y", "Z"};
  std::function<Term(std::size_t)> term = [&](std::size_t depth) -> Term {
    std::size_t k = rng.below(depth > 1 ? 6 : 3);
    switch (k) {
      case 0:
      case 1:
        return make_var(rng.pick(vars));
      case 2:
        if (integers && rng.chance(0.5)) return make_int(Integer(rng.below(3)));
        return make_atom(rng.chance(0.5) ? "a" : "b");
      case 3:
        return make_compound("f", {term(depth - 1)});
      case 4:
        if (lists) {
          if (rng.chance(0.3)) return make_list({});
          if (rng.chance(0.4)) return make_list({term(depth - 1)}, make_var(rng.pick(vars)));
          return make_list({term(depth - 1)});
        }
        [[fallthrough]];
      default:
        if (integers) {
          return make_arith(rng.chance(0.7) ? ArithOp::kAdd : ArithOp::kSub,
                            {make_var(rng.pick(vars)), make_int(Integer(rng.below(2) + 1))});
        }
        return make_var(rng.pick(vars));
    }
  };
  const std::vector<std::pair<std::string, std::size_t>> preds{{"p", 1}, {"q", 1}, {"r", 2}};
  auto call = [&]() {
    auto [name, arity] = rng.pick(preds);
    Call c{name, {}};
    for (std::size_t i = 0; i < arity; ++i) c.args.push_back(term(2));
    return c;
  };
  auto constraint = [&]() -> BodyItem {
    Term lhs = make_var(rng.pick(vars));
    std::size_t k = rng.below(integers ? 5 : 3);
    switch (k) {
      case 0: return BodyItem{Unify{lhs, term(2)}, {}};
      case 1: return BodyItem{TermDiseq{lhs, term(2)}, {}};
      case 2: return BodyItem{Negation{BodyItem{Unify{lhs, term(2)}, {}}}, {}};
      case 3: {
        static const CompareOp ops[] = {CompareOp::kLt, CompareOp::kGe, CompareOp::kNe};
        return BodyItem{ArithConstraint{ops[rng.below(3)], lhs, make_int(Integer(rng.below(3)))}, {}};
      }
      default:
        return BodyItem{ArithConstraint{CompareOp::kEq, lhs,
                                        make_arith(ArithOp::kAdd, {make_var(rng.pick(vars)), make_int(1)})},
                        {}};
    }
  };
  Database db;
  std::size_t facts = 1 + rng.below(3), rules = 1 + rng.below(3);
  for (std::size_t i = 0; i < facts; ++i) db.clauses.push_back(Clause{ClauseKind::kFact, call(), {}, {}});
  for (std::size_t i = 0; i < rules; ++i) {
    Clause c{ClauseKind::kRule, call(), {}, {}};
    std::size_t m = 1 + rng.below(3);
    for (std::size_t j = 0; j < m; ++j) c.body.push_back(rng.chance(0.5) ? BodyItem{call(), {}} : constraint());
    db.clauses.push_back(std::move(c));
  }
  Clause q{ClauseKind::kQuery, std::nullopt, {BodyItem{call(), {}}}, {}};
  if (rng.chance(0.5)) q.body.push_back(constraint());
  db.clauses.push_back(std::move(q));
  return db;
}

Outcome oracle_matches_reference(std::size_t n, std::uint64_t seed) {
  std::size_t compared = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool lists = i % 3 == 0;
    bool integers = i % 2 == 0;
    Database db = tiny_program(seed + i, lists, integers);

    reference::Bounds rb;
    rb.depth = lists ? 2 : 3;
    rb.max_list_len = 1;
    oracle::Bounds ob;
    ob.term_depth = rb.depth;
    ob.int_min = rb.int_min;
    ob.int_max = rb.int_max;
    ob.max_list_len = rb.max_list_len;
    ob.max_iterations = 1000;

    if (reference::universe(db, rb).size() > 50) continue;
    ++compared;
    oracle::GroundFactSet got = oracle::fixpoint(db, ob);
    auto got_strings = got.to_strings();
    std::set<std::string> mine(got_strings.begin(), got_strings.end());
    std::set<std::string> expected = reference::fixpoint(db, rb);
    if (!got.saturated()) return failure(i + 1, "oracle did not saturate:\n" + print_program(db));
    if (mine != expected) {
      return failure(i + 1, "fixpoints differ for\n" + print_program(db) + "oracle:\n" + join(mine) +
                                "reference:\n" + join(expected));
    }
    bool derivable = oracle::program_query_holds(db, ob).derivable;
    if (derivable != reference::query_derivable(db, rb)) {
      return failure(i + 1, "query answers differ for\n" + print_program(db));
    }
  }
  return Outcome{true, compared, {}};
}

Outcome oracle_monotone_deterministic(std::size_t n, std::uint64_t seed) {
  for (std::size_t i = 0; i < n; ++i) {
    bool lists = i % 2 == 0;
    Database db = tiny_program(seed + i, lists, true);
    oracle::Bounds small;
    small.term_depth = 2;
    small.int_min = 0;
    small.int_max = 2;
    small.max_list_len = 1;
    // Grow one dimension at a time so the universe stays small.
    oracle::Bounds large = small;
    switch (i % 3) {
      case 0: large.term_depth = 3; break;
      case 1: large.int_min = -1; large.int_max = 4; break;
      default: large.max_list_len = 2; break;
    }
    auto a = oracle::fixpoint(db, small).to_strings();
    auto b = oracle::fixpoint(db, large).to_strings();
    std::set<std::string> big(b.begin(), b.end());
    for (const auto& f : a) {
      if (!big.count(f)) return failure(i + 1, "fact lost when enlarging bounds: " + f + "\n" + print_program(db));
    }
    auto again = oracle::fixpoint(db, small);
    if (again.to_strings() != a) return failure(i + 1, "two runs differ:\n" + print_program(db));
  }
  return Outcome{true, n, {}};
}

}  // namespace props
