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
#include "clp2chc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <unordered_set>

#include "clp2chc/translator.hpp"

namespace clp2chc::oracle {

using namespace syntax;

// ---------------------------------------------------------------------------
// TermStore
// ---------------------------------------------------------------------------

std::size_t TermStore::KeyHash::operator()(const std::vector<std::uint32_t>& k) const {
  std::size_t h = k.size();
  for (auto x : k) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint32_t TermStore::name_id(const std::string& name) {
  auto [it, inserted] = name_ids_.try_emplace(name, static_cast<std::uint32_t>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

TermId TermStore::intern(Kind kind, std::uint32_t name, std::vector<TermId> children) {
  std::vector<std::uint32_t> key;
  key.reserve(children.size() + 2);
  key.push_back(static_cast<std::uint32_t>(kind));
  key.push_back(name);
  key.insert(key.end(), children.begin(), children.end());
  if (auto it = index_.find(key); it != index_.end()) return it->second;

  std::size_t depth = 1;
  bool ok = true;
  for (TermId c : children) {
    depth = std::max(depth, nodes_[c].depth + 1);
    ok = ok && nodes_[c].in_bounds;
  }
  if (kind == Kind::kInt) ok = ints_[name] >= bounds_.int_min && ints_[name] <= bounds_.int_max;
  if (kind == Kind::kList) ok = ok && children.size() <= bounds_.max_list_len;
  ok = ok && depth <= bounds_.term_depth;

  TermId id = static_cast<TermId>(nodes_.size());
  nodes_.push_back(Node{kind, name, std::move(children), depth, ok});
  index_.emplace(std::move(key), id);
  return id;
}

TermId TermStore::atom(const std::string& name) { return intern(Kind::kAtom, name_id(name), {}); }

TermId TermStore::integer(const Integer& value) {
  auto [it, inserted] = int_ids_.try_emplace(value, static_cast<std::uint32_t>(ints_.size()));
  if (inserted) ints_.push_back(value);
  return intern(Kind::kInt, it->second, {});
}

TermId TermStore::compound(const std::string& name, std::vector<TermId> args) {
  return intern(Kind::kCompound, name_id(name), std::move(args));
}

TermId TermStore::list(std::vector<TermId> elements) {
  return intern(Kind::kList, 0, std::move(elements));
}

namespace {

std::optional<Integer> ground_value(const Term& t) {
  if (t.is<IntLit>()) return t.as<IntLit>().value;
  if (!t.is<ArithExpr>()) return std::nullopt;
  const auto& e = t.as<ArithExpr>();
  auto a = ground_value(e.operands[0]);
  if (!a) return std::nullopt;
  if (e.op == ArithOp::kNeg) return Integer(-*a);
  auto b = ground_value(e.operands[1]);
  if (!b) return std::nullopt;
  switch (e.op) {
    case ArithOp::kAdd: return Integer(*a + *b);
    case ArithOp::kSub: return Integer(*a - *b);
    case ArithOp::kMul: return Integer(*a * *b);
    default: return std::nullopt;
  }
}

}  // namespace

TermId TermStore::from_term(const Term& t) {
  if (t.is<Atom>()) return atom(t.as<Atom>().name);
  if (t.is<Compound>()) {
    std::vector<TermId> args;
    for (const auto& a : t.as<Compound>().args) args.push_back(from_term(a));
    return compound(t.as<Compound>().name, std::move(args));
  }
  if (t.is<ListTerm>()) {
    const auto& l = t.as<ListTerm>();
    std::vector<TermId> elems;
    for (const auto& e : l.elements) elems.push_back(from_term(e));
    if (l.tail) {
      TermId tail = from_term(**l.tail);
      if (kind(tail) != Kind::kList) throw Error("improper list in ground term");
      const auto& rest = children(tail);
      elems.insert(elems.end(), rest.begin(), rest.end());
    }
    return list(std::move(elems));
  }
  if (auto v = ground_value(t)) return integer(*v);
  throw Error("not a ground term: " + print_term(t));
}

Term TermStore::to_term(TermId id) const {
  const Node& n = nodes_[id];
  switch (n.kind) {
    case Kind::kAtom:
      return make_atom(names_[n.name]);
    case Kind::kInt: {
      const Integer& v = ints_[n.name];
      if (v < 0) return make_arith(ArithOp::kNeg, {make_int(-v)});
      return make_int(v);
    }
    case Kind::kCompound: {
      std::vector<Term> args;
      for (TermId c : n.children) args.push_back(to_term(c));
      return make_compound(names_[n.name], std::move(args));
    }
    case Kind::kList: {
      std::vector<Term> elems;
      for (TermId c : n.children) elems.push_back(to_term(c));
      return make_list(std::move(elems));
    }
  }
  return make_atom("?");
}

std::string TermStore::to_string(TermId id) const { return print_term(to_term(id)); }

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

namespace {

bool universe_is_finite(const std::vector<FunctionSig>& funcs, const FeatureSet& feats) {
  if (feats.uses_integers || feats.uses_lists) return false;
  return std::all_of(funcs.begin(), funcs.end(), [](const FunctionSig& f) { return f.arity == 0; });
}

/// Universe levels: levels[d] holds every term of depth <= d + 1.
class Universe {
 public:
  Universe(TermStore& store, std::vector<FunctionSig> funcs, FeatureSet feats)
      : store_(store), funcs_(std::move(funcs)), feats_(feats) {
    // Mirrors the translation, which adds a constant when U has no base
    // constructor; otherwise a solver sees values the oracle never tries.
    bool base = feats_.uses_integers || feats_.uses_lists ||
                std::any_of(funcs_.begin(), funcs_.end(), [](const FunctionSig& f) { return f.arity == 0; });
    if (!base) funcs_.push_back({symbols::kDefault, 0, {}});
  }

  const std::vector<TermId>& upto(std::size_t depth) {
    const Bounds& b = store_.bounds();
    depth = std::min(depth, b.term_depth);
    if (depth == 0) return empty_;
    while (levels_.size() < depth) extend();
    return levels_[depth - 1];
  }

  const std::vector<TermId>& integers() {
    if (!ints_) {
      const Bounds& b = store_.bounds();
      Integer count = b.int_max - b.int_min + 1;
      if (count > Integer(b.universe_cap)) {
        throw UniverseTooLarge("integer range holds " + count.str() + " values, above the cap of " +
                               std::to_string(b.universe_cap));
      }
      ints_.emplace();
      for (Integer v = b.int_min; v <= b.int_max; ++v) ints_->push_back(store_.integer(v));
    }
    return *ints_;
  }

 private:
  void extend() {
    const Bounds& b = store_.bounds();
    std::vector<TermId> level;
    std::unordered_set<TermId> seen;
    auto add = [&](TermId id) {
      if (seen.insert(id).second) level.push_back(id);
    };
    if (levels_.empty()) {
      for (const auto& f : funcs_) {
        if (f.arity == 0) add(store_.atom(f.name));
      }
      if (feats_.uses_integers) {
        for (TermId i : integers()) add(i);
      }
      if (feats_.uses_lists) add(store_.list({}));
      check_cap(level.size());
      levels_.push_back(std::move(level));
      return;
    }
    const std::vector<TermId> prev = levels_.back();
    for (TermId t : prev) add(t);

    double n = static_cast<double>(prev.size());
    double estimate = static_cast<double>(prev.size());
    for (const auto& f : funcs_) {
      if (f.arity > 0) estimate += std::pow(n, static_cast<double>(f.arity));
    }
    if (feats_.uses_lists) {
      for (std::size_t len = 1; len <= b.max_list_len; ++len) {
        estimate += std::pow(n, static_cast<double>(len));
      }
    }
    if (estimate > static_cast<double>(b.universe_cap)) {
      throw UniverseTooLarge("universe of depth " + std::to_string(levels_.size() + 1) +
                             " would hold about " + std::to_string(static_cast<long double>(estimate)) +
                             " terms, above the cap of " + std::to_string(b.universe_cap));
    }

    auto tuples = [&](std::size_t arity, const std::function<void(std::vector<TermId>)>& emit) {
      std::vector<std::size_t> index(arity, 0);
      if (prev.empty() && arity > 0) return;
      while (true) {
        std::vector<TermId> args(arity);
        for (std::size_t i = 0; i < arity; ++i) args[i] = prev[index[i]];
        emit(std::move(args));
        std::size_t k = arity;
        while (k > 0) {
          --k;
          if (++index[k] < prev.size()) break;
          index[k] = 0;
          if (k == 0) return;
        }
        if (arity == 0) return;
      }
    };
    for (const auto& f : funcs_) {
      if (f.arity == 0) continue;
      tuples(f.arity, [&](std::vector<TermId> args) { add(store_.compound(f.name, std::move(args))); });
    }
    if (feats_.uses_lists) {
      for (std::size_t len = 1; len <= b.max_list_len; ++len) {
        tuples(len, [&](std::vector<TermId> elems) { add(store_.list(std::move(elems))); });
      }
    }
    levels_.push_back(std::move(level));
  }

  void check_cap(std::size_t n) const {
    if (n > store_.bounds().universe_cap) {
      throw UniverseTooLarge("universe exceeds the cap of " +
                             std::to_string(store_.bounds().universe_cap) + " terms");
    }
  }

  TermStore& store_;
  std::vector<FunctionSig> funcs_;
  FeatureSet feats_;
  std::vector<std::vector<TermId>> levels_;
  std::optional<std::vector<TermId>> ints_;
  std::vector<TermId> empty_;
};

}  // namespace

std::vector<Term> enumerate_universe(const std::vector<FunctionSig>& funcs, const FeatureSet& feats,
                                     const Bounds& b) {
  TermStore store(b);
  Universe u(store, funcs, feats);
  std::vector<Term> out;
  for (TermId id : u.upto(b.term_depth)) out.push_back(store.to_term(id));
  return out;
}

// ---------------------------------------------------------------------------
// GroundFactSet
// ---------------------------------------------------------------------------

std::size_t GroundFactSet::TupleHash::operator()(const std::vector<TermId>& t) const {
  std::size_t h = t.size();
  for (auto x : t) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool GroundFactSet::contains(const std::string& predicate, const std::vector<Term>& args) const {
  auto it = relation_index_.find({predicate, args.size()});
  if (it == relation_index_.end()) return false;
  // Interning into a scratch copy keeps the store untouched.
  TermStore scratch = *store_;
  std::vector<TermId> tuple;
  for (const auto& a : args) tuple.push_back(scratch.from_term(a));
  return members_[it->second].count(tuple) > 0;
}

std::vector<std::vector<Term>> GroundFactSet::facts(const std::string& predicate,
                                                    std::size_t arity) const {
  std::vector<std::vector<Term>> out;
  auto it = relation_index_.find({predicate, arity});
  if (it == relation_index_.end()) return out;
  for (const auto& tuple : relations_[it->second].tuples) {
    std::vector<Term> row;
    for (TermId id : tuple) row.push_back(store_->to_term(id));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string print_fact(const TermStore& store, const std::string& name,
                       const std::vector<TermId>& tuple) {
  Call c{name, {}};
  for (TermId id : tuple) c.args.push_back(store.to_term(id));
  Clause fact{ClauseKind::kFact, std::move(c), {}, {}};
  return print_clause(fact);
}

}  // namespace

std::vector<std::string> GroundFactSet::to_strings() const {
  std::vector<std::string> out;
  for (const auto& r : relations_) {
    for (const auto& t : r.tuples) out.push_back(print_fact(*store_, r.name, t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GroundFactSet::size() const {
  std::size_t n = 0;
  for (const auto& r : relations_) n += r.tuples.size();
  return n;
}

std::vector<std::string> GroundFactSet::delta(std::size_t round) const {
  std::vector<std::string> out;
  if (round >= round_starts_.size()) return out;
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    std::size_t begin = r < round_starts_[round].size() ? round_starts_[round][r] : 0;
    std::size_t end = relations_[r].tuples.size();
    if (round + 1 < round_starts_.size() && r < round_starts_[round + 1].size()) {
      end = round_starts_[round + 1][r];
    }
    for (std::size_t i = begin; i < end; ++i) {
      out.push_back(print_fact(*store_, relations_[r].name, relations_[r].tuples[i]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

struct Pattern {
  enum class Kind { kVar, kGround, kCompound, kList, kArith };
  Kind kind = Kind::kGround;
  int slot = -1;
  TermId ground = 0;
  std::string name;
  ArithOp op = ArithOp::kAdd;
  std::vector<Pattern> children;  // args, list elements or operands
  std::vector<Pattern> tail;      // at most one
  std::vector<int> vars;          // distinct slots occurring inside
};

struct Item {
  enum class Kind { kCall, kUnify, kDiseq, kCompare, kNot };
  Kind kind;
  std::size_t relation = 0;
  std::vector<Pattern> args;  // call arguments, or lhs and rhs
  CompareOp op = CompareOp::kEq;
  std::vector<Item> inner;  // negated item
  std::vector<int> vars;
};

struct CompiledClause {
  std::vector<std::string> var_names;
  std::vector<Item> body;
  std::optional<std::size_t> head_relation;
  std::vector<Pattern> head_args;
  std::vector<std::size_t> budget;  // enumeration depth per variable
  std::vector<bool> int_only;       // variable occurs under arithmetic
  std::vector<std::size_t> calls;   // indices of call items
};

void merge_vars(std::vector<int>& into, const std::vector<int>& from) {
  for (int v : from) {
    if (std::find(into.begin(), into.end(), v) == into.end()) into.push_back(v);
  }
}

}  // namespace

class Evaluator {
 public:
  Evaluator(const Database& db, const Bounds& b) : bounds_(b) {
    facts_.store_ = std::make_shared<TermStore>(b);
    auto funcs = collect_functions(db);
    auto feats = detect_features(db);
    if (b.force_features) feats = {true, true};
    finite_universe_ = universe_is_finite(funcs, feats);
    universe_.emplace(store(), funcs, feats);
    for (const auto& p : collect_predicates(db)) relation(p.name, p.arity);
    for (const auto& c : db.clauses) {
      if (c.kind != ClauseKind::kQuery) clauses_.push_back(compile(c));
    }
  }

  void run() {
    std::vector<std::size_t> ends = sizes();
    for (const auto& c : clauses_) {
      if (c.calls.empty()) evaluate(c, -1, ends, ends);
    }
    commit();
    std::size_t round = 1;
    while (facts_.delta_sizes_.back() > 0) {
      if (round > bounds_.max_iterations) {
        facts_.saturated_ = false;
        return;
      }
      const std::vector<std::size_t>& begins = facts_.round_starts_.back();
      ends = sizes();
      for (const auto& c : clauses_) {
        for (std::size_t call : c.calls) {
          std::size_t r = c.body[call].relation;
          if (begins[r] == ends[r]) continue;
          evaluate(c, static_cast<int>(call), begins, ends);
        }
      }
      commit();
      ++round;
    }
    facts_.saturated_ = true;
  }

  QueryAnswer query(const Clause& q) {
    CompiledClause c = compile(q);
    QueryAnswer answer;
    std::vector<std::size_t> ends = sizes();
    Search s = make_search(c, -1, ends, ends);
    s.on_solution = [&]() {
      answer.derivable = true;
      for (std::size_t v = 0; v < c.var_names.size(); ++v) {
        if (c.var_names[v].rfind('_', 0) == 0) continue;
        answer.witness.emplace_back(c.var_names[v], store().to_term(s.slots[v]));
      }
      return true;
    };
    step(s);
    answer.saturated = facts_.saturated_;
    answer.exhaustive = facts_.saturated_ && !facts_.truncated_;
    return answer;
  }

  GroundFactSet& facts() { return facts_; }

 private:
  struct Search {
    const CompiledClause* clause;
    int delta_item;
    const std::vector<std::size_t>* begins;
    const std::vector<std::size_t>* ends;
    std::vector<TermId> slots;
    std::vector<char> bound;
    std::vector<int> trail;
    std::vector<std::pair<const Pattern*, TermId>> pending;
    std::vector<char> done;
    std::function<bool()> on_solution;
  };

  TermStore& store() { return *facts_.store_; }

  std::size_t relation(const std::string& name, std::size_t arity) {
    auto [it, inserted] = facts_.relation_index_.try_emplace({name, arity}, facts_.relations_.size());
    if (inserted) {
      facts_.relations_.push_back({name, arity, {}});
      facts_.members_.emplace_back();
    }
    return it->second;
  }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& r : facts_.relations_) out.push_back(r.tuples.size());
    return out;
  }

  // -- compilation -----------------------------------------------------------

  Pattern compile(const Term& t, std::map<std::string, int>& slots) {
    Pattern p;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Var>) {
            p.kind = Pattern::Kind::kVar;
            auto [it, inserted] = slots.try_emplace(n.name, static_cast<int>(slots.size()));
            p.slot = it->second;
            p.vars = {p.slot};
          } else if constexpr (std::is_same_v<T, Atom>) {
            p.ground = store().atom(n.name);
          } else if constexpr (std::is_same_v<T, IntLit>) {
            p.ground = store().integer(n.value);
          } else if constexpr (std::is_same_v<T, Compound>) {
            p.kind = Pattern::Kind::kCompound;
            p.name = n.name;
            for (const auto& a : n.args) p.children.push_back(compile(a, slots));
          } else if constexpr (std::is_same_v<T, ListTerm>) {
            p.kind = Pattern::Kind::kList;
            for (const auto& e : n.elements) p.children.push_back(compile(e, slots));
            if (n.tail) p.tail.push_back(compile(**n.tail, slots));
          } else {
            p.kind = Pattern::Kind::kArith;
            p.op = n.op;
            for (const auto& o : n.operands) p.children.push_back(compile(o, slots));
          }
        },
        t.node);
    for (const auto& c : p.children) merge_vars(p.vars, c.vars);
    for (const auto& c : p.tail) merge_vars(p.vars, c.vars);
    return p;
  }

  Item compile(const BodyItem& b, std::map<std::string, int>& slots) {
    Item item;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Call>) {
            item.kind = Item::Kind::kCall;
            item.relation = relation(n.predicate, n.args.size());
            for (const auto& a : n.args) item.args.push_back(compile(a, slots));
          } else if constexpr (std::is_same_v<T, Negation>) {
            item.kind = Item::Kind::kNot;
            item.inner.push_back(compile(*n.inner, slots));
            merge_vars(item.vars, item.inner[0].vars);
          } else {
            if constexpr (std::is_same_v<T, Unify>) item.kind = Item::Kind::kUnify;
            if constexpr (std::is_same_v<T, TermDiseq>) item.kind = Item::Kind::kDiseq;
            if constexpr (std::is_same_v<T, ArithConstraint>) {
              item.kind = Item::Kind::kCompare;
              item.op = n.op;
            }
            item.args.push_back(compile(n.lhs, slots));
            item.args.push_back(compile(n.rhs, slots));
          }
        },
        b.node);
    if (item.kind == Item::Kind::kCall && item.inner.empty()) {
      // Negated calls are rejected by the translator; here they are plain
      // failures of the instance.
    }
    for (const auto& a : item.args) merge_vars(item.vars, a.vars);
    return item;
  }

  static void mark_arith(const Pattern& p, bool under, std::vector<bool>& out) {
    if (p.kind == Pattern::Kind::kVar && under) out[p.slot] = true;
    bool inner = under || p.kind == Pattern::Kind::kArith;
    // Operands of arithmetic are integers; compound or list structure inside
    // an operand is not, so it can only fail.
    for (const auto& c : p.children) mark_arith(c, inner && p.kind == Pattern::Kind::kArith, out);
    for (const auto& c : p.tail) mark_arith(c, false, out);
  }

  static void mark_arith(const Item& item, std::vector<bool>& out) {
    if (item.kind == Item::Kind::kCompare) {
      for (const auto& a : item.args) mark_arith(a, true, out);
    } else {
      for (const auto& a : item.args) mark_arith(a, false, out);
    }
    for (const auto& i : item.inner) mark_arith(i, out);
  }

  void budgets(const Pattern& p, std::size_t level, std::vector<std::size_t>& out) const {
    if (p.kind == Pattern::Kind::kVar) {
      std::size_t room = level >= bounds_.term_depth ? 0 : bounds_.term_depth - level;
      out[p.slot] = std::min(out[p.slot], room);
      return;
    }
    if (p.kind == Pattern::Kind::kArith) return;
    for (const auto& c : p.children) budgets(c, level + 1, out);
    for (const auto& c : p.tail) budgets(c, level, out);
  }

  CompiledClause compile(const Clause& c) {
    CompiledClause out;
    std::map<std::string, int> slots;
    for (const auto& name : clause_variables(c)) slots.emplace(name, static_cast<int>(slots.size()));
    if (c.head) {
      out.head_relation = relation(c.head->predicate, c.head->args.size());
      for (const auto& a : c.head->args) out.head_args.push_back(compile(a, slots));
    }
    for (const auto& b : c.body) out.body.push_back(compile(b, slots));
    out.var_names.resize(slots.size());
    for (const auto& [name, slot] : slots) out.var_names[slot] = name;
    out.budget.assign(slots.size(), bounds_.term_depth);
    out.int_only.assign(slots.size(), false);
    for (const auto& a : out.head_args) {
      budgets(a, 0, out.budget);
      mark_arith(a, false, out.int_only);
    }
    for (std::size_t i = 0; i < out.body.size(); ++i) {
      mark_arith(out.body[i], out.int_only);
      if (out.body[i].kind == Item::Kind::kCall) out.calls.push_back(i);
    }
    return out;
  }

  // -- ground evaluation -------------------------------------------------------

  static bool all_bound(const std::vector<int>& vars, const Search& s) {
    return std::all_of(vars.begin(), vars.end(), [&](int v) { return s.bound[v]; });
  }

  std::optional<Integer> eval_int(const Pattern& p, const Search& s) {
    switch (p.kind) {
      case Pattern::Kind::kVar: {
        TermId id = s.slots[p.slot];
        if (store().kind(id) != TermStore::Kind::kInt) return std::nullopt;
        return store().value(id);
      }
      case Pattern::Kind::kGround:
        if (store().kind(p.ground) != TermStore::Kind::kInt) return std::nullopt;
        return store().value(p.ground);
      case Pattern::Kind::kArith:
        break;
      default:
        return std::nullopt;
    }
    auto a = eval_int(p.children[0], s);
    if (!a) return std::nullopt;
    if (p.op == ArithOp::kNeg) return Integer(-*a);
    auto b = eval_int(p.children[1], s);
    if (!b) return std::nullopt;
    switch (p.op) {
      case ArithOp::kAdd: return Integer(*a + *b);
      case ArithOp::kSub: return Integer(*a - *b);
      case ArithOp::kMul: return Integer(*a * *b);
      case ArithOp::kDiv:
      case ArithOp::kMod: {
        if (*b == 0) {
          // Division by zero is unconstrained in SMT-LIB; no instance is
          // produced here, so the run is no longer exhaustive.
          facts_.truncated_ = true;
          return std::nullopt;
        }
        // Euclidean division, remainder in [0, |b|), as SMT-LIB div/mod.
        Integer m = abs(*b);
        Integer r = *a % m;
        if (r < 0) r += m;
        if (p.op == ArithOp::kMod) return r;
        return Integer((*a - r) / *b);
      }
      default:
        return std::nullopt;
    }
  }

  /// The ground term a pattern denotes under the current bindings, or nothing
  /// when a side condition (integer operand, list tail) fails.
  std::optional<TermId> build(const Pattern& p, const Search& s) {
    switch (p.kind) {
      case Pattern::Kind::kVar:
        return s.slots[p.slot];
      case Pattern::Kind::kGround:
        return p.ground;
      case Pattern::Kind::kCompound: {
        std::vector<TermId> args;
        for (const auto& c : p.children) {
          auto a = build(c, s);
          if (!a) return std::nullopt;
          args.push_back(*a);
        }
        return store().compound(p.name, std::move(args));
      }
      case Pattern::Kind::kList: {
        std::vector<TermId> elems;
        for (const auto& c : p.children) {
          auto e = build(c, s);
          if (!e) return std::nullopt;
          elems.push_back(*e);
        }
        if (!p.tail.empty()) {
          auto t = build(p.tail[0], s);
          if (!t || store().kind(*t) != TermStore::Kind::kList) return std::nullopt;
          const auto& rest = store().children(*t);
          elems.insert(elems.end(), rest.begin(), rest.end());
        }
        return store().list(std::move(elems));
      }
      case Pattern::Kind::kArith: {
        auto v = eval_int(p, s);
        if (!v) return std::nullopt;
        return store().integer(*v);
      }
    }
    return std::nullopt;
  }

  /// nullopt when a side condition fails; such an instance fails whether or
  /// not the item is negated.
  std::optional<bool> holds(const Item& item, const Search& s) {
    switch (item.kind) {
      case Item::Kind::kUnify:
      case Item::Kind::kDiseq: {
        auto l = build(item.args[0], s);
        auto r = build(item.args[1], s);
        if (!l || !r) return std::nullopt;
        return (*l == *r) == (item.kind == Item::Kind::kUnify);
      }
      case Item::Kind::kCompare: {
        auto l = eval_int(item.args[0], s);
        auto r = eval_int(item.args[1], s);
        if (!l || !r) return std::nullopt;
        switch (item.op) {
          case CompareOp::kEq: return *l == *r;
          case CompareOp::kNe: return *l != *r;
          case CompareOp::kLt: return *l < *r;
          case CompareOp::kLe: return *l <= *r;
          case CompareOp::kGt: return *l > *r;
          case CompareOp::kGe: return *l >= *r;
        }
        return std::nullopt;
      }
      case Item::Kind::kNot: {
        auto inner = holds(item.inner[0], s);
        if (!inner) return std::nullopt;
        return !*inner;
      }
      case Item::Kind::kCall:
        break;
    }
    return std::nullopt;
  }

  // -- matching ---------------------------------------------------------------

  void bind(Search& s, int slot, TermId value) {
    s.slots[slot] = value;
    s.bound[slot] = 1;
    s.trail.push_back(slot);
  }

  void undo(Search& s, std::size_t trail_mark, std::size_t pending_mark) {
    while (s.trail.size() > trail_mark) {
      s.bound[s.trail.back()] = 0;
      s.trail.pop_back();
    }
    s.pending.resize(pending_mark);
  }

  bool match(const Pattern& p, TermId g, Search& s) {
    switch (p.kind) {
      case Pattern::Kind::kVar:
        if (s.bound[p.slot]) return s.slots[p.slot] == g;
        if (!store().in_bounds(g)) {
          facts_.truncated_ = true;
          return false;
        }
        bind(s, p.slot, g);
        return true;
      case Pattern::Kind::kGround:
        return p.ground == g;
      case Pattern::Kind::kCompound: {
        if (store().kind(g) != TermStore::Kind::kCompound || store().name(g) != p.name ||
            store().children(g).size() != p.children.size()) {
          return false;
        }
        for (std::size_t i = 0; i < p.children.size(); ++i) {
          if (!match(p.children[i], store().children(g)[i], s)) return false;
        }
        return true;
      }
      case Pattern::Kind::kList: {
        if (store().kind(g) != TermStore::Kind::kList) return false;
        const std::vector<TermId> elems = store().children(g);
        std::size_t n = p.children.size();
        if (p.tail.empty() ? elems.size() != n : elems.size() < n) return false;
        for (std::size_t i = 0; i < n; ++i) {
          if (!match(p.children[i], elems[i], s)) return false;
        }
        if (p.tail.empty()) return true;
        TermId rest = store().list(std::vector<TermId>(elems.begin() + n, elems.end()));
        return match(p.tail[0], rest, s);
      }
      case Pattern::Kind::kArith: {
        if (all_bound(p.vars, s)) {
          auto v = eval_int(p, s);
          return v && store().kind(g) == TermStore::Kind::kInt && store().value(g) == *v;
        }
        s.pending.emplace_back(&p, g);
        return true;
      }
    }
    return false;
  }

  // -- search -----------------------------------------------------------------

  Search make_search(const CompiledClause& c, int delta_item, const std::vector<std::size_t>& begins,
                     const std::vector<std::size_t>& ends) {
    Search s{&c, delta_item, &begins, &ends, {}, {}, {}, {}, {}, {}};
    s.slots.assign(c.var_names.size(), 0);
    s.bound.assign(c.var_names.size(), 0);
    s.done.assign(c.body.size(), 0);
    return s;
  }

  const std::vector<TermId>& domain(const Search& s, int slot) {
    if (!finite_universe_) facts_.truncated_ = true;
    const CompiledClause& c = *s.clause;
    if (c.int_only[slot]) return universe_->integers();
    return universe_->upto(c.budget[slot]);
  }

  /// Returns true when the search should stop.
  bool step(Search& s) {
    const CompiledClause& c = *s.clause;
    std::vector<std::size_t> marked;
    auto unmark = [&] {
      for (auto i : marked) s.done[i] = 0;
    };

    for (const auto& [pattern, ground] : s.pending) {
      if (!all_bound(pattern->vars, s)) continue;
      auto v = build(*pattern, s);
      if (!v || *v != ground) {
        unmark();
        return false;
      }
    }

    // Ground constraints prune before any join.
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i = 0; i < c.body.size(); ++i) {
        const Item& item = c.body[i];
        if (s.done[i] || item.kind == Item::Kind::kCall || !all_bound(item.vars, s)) continue;
        auto ok = holds(item, s);
        if (!ok || !*ok) {
          unmark();
          return false;
        }
        s.done[i] = 1;
        marked.push_back(i);
        progress = true;
      }
    }

    // Equations with one evaluable side bind the other side.
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      const Item& item = c.body[i];
      if (s.done[i]) continue;
      bool equation = item.kind == Item::Kind::kUnify ||
                      (item.kind == Item::Kind::kCompare && item.op == CompareOp::kEq);
      if (!equation) continue;
      for (int side = 0; side < 2; ++side) {
        const Pattern& known = item.args[side];
        const Pattern& other = item.args[1 - side];
        if (!all_bound(known.vars, s)) continue;
        if (item.kind == Item::Kind::kCompare && other.kind != Pattern::Kind::kVar) continue;
        std::optional<TermId> value;
        if (item.kind == Item::Kind::kCompare) {
          auto v = eval_int(known, s);
          if (v) value = store().integer(*v);
        } else {
          value = build(known, s);
        }
        if (!value) {
          unmark();
          return false;
        }
        std::size_t trail_mark = s.trail.size(), pending_mark = s.pending.size();
        s.done[i] = 1;
        bool stop = match(other, *value, s) && step(s);
        s.done[i] = 0;
        undo(s, trail_mark, pending_mark);
        unmark();
        return stop;
      }
    }

    // Join the next call against the facts.
    int next = -1;
    if (s.delta_item >= 0 && !s.done[s.delta_item]) {
      next = s.delta_item;
    } else {
      for (std::size_t i : c.calls) {
        if (!s.done[i]) {
          next = static_cast<int>(i);
          break;
        }
      }
    }
    if (next >= 0) {
      const Item& call = c.body[next];
      std::size_t r = call.relation;
      std::size_t begin = next == s.delta_item ? (*s.begins)[r] : 0;
      std::size_t end = r < s.ends->size() ? (*s.ends)[r] : 0;
      const auto& tuples = facts_.relations_[r].tuples;
      bool stop = false;
      s.done[next] = 1;
      for (std::size_t t = begin; t < end && !stop; ++t) {
        std::size_t trail_mark = s.trail.size(), pending_mark = s.pending.size();
        bool ok = true;
        for (std::size_t a = 0; a < call.args.size() && ok; ++a) {
          ok = match(call.args[a], tuples[t][a], s);
        }
        if (ok) stop = step(s);
        undo(s, trail_mark, pending_mark);
      }
      s.done[next] = 0;
      unmark();
      return stop;
    }

    // Variables no item can bind are enumerated over the universe.
    int var = -1;
    for (std::size_t i = 0; i < c.body.size() && var < 0; ++i) {
      if (s.done[i]) continue;
      for (int v : c.body[i].vars) {
        if (!s.bound[v]) {
          var = v;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < s.pending.size() && var < 0; ++i) {
      for (int v : s.pending[i].first->vars) {
        if (!s.bound[v]) {
          var = v;
          break;
        }
      }
    }
    for (std::size_t v = 0; v < s.bound.size() && var < 0; ++v) {
      if (!s.bound[v]) var = static_cast<int>(v);
    }
    if (var >= 0) {
      bool stop = false;
      // Copy: the domain vector may grow the universe cache during recursion.
      const std::vector<TermId> values = domain(s, var);
      for (std::size_t k = 0; k < values.size() && !stop; ++k) {
        std::size_t trail_mark = s.trail.size(), pending_mark = s.pending.size();
        bind(s, var, values[k]);
        stop = step(s);
        undo(s, trail_mark, pending_mark);
      }
      unmark();
      return stop;
    }

    bool stop = s.on_solution();
    unmark();
    return stop;
  }

  void evaluate(const CompiledClause& c, int delta_item, const std::vector<std::size_t>& begins,
                const std::vector<std::size_t>& ends) {
    Search s = make_search(c, delta_item, begins, ends);
    s.on_solution = [&]() {
      std::vector<TermId> tuple;
      for (const auto& a : c.head_args) {
        auto t = build(a, s);
        if (!t) return false;
        if (!store().in_bounds(*t)) {
          facts_.truncated_ = true;
          return false;
        }
        tuple.push_back(*t);
      }
      std::size_t r = *c.head_relation;
      if (facts_.members_[r].count(tuple)) return false;
      if (buffered_.insert({r, tuple}).second) buffer_.emplace_back(r, std::move(tuple));
      return false;
    };
    step(s);
  }

  void commit() {
    facts_.round_starts_.push_back(sizes());
    std::size_t added = 0;
    for (auto& [r, tuple] : buffer_) {
      auto& rel = facts_.relations_[r];
      if (facts_.members_[r].emplace(tuple, rel.tuples.size()).second) {
        rel.tuples.push_back(std::move(tuple));
        ++added;
      }
    }
    buffer_.clear();
    buffered_.clear();
    facts_.delta_sizes_.push_back(added);
  }

  struct BufferHash {
    std::size_t operator()(const std::pair<std::size_t, std::vector<TermId>>& k) const {
      return GroundFactSet::TupleHash{}(k.second) ^ (k.first * 0x9e3779b97f4a7c15ULL);
    }
  };

  Bounds bounds_;
  GroundFactSet facts_;
  bool finite_universe_ = false;
  std::optional<Universe> universe_;
  std::vector<CompiledClause> clauses_;
  std::vector<std::pair<std::size_t, std::vector<TermId>>> buffer_;
  std::unordered_set<std::pair<std::size_t, std::vector<TermId>>, BufferHash> buffered_;
};

GroundFactSet fixpoint(const Database& db, const Bounds& b) {
  Evaluator e(db, b);
  e.run();
  return std::move(e.facts());
}

QueryAnswer query_holds(const Database& db, const Clause& query, const Bounds& b) {
  if (query.kind != ClauseKind::kQuery) throw Error("query_holds expects a query clause", query.span);
  Evaluator e(db, b);
  e.run();
  return e.query(query);
}

QueryAnswer program_query_holds(const Database& db, const Bounds& b) {
  Evaluator e(db, b);
  e.run();
  QueryAnswer out;
  out.saturated = e.facts().saturated();
  out.exhaustive = true;
  for (const auto& c : db.clauses) {
    if (c.kind != ClauseKind::kQuery) continue;
    QueryAnswer a = e.query(c);
    if (a.derivable && !out.derivable) {
      out.derivable = true;
      out.witness = a.witness;
    }
    out.exhaustive = out.exhaustive && a.exhaustive;
  }
  return out;
}

}  // namespace clp2chc::oracle
