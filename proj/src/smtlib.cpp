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
#include "clp2chc/smtlib.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_set>

namespace clp2chc::smt {

bool Apply::operator==(const Apply& o) const { return head == o.head && args == o.args; }
bool Forall::operator==(const Forall& o) const {
  return bindings == o.bindings && body == o.body;
}
bool IndexedTester::operator==(const IndexedTester& o) const {
  return constructor == o.constructor && arg == o.arg;
}

std::string_view SmtTerm::head_name() const {
  if (!is<Apply>()) return {};
  const SmtTerm& h = *as<Apply>().head;
  return h.is<Symbol>() ? std::string_view(h.as<Symbol>().name) : std::string_view{};
}

SmtTerm sym(std::string name) { return SmtTerm{Symbol{std::move(name)}}; }
SmtTerm num(Integer value) { return SmtTerm{IntConst{std::move(value)}}; }
SmtTerm app(std::string head, std::vector<SmtTerm> args) {
  if (args.empty()) return sym(std::move(head));
  return SmtTerm{Apply{Box<SmtTerm>(sym(std::move(head))), std::move(args)}};
}
SmtTerm forall(std::vector<SortedVar> bindings, SmtTerm body) {
  return SmtTerm{Forall{std::move(bindings), Box<SmtTerm>(std::move(body))}};
}
SmtTerm tester(std::string constructor, SmtTerm arg) {
  return SmtTerm{IndexedTester{std::move(constructor), Box<SmtTerm>(std::move(arg))}};
}

// ---------------------------------------------------------------------------
// S-expressions
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kWidth = 100;

struct SExpr {
  enum class Kind { kSymbol, kQuoted, kNumeral, kList };
  Kind kind = Kind::kList;
  std::string text;  // symbol content (unquoted) or numeral digits
  std::vector<SExpr> items;
  Span span;

  bool is_list() const { return kind == Kind::kList; }
  bool is_symbol(std::string_view s) const { return kind == Kind::kSymbol && text == s; }
};

SExpr atom(std::string text) {
  return SExpr{SExpr::Kind::kSymbol, std::move(text), {}, {}};
}
SExpr list(std::vector<SExpr> items) { return SExpr{SExpr::Kind::kList, {}, std::move(items), {}}; }

bool is_reserved_word(std::string_view s) {
  static const std::unordered_set<std::string_view> kWords = {
      "!", "_", "as", "BINARY", "DECIMAL", "exists", "HEXADECIMAL", "forall", "let",
      "match", "NUMERAL", "par", "STRING",
      // command names are reserved as well
      "assert", "check-sat", "check-sat-assuming", "declare-const", "declare-datatype",
      "declare-datatypes", "declare-fun", "declare-sort", "define-fun", "define-fun-rec",
      "define-funs-rec", "define-sort", "echo", "exit", "get-assertions", "get-assignment",
      "get-info", "get-model", "get-option", "get-proof", "get-unsat-assumptions",
      "get-unsat-core", "get-value", "pop", "push", "reset", "reset-assertions", "set-info",
      "set-logic", "set-option"};
  return kWords.count(s) > 0;
}

}  // namespace

bool is_simple_symbol(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  static constexpr std::string_view kExtra = "~!@$%^&*_-+=<>.?/";
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) ||
           kExtra.find(c) != std::string_view::npos;
  });
}

std::string quote_symbol(std::string_view name) {
  if (is_simple_symbol(name) && !is_reserved_word(name)) return std::string(name);
  return "|" + std::string(name) + "|";
}

namespace {

std::string flat(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::kSymbol:
    case SExpr::Kind::kNumeral:
      return e.text;
    case SExpr::Kind::kQuoted:
      return quote_symbol(e.text);
    case SExpr::Kind::kList: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        out += flat(e.items[i]);
      }
      return out + ")";
    }
  }
  return {};
}

void layout(const SExpr& e, std::size_t indent, std::string& out) {
  std::string f = flat(e);
  if (!e.is_list() || e.items.empty() || indent + f.size() <= kWidth) {
    out += f;
    return;
  }
  out += '(';
  std::size_t column = indent + 1;
  std::size_t i = 0;
  // Leading atoms (the operator and e.g. a sort name) stay on the first line.
  while (i < e.items.size() && !e.items[i].is_list()) {
    std::string a = flat(e.items[i]);
    if (i > 0 && column + 1 + a.size() > kWidth) break;
    if (i) out += ' ';
    out += a;
    column += a.size() + (i ? 1 : 0);
    ++i;
  }
  if (i == 0) {
    layout(e.items[0], indent + 1, out);
    i = 1;
  } else if (e.items[0].is_symbol("forall") && i == 1 && e.items.size() > 1) {
    std::string bindings = flat(e.items[1]);
    if (column + 1 + bindings.size() <= kWidth) {
      out += ' ' + bindings;
      i = 2;
    }
  }
  for (; i < e.items.size(); ++i) {
    out += '\n';
    out.append(indent + 4, ' ');
    layout(e.items[i], indent + 4, out);
  }
  out += ')';
}

SExpr symbol_expr(const std::string& name) {
  return SExpr{SExpr::Kind::kQuoted, name, {}, {}};
}

SExpr to_sexpr(const SmtTerm& t) {
  return std::visit(
      [](const auto& n) -> SExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Symbol>) {
          return symbol_expr(n.name);
        } else if constexpr (std::is_same_v<T, IntConst>) {
          return SExpr{SExpr::Kind::kNumeral, n.value.str(), {}, {}};
        } else if constexpr (std::is_same_v<T, Apply>) {
          std::vector<SExpr> items{to_sexpr(*n.head)};
          for (const auto& a : n.args) items.push_back(to_sexpr(a));
          return list(std::move(items));
        } else if constexpr (std::is_same_v<T, Forall>) {
          std::vector<SExpr> bindings;
          for (const auto& b : n.bindings) {
            bindings.push_back(list({symbol_expr(b.name), symbol_expr(b.sort)}));
          }
          return list({atom("forall"), list(std::move(bindings)), to_sexpr(*n.body)});
        } else {
          return list({list({atom("_"), atom("is"), symbol_expr(n.constructor)}),
                       to_sexpr(*n.arg)});
        }
      },
      t.node);
}

SExpr constructor_expr(const Constructor& c, bool bare_nullary) {
  if (c.selectors.empty() && bare_nullary) return symbol_expr(c.name);
  std::vector<SExpr> items{symbol_expr(c.name)};
  for (const auto& s : c.selectors) {
    items.push_back(list({symbol_expr(s.name), symbol_expr(s.sort)}));
  }
  return list(std::move(items));
}

SExpr to_sexpr(const Command& c, DatatypeStyle style) {
  return std::visit(
      [style](const auto& n) -> SExpr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SetLogic>) {
          return list({atom("set-logic"), symbol_expr(n.logic)});
        } else if constexpr (std::is_same_v<T, DeclareDatatypes>) {
          if (style == DatatypeStyle::kLegacy) {
            std::vector<SExpr> sorts;
            for (const auto& d : n.sorts) {
              std::vector<SExpr> items{symbol_expr(d.name)};
              for (const auto& c : d.constructors) items.push_back(constructor_expr(c, true));
              sorts.push_back(list(std::move(items)));
            }
            return list({atom("declare-datatypes"), list({}), list(std::move(sorts))});
          }
          auto ctors = [](const Datatype& d) {
            std::vector<SExpr> items;
            for (const auto& c : d.constructors) items.push_back(constructor_expr(c, false));
            return list(std::move(items));
          };
          if (n.sorts.size() == 1) {
            return list({atom("declare-datatype"), symbol_expr(n.sorts[0].name),
                         ctors(n.sorts[0])});
          }
          std::vector<SExpr> arities, bodies;
          for (const auto& d : n.sorts) {
            arities.push_back(list({symbol_expr(d.name), SExpr{SExpr::Kind::kNumeral, "0", {}, {}}}));
            bodies.push_back(ctors(d));
          }
          return list({atom("declare-datatypes"), list(std::move(arities)), list(std::move(bodies))});
        } else if constexpr (std::is_same_v<T, DeclareFun>) {
          std::vector<SExpr> sorts;
          for (const auto& s : n.arg_sorts) sorts.push_back(symbol_expr(s));
          return list({atom("declare-fun"), symbol_expr(n.name), list(std::move(sorts)),
                       symbol_expr(n.result_sort)});
        } else if constexpr (std::is_same_v<T, Assert>) {
          return list({atom("assert"), to_sexpr(n.term)});
        } else {
          return list({atom("check-sat")});
        }
      },
      c);
}

}  // namespace

std::string to_string(const SmtTerm& t) { return flat(to_sexpr(t)); }

std::string emit(const Command& c, DatatypeStyle style) {
  std::string out;
  layout(to_sexpr(c, style), 0, out);
  return out;
}

std::string emit(const Script& s, DatatypeStyle style) {
  std::string out;
  for (const auto& c : s.commands) {
    out += emit(c, style);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reader
// ---------------------------------------------------------------------------

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    while (true) {
      skip_layout();
      if (pos_ >= text_.size()) return out;
      out.push_back(read());
    }
  }

 private:
  Span here() const { return Span{pos_, 1, line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_layout() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  SExpr read() {
    Span start = here();
    char c = text_[pos_];
    if (c == ')') throw SmtParseError("unexpected ')'", start);
    if (c == '(') {
      advance();
      SExpr e;
      e.span = start;
      while (true) {
        skip_layout();
        if (pos_ >= text_.size()) throw SmtParseError("unbalanced '('", start);
        if (text_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == '|') {
      advance();
      std::string content;
      while (pos_ < text_.size() && text_[pos_] != '|') {
        if (text_[pos_] == '\\') throw SmtParseError("backslash in quoted symbol", here());
        content += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) throw SmtParseError("unterminated quoted symbol", start);
      advance();
      return SExpr{SExpr::Kind::kQuoted, std::move(content), {}, start};
    }
    if (c == '"') throw SmtParseError("string literals are not supported", start);
    std::string token;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';' ||
          d == '|' || d == '"') {
        break;
      }
      token += d;
      advance();
    }
    bool numeral = std::all_of(token.begin(), token.end(),
                               [](char d) { return std::isdigit(static_cast<unsigned char>(d)); });
    if (numeral) return SExpr{SExpr::Kind::kNumeral, std::move(token), {}, start};
    return SExpr{SExpr::Kind::kSymbol, std::move(token), {}, start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void malformed(const SExpr& e, const std::string& what) {
  throw SmtParseError(what + ": " + flat(e), e.span);
}

std::string symbol_of(const SExpr& e, const char* what) {
  if (e.kind != SExpr::Kind::kSymbol && e.kind != SExpr::Kind::kQuoted) {
    malformed(e, std::string("expected ") + what);
  }
  return e.text;
}

SmtTerm term_of(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::kNumeral:
      return num(Integer(e.text));
    case SExpr::Kind::kSymbol:
    case SExpr::Kind::kQuoted:
      return sym(e.text);
    case SExpr::Kind::kList:
      break;
  }
  if (e.items.empty()) malformed(e, "empty application");
  const SExpr& head = e.items[0];
  if (head.is_symbol("forall")) {
    if (e.items.size() != 3 || !e.items[1].is_list() || e.items[1].items.empty()) {
      malformed(e, "malformed forall");
    }
    std::vector<SortedVar> bindings;
    for (const auto& b : e.items[1].items) {
      if (!b.is_list() || b.items.size() != 2) malformed(b, "malformed sorted variable");
      bindings.push_back({symbol_of(b.items[0], "variable"), symbol_of(b.items[1], "sort")});
    }
    return forall(std::move(bindings), term_of(e.items[2]));
  }
  if (head.is_symbol("exists") || head.is_symbol("let") || head.is_symbol("match")) {
    malformed(e, "unsupported binder");
  }
  if (head.is_list() && head.items.size() == 3 && head.items[0].is_symbol("_") &&
      head.items[1].is_symbol("is")) {
    if (e.items.size() != 2) malformed(e, "tester takes one argument");
    return tester(symbol_of(head.items[2], "constructor"), term_of(e.items[1]));
  }
  if (e.items.size() < 2) malformed(e, "application without arguments");
  std::vector<SmtTerm> args;
  for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term_of(e.items[i]));
  return SmtTerm{Apply{Box<SmtTerm>(term_of(head)), std::move(args)}};
}

Constructor constructor_of(const SExpr& e) {
  if (!e.is_list()) return Constructor{symbol_of(e, "constructor"), {}};
  if (e.items.empty()) malformed(e, "empty constructor");
  Constructor c{symbol_of(e.items[0], "constructor"), {}};
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& s = e.items[i];
    if (!s.is_list() || s.items.size() != 2) malformed(s, "malformed selector");
    c.selectors.push_back({symbol_of(s.items[0], "selector"), symbol_of(s.items[1], "sort")});
  }
  return c;
}

std::vector<Constructor> constructors_of(const SExpr& e, std::size_t from) {
  if (!e.is_list()) malformed(e, "expected constructor list");
  std::vector<Constructor> out;
  for (std::size_t i = from; i < e.items.size(); ++i) out.push_back(constructor_of(e.items[i]));
  return out;
}

Command command_of(const SExpr& e) {
  if (!e.is_list() || e.items.empty() || e.items[0].kind != SExpr::Kind::kSymbol) {
    malformed(e, "expected a command");
  }
  const std::string& name = e.items[0].text;
  auto arity = [&](std::size_t n) {
    if (e.items.size() != n + 1) malformed(e, "wrong number of arguments to " + name);
  };
  if (name == "set-logic") {
    arity(1);
    return SetLogic{symbol_of(e.items[1], "logic")};
  }
  if (name == "check-sat") {
    arity(0);
    return CheckSat{};
  }
  if (name == "assert") {
    arity(1);
    return Assert{term_of(e.items[1])};
  }
  if (name == "declare-fun") {
    arity(3);
    if (!e.items[2].is_list()) malformed(e, "expected argument sorts");
    DeclareFun f{symbol_of(e.items[1], "function name"), {}, symbol_of(e.items[3], "sort")};
    for (const auto& s : e.items[2].items) f.arg_sorts.push_back(symbol_of(s, "sort"));
    return f;
  }
  if (name == "declare-datatype") {
    arity(2);
    return DeclareDatatypes{{Datatype{symbol_of(e.items[1], "sort"), constructors_of(e.items[2], 0)}}};
  }
  if (name == "declare-datatypes") {
    arity(2);
    const SExpr& params = e.items[1];
    const SExpr& bodies = e.items[2];
    if (!params.is_list() || !bodies.is_list()) malformed(e, "malformed declare-datatypes");
    DeclareDatatypes d;
    if (params.items.empty()) {
      // Legacy: (declare-datatypes () ((U c1 c2 ...) ...))
      for (const auto& body : bodies.items) {
        if (!body.is_list() || body.items.empty()) malformed(body, "malformed datatype");
        d.sorts.push_back({symbol_of(body.items[0], "sort"), constructors_of(body, 1)});
      }
    } else {
      if (params.items.size() != bodies.items.size()) {
        malformed(e, "sort and body counts differ");
      }
      for (std::size_t i = 0; i < params.items.size(); ++i) {
        const SExpr& p = params.items[i];
        if (!p.is_list() || p.items.size() != 2 || p.items[1].kind != SExpr::Kind::kNumeral) {
          malformed(p, "malformed sort declaration");
        }
        if (p.items[1].text != "0") malformed(p, "parametric datatypes are not supported");
        d.sorts.push_back({symbol_of(p.items[0], "sort"), constructors_of(bodies.items[i], 0)});
      }
    }
    return d;
  }
  throw SmtParseError("unknown command '" + name + "'", e.span);
}

}  // namespace

SmtTerm parse_term(std::string_view text) {
  auto exprs = Reader(text).read_all();
  if (exprs.size() != 1) throw SmtParseError("expected exactly one term");
  return term_of(exprs[0]);
}

Script parse_script(std::string_view text) {
  Script s;
  for (const auto& e : Reader(text).read_all()) s.commands.push_back(command_of(e));
  auto problems = validate(s);
  if (!problems.empty()) throw SmtParseError("invalid script: " + problems.front());
  return s;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

void validate_term(const SmtTerm& t, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Apply>) {
          if (n.args.empty()) out.push_back("application without arguments");
          validate_term(*n.head, out);
          for (const auto& a : n.args) validate_term(a, out);
        } else if constexpr (std::is_same_v<T, Forall>) {
          std::set<std::string> names;
          if (n.bindings.empty()) out.push_back("forall without bindings");
          for (const auto& b : n.bindings) {
            if (!names.insert(b.name).second) out.push_back("duplicate binding " + b.name);
          }
          validate_term(*n.body, out);
        } else if constexpr (std::is_same_v<T, IndexedTester>) {
          validate_term(*n.arg, out);
        }
      },
      t.node);
}

}  // namespace

std::vector<std::string> validate(const Script& s) {
  std::vector<std::string> out;
  if (s.commands.empty() || !std::holds_alternative<SetLogic>(s.commands.front())) {
    out.push_back("missing set-logic as first command");
  }
  if (s.commands.empty() || !std::holds_alternative<CheckSat>(s.commands.back())) {
    out.push_back("missing check-sat as last command");
  }
  std::size_t logics = 0, checks = 0;
  bool seen_assert = false;
  for (const auto& c : s.commands) {
    if (std::holds_alternative<SetLogic>(c)) ++logics;
    if (std::holds_alternative<CheckSat>(c)) ++checks;
    if (std::holds_alternative<Assert>(c)) {
      seen_assert = true;
      validate_term(std::get<Assert>(c).term, out);
    }
    if ((std::holds_alternative<DeclareDatatypes>(c) || std::holds_alternative<DeclareFun>(c)) &&
        seen_assert) {
      out.push_back("declaration after assertion");
    }
    if (auto* d = std::get_if<DeclareDatatypes>(&c)) {
      for (const auto& dt : d->sorts) {
        if (dt.constructors.empty()) out.push_back("datatype " + dt.name + " has no constructors");
      }
    }
  }
  if (logics > 1) out.push_back("more than one set-logic");
  if (checks > 1) out.push_back("more than one check-sat");
  return out;
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

namespace {

void first_occurrences(const SmtTerm& t, const std::set<std::string>& bound,
                       std::vector<std::string>& order) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Symbol>) {
          if (bound.count(n.name) &&
              std::find(order.begin(), order.end(), n.name) == order.end()) {
            order.push_back(n.name);
          }
        } else if constexpr (std::is_same_v<T, Apply>) {
          first_occurrences(*n.head, bound, order);
          for (const auto& a : n.args) first_occurrences(a, bound, order);
        } else if constexpr (std::is_same_v<T, Forall>) {
          std::set<std::string> inner = bound;
          for (const auto& b : n.bindings) inner.erase(b.name);
          first_occurrences(*n.body, inner, order);
        } else if constexpr (std::is_same_v<T, IndexedTester>) {
          first_occurrences(*n.arg, bound, order);
        }
      },
      t.node);
}

SmtTerm canonical(const SmtTerm& t, const std::map<std::string, std::string>& env,
                  std::size_t depth) {
  return std::visit(
      [&](const auto& n) -> SmtTerm {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Symbol>) {
          auto it = env.find(n.name);
          return it == env.end() ? SmtTerm{n} : sym(it->second);
        } else if constexpr (std::is_same_v<T, IntConst>) {
          return SmtTerm{n};
        } else if constexpr (std::is_same_v<T, Apply>) {
          SmtTerm head = canonical(*n.head, env, depth);
          std::vector<SmtTerm> args;
          bool conj = head.is_symbol("and");
          for (const auto& a : n.args) {
            SmtTerm c = canonical(a, env, depth);
            if (conj && c.head_name() == "and") {
              for (const auto& inner : c.as<Apply>().args) args.push_back(inner);
            } else {
              args.push_back(std::move(c));
            }
          }
          if (conj && args.size() == 1) return args.front();
          return SmtTerm{Apply{Box<SmtTerm>(std::move(head)), std::move(args)}};
        } else if constexpr (std::is_same_v<T, Forall>) {
          std::set<std::string> names;
          for (const auto& b : n.bindings) names.insert(b.name);
          std::vector<std::string> order;
          first_occurrences(*n.body, names, order);
          std::vector<SortedVar> unused;
          for (const auto& b : n.bindings) {
            if (std::find(order.begin(), order.end(), b.name) == order.end()) unused.push_back(b);
          }
          std::stable_sort(unused.begin(), unused.end(),
                           [](const SortedVar& a, const SortedVar& b) { return a.sort < b.sort; });
          for (const auto& u : unused) order.push_back(u.name);

          std::map<std::string, std::string> inner = env;
          std::vector<SortedVar> bindings;
          for (std::size_t k = 0; k < order.size(); ++k) {
            std::string fresh = "|" + std::to_string(depth) + "." + std::to_string(k);
            inner[order[k]] = fresh;
            auto it = std::find_if(n.bindings.begin(), n.bindings.end(),
                                   [&](const SortedVar& b) { return b.name == order[k]; });
            bindings.push_back({fresh, it->sort});
          }
          return forall(std::move(bindings), canonical(*n.body, inner, depth + 1));
        } else {
          return tester(n.constructor, canonical(*n.arg, env, depth));
        }
      },
      t.node);
}

}  // namespace

Script normalize(const Script& s, EqualityOptions opts) {
  Script out;
  for (const auto& c : s.commands) {
    if (auto* a = std::get_if<Assert>(&c)) {
      out.commands.push_back(Assert{canonical(a->term, {}, 0)});
    } else if (auto* d = std::get_if<DeclareDatatypes>(&c); d && !opts.ordered_constructors) {
      DeclareDatatypes sorted = *d;
      for (auto& dt : sorted.sorts) {
        std::sort(dt.constructors.begin(), dt.constructors.end(),
                  [](const Constructor& x, const Constructor& y) { return x.name < y.name; });
      }
      out.commands.push_back(std::move(sorted));
    } else {
      out.commands.push_back(c);
    }
  }
  return out;
}

bool structurally_equal(const Script& a, const Script& b, EqualityOptions opts) {
  return normalize(a, opts) == normalize(b, opts);
}

}  // namespace clp2chc::smt
