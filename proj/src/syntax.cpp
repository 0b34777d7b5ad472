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
#include "clp2chc/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_set>

namespace clp2chc::syntax {

bool Compound::operator==(const Compound& o) const { return name == o.name && args == o.args; }
bool ListTerm::operator==(const ListTerm& o) const {
  return elements == o.elements && tail == o.tail;
}
bool ArithExpr::operator==(const ArithExpr& o) const {
  return op == o.op && operands == o.operands;
}
bool Negation::operator==(const Negation& o) const { return inner == o.inner; }

Term make_var(std::string name) { return Term{Var{std::move(name)}, {}}; }
Term make_atom(std::string name) { return Term{Atom{std::move(name)}, {}}; }
Term make_int(Integer value) { return Term{IntLit{std::move(value)}, {}}; }
Term make_compound(std::string name, std::vector<Term> args) {
  return Term{Compound{std::move(name), std::move(args)}, {}};
}
Term make_list(std::vector<Term> elements, std::optional<Term> tail) {
  ListTerm l{std::move(elements), std::nullopt};
  if (tail) l.tail = Box<Term>(std::move(*tail));
  return Term{std::move(l), {}};
}
Term make_arith(ArithOp op, std::vector<Term> operands) {
  return Term{ArithExpr{op, std::move(operands)}, {}};
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 17> kOperators = {
    ":-", "?-", "=", "\\=", "=\\=", "\\+", "#=", "#\\=", "#<",
    "#>", "#>=", "#=<", "=:=", "+", "-", "*", "/"};

bool is_symbol_char(char c) {
  return std::string_view("+-*/\\^<>=~:.?@#&$").find(c) != std::string_view::npos;
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_layout();
      if (pos_ >= text_.size()) {
        out.push_back(Token{TokenKind::kEnd, "", span_from(pos_, line_, col_)});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Span span_from(std::size_t start, std::size_t line, std::size_t col) const {
    return Span{start, pos_ - start, line, col};
  }

  void skip_layout() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        std::size_t line = line_, col = col_, start = pos_;
        advance();
        advance();
        while (pos_ < text_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= text_.size()) {
          throw LexError("unterminated block comment", span_from(start, line, col));
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    std::size_t start = pos_, line = line_, col = col_;
    char c = peek();
    auto make = [&](TokenKind kind, std::string text) {
      return Token{kind, std::move(text), span_from(start, line, col)};
    };

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && is_ident_char(peek())) advance();
      std::string word(text_.substr(start, pos_ - start));
      bool var = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      return make(var ? TokenKind::kVariable : TokenKind::kAtom, std::move(word));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      return make(TokenKind::kInteger, std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '\'') return quoted(start, line, col);
    if (std::string_view("()[],|;!").find(c) != std::string_view::npos) {
      advance();
      return make(TokenKind::kPunct, std::string(1, c));
    }
    if (c == '.') {
      char n = peek(1);
      if (n == '\0' || n == '%' || std::isspace(static_cast<unsigned char>(n))) {
        advance();
        return make(TokenKind::kPunct, ".");
      }
    }
    if (is_symbol_char(c)) {
      std::string_view best;
      for (auto op : kOperators) {
        if (text_.substr(pos_, op.size()) == op && op.size() > best.size()) best = op;
      }
      if (!best.empty()) {
        for (std::size_t i = 0; i < best.size(); ++i) advance();
        return make(TokenKind::kOperator, std::string(best));
      }
    }
    advance();
    throw LexError(std::string("illegal character '") + c + "'", span_from(start, line, col));
  }

  Token quoted(std::size_t start, std::size_t line, std::size_t col) {
    advance();  // opening quote
    std::string name;
    while (true) {
      if (pos_ >= text_.size()) {
        throw LexError("unterminated quoted atom", span_from(start, line, col));
      }
      char c = peek();
      if (c == '\'') {
        if (peek(1) == '\'') {
          name += '\'';
          advance();
          advance();
          continue;
        }
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) {
          throw LexError("unterminated quoted atom", span_from(start, line, col));
        }
        char e = peek();
        switch (e) {
          case 'n': name += '\n'; break;
          case 't': name += '\t'; break;
          case '\\': name += '\\'; break;
          case '\'': name += '\''; break;
          default:
            throw LexError(std::string("unknown escape '\\") + e + "' in quoted atom",
                           span_from(start, line, col));
        }
        advance();
        continue;
      }
      name += c;
      advance();
    }
    Token t{TokenKind::kAtom, std::move(name), span_from(start, line, col)};
    t.quoted = true;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Builtin {
  std::string_view name;
  std::size_t arity;
};

// Non-arithmetic builtins outside the supported fragment.
constexpr std::array<Builtin, 31> kUnsupportedBuiltins = {{
    {"write", 1},   {"writeln", 1}, {"print", 1},    {"nl", 0},       {"format", 1},
    {"format", 2},  {"findall", 3}, {"bagof", 3},    {"setof", 3},    {"forall", 2},
    {"assert", 1},  {"asserta", 1}, {"assertz", 1},  {"retract", 1},  {"call", 1},
    {"call", 2},    {"call", 3},    {"not", 1},      {"var", 1},      {"nonvar", 1},
    {"atom", 1},    {"number", 1},  {"integer", 1},  {"functor", 3},  {"arg", 3},
    {"copy_term", 2}, {"halt", 0},  {"halt", 1},     {"label", 1},    {"labeling", 2},
    {"once", 1},
}};

std::optional<CompareOp> compare_op(const Token& t) {
  if (t.kind == TokenKind::kAtom && !t.quoted && t.text == "is") return CompareOp::kEq;
  if (t.kind != TokenKind::kOperator) return std::nullopt;
  if (t.text == "#=" || t.text == "=:=") return CompareOp::kEq;
  if (t.text == "#>") return CompareOp::kGt;
  if (t.text == "#>=") return CompareOp::kGe;
  if (t.text == "#<") return CompareOp::kLt;
  if (t.text == "#=<") return CompareOp::kLe;
  if (t.text == "#\\=") return CompareOp::kNe;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    for (const auto& t : tokens_) {
      if (t.kind == TokenKind::kVariable) used_names_.insert(t.text);
    }
  }

  Database run() {
    Database db;
    while (peek().kind != TokenKind::kEnd) {
      if (peek().is(TokenKind::kOperator, ":-")) {
        directive(db);
        continue;
      }
      db.clauses.push_back(clause());
    }
    return db;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  const Token& previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::kEnd ? "end of input" : "'" + t.text + "'";
    std::string msg = what + ", found " + found;
    if (!expected.empty()) {
      msg += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
    }
    throw ParseError(msg, t.span, std::move(expected));
  }

  void expect_punct(std::string_view p, const char* context) {
    if (!peek().is(TokenKind::kPunct, p)) {
      fail(std::string("unexpected token ") + context, {"'" + std::string(p) + "'"});
    }
    take();
  }

  void reject_unsupported_punct() const {
    const Token& t = peek();
    if (t.is(TokenKind::kPunct, "!")) throw UnsupportedError("cut '!' is not supported", t.span);
    if (t.is(TokenKind::kPunct, ";")) {
      throw UnsupportedError("disjunction ';' is not supported", t.span);
    }
  }

  void directive(Database& db) {
    Span start = take().span;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.kind == TokenKind::kEnd) fail("unterminated directive", {"'.'"});
      if (t.kind == TokenKind::kPunct) {
        if (t.text == "(" || t.text == "[") ++depth;
        if (t.text == ")" || t.text == "]") --depth;
        if (t.text == "." && depth <= 0) break;
      }
      take();
    }
    Span span = Span::cover(start, take().span);
    db.diagnostics.push_back(
        {Diagnostic::Severity::kWarning, "directive ignored", span});
  }

  Clause clause() {
    Span start = peek().span;
    Clause c;
    if (peek().is(TokenKind::kOperator, "?-")) {
      take();
      c.kind = ClauseKind::kQuery;
      c.body = body();
    } else {
      c.head = head();
      if (peek().is(TokenKind::kOperator, ":-")) {
        take();
        c.kind = ClauseKind::kRule;
        c.body = body();
      } else {
        c.kind = ClauseKind::kFact;
      }
    }
    if (!peek().is(TokenKind::kPunct, ".")) {
      reject_unsupported_punct();
      std::vector<std::string> expected = {"'.'"};
      if (c.kind == ClauseKind::kFact) expected.insert(expected.begin(), "':-'");
      if (c.kind != ClauseKind::kFact) expected.insert(expected.begin(), "','");
      fail("unexpected token after clause", expected);
    }
    c.span = Span::cover(start, take().span);
    return c;
  }

  Call head() {
    const Token& t = peek();
    if (t.kind != TokenKind::kAtom) {
      if (t.kind == TokenKind::kVariable) fail("clause head must be a predicate", {"atom"});
      fail("unexpected token at start of clause", {"atom", "'?-'", "':-'"});
    }
    Term h = primary();
    if (h.is<Atom>()) return Call{h.as<Atom>().name, {}};
    if (h.is<Compound>()) {
      auto& comp = std::get<Compound>(h.node);
      return Call{comp.name, std::move(comp.args)};
    }
    fail("clause head must be a predicate", {"atom"});
  }

  std::vector<BodyItem> body() {
    std::vector<BodyItem> items;
    items.push_back(goal());
    while (peek().is(TokenKind::kPunct, ",")) {
      take();
      items.push_back(goal());
    }
    reject_unsupported_punct();
    return items;
  }

  BodyItem goal() {
    reject_unsupported_punct();
    const Token& first = peek();
    Span start = first.span;
    if (first.is(TokenKind::kOperator, "\\+")) {
      take();
      BodyItem inner = [&] {
        if (peek().is(TokenKind::kPunct, "(")) {
          take();
          BodyItem g = goal();
          expect_punct(")", "in negated goal");
          return g;
        }
        return goal();
      }();
      Span span = Span::cover(start, previous().span);
      return BodyItem{Negation{Box<BodyItem>(std::move(inner))}, span};
    }
    if (first.kind == TokenKind::kEnd || first.is(TokenKind::kPunct, ".")) {
      fail("expected a goal", {"predicate", "constraint"});
    }

    Term lhs = expression();
    const Token& op = peek();
    auto finish = [&](BodyItem::Node node) {
      return BodyItem{std::move(node), Span::cover(start, previous().span)};
    };
    if (auto cmp = compare_op(op)) {
      take();
      Term rhs = expression();
      return finish(ArithConstraint{*cmp, std::move(lhs), std::move(rhs)});
    }
    if (op.kind == TokenKind::kOperator) {
      if (op.text == "=") {
        take();
        Term rhs = expression();
        return finish(Unify{std::move(lhs), std::move(rhs)});
      }
      if (op.text == "=\\=" || op.text == "\\=") {
        take();
        Term rhs = expression();
        return finish(TermDiseq{std::move(lhs), std::move(rhs)});
      }
    }

    Call call;
    if (lhs.is<Atom>()) {
      call = Call{lhs.as<Atom>().name, {}};
    } else if (lhs.is<Compound>()) {
      auto& comp = std::get<Compound>(lhs.node);
      call = Call{comp.name, std::move(comp.args)};
    } else if (lhs.is<Var>()) {
      throw UnsupportedError("variable used as a goal", lhs.span);
    } else {
      throw ParseError("term is not a goal", lhs.span, {"predicate", "constraint"});
    }
    for (const auto& b : kUnsupportedBuiltins) {
      if (b.name == call.predicate && b.arity == call.args.size()) {
        throw UnsupportedError("builtin " + call.predicate + "/" +
                                   std::to_string(call.args.size()) + " is not supported",
                               lhs.span);
      }
    }
    return finish(std::move(call));
  }

  // expression := product (('+' | '-') product)*
  Term expression() {
    Term left = product();
    while (peek().is(TokenKind::kOperator, "+") || peek().is(TokenKind::kOperator, "-")) {
      ArithOp op = take().text == "+" ? ArithOp::kAdd : ArithOp::kSub;
      Term right = product();
      Span span = Span::cover(left.span, right.span);
      left = Term{ArithExpr{op, {std::move(left), std::move(right)}}, span};
    }
    return left;
  }

  // product := unary (('*' | '/' | 'mod') unary)*
  Term product() {
    Term left = unary();
    while (true) {
      const Token& t = peek();
      ArithOp op;
      if (t.is(TokenKind::kOperator, "*")) {
        op = ArithOp::kMul;
      } else if (t.is(TokenKind::kOperator, "/")) {
        op = ArithOp::kDiv;
      } else if (t.kind == TokenKind::kAtom && !t.quoted && t.text == "mod") {
        op = ArithOp::kMod;
      } else {
        return left;
      }
      take();
      Term right = unary();
      Span span = Span::cover(left.span, right.span);
      left = Term{ArithExpr{op, {std::move(left), std::move(right)}}, span};
    }
  }

  Term unary() {
    if (peek().is(TokenKind::kOperator, "-")) {
      Span start = take().span;
      Term operand = unary();
      Span span = Span::cover(start, operand.span);
      return Term{ArithExpr{ArithOp::kNeg, {std::move(operand)}}, span};
    }
    return primary();
  }

  Term primary() {
    const Token& t = peek();
    Span start = t.span;
    switch (t.kind) {
      case TokenKind::kVariable: {
        std::string name = take().text;
        if (name == "_") name = fresh_name();
        return Term{Var{std::move(name)}, start};
      }
      case TokenKind::kInteger: {
        Integer value(take().text);
        return Term{IntLit{std::move(value)}, start};
      }
      case TokenKind::kAtom: {
        std::string name = take().text;
        if (!peek().is(TokenKind::kPunct, "(")) return Term{Atom{std::move(name)}, start};
        take();
        std::vector<Term> args;
        args.push_back(expression());
        while (peek().is(TokenKind::kPunct, ",")) {
          take();
          args.push_back(expression());
        }
        expect_punct(")", "in argument list");
        return Term{Compound{std::move(name), std::move(args)},
                    Span::cover(start, previous().span)};
      }
      case TokenKind::kPunct:
        if (t.text == "[") return list();
        if (t.text == "(") {
          take();
          Term inner = expression();
          expect_punct(")", "in parenthesized expression");
          inner.span = Span::cover(start, previous().span);
          return inner;
        }
        reject_unsupported_punct();
        break;
      default:
        break;
    }
    fail("expected a term", {"variable", "atom", "integer", "'['", "'('"});
  }

  Term list() {
    Span start = take().span;  // '['
    if (peek().is(TokenKind::kPunct, "]")) {
      take();
      return Term{ListTerm{}, Span::cover(start, previous().span)};
    }
    ListTerm l;
    l.elements.push_back(expression());
    while (peek().is(TokenKind::kPunct, ",")) {
      take();
      l.elements.push_back(expression());
    }
    if (peek().is(TokenKind::kPunct, "|")) {
      take();
      l.tail = Box<Term>(expression());
    }
    if (!peek().is(TokenKind::kPunct, "]")) fail("unexpected token in list", {"','", "'|'", "']'"});
    take();
    return Term{std::move(l), Span::cover(start, previous().span)};
  }

  std::string fresh_name() {
    while (true) {
      std::string name = "_G" + std::to_string(++anon_counter_);
      if (used_names_.insert(name).second) return name;
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::unordered_set<std::string> used_names_;
  std::size_t anon_counter_ = 0;
};

}  // namespace

Database parse_program(std::string_view text) { return Parser(tokenize(text)).run(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

bool is_plain_atom(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), is_ident_char);
}

std::string_view to_string(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "+";
    case ArithOp::kSub:
    case ArithOp::kNeg: return "-";
    case ArithOp::kMul: return "*";
    case ArithOp::kDiv: return "/";
    case ArithOp::kMod: return "mod";
  }
  return "?";
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "#=";
    case CompareOp::kGt: return "#>";
    case CompareOp::kGe: return "#>=";
    case CompareOp::kLt: return "#<";
    case CompareOp::kLe: return "#=<";
    case CompareOp::kNe: return "#\\=";
  }
  return "?";
}

namespace {

std::string print_name(const std::string& name) {
  if (is_plain_atom(name)) return name;
  std::string out = "'";
  for (char c : name) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "'";
}

int priority(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
    case ArithOp::kSub: return 500;
    case ArithOp::kMul:
    case ArithOp::kDiv:
    case ArithOp::kMod: return 400;
    case ArithOp::kNeg: return 200;
  }
  return 0;
}

void print_into(const Term& t, std::string& out);

void print_operand(const Term& t, int max_priority, std::string& out) {
  if (t.is<ArithExpr>() && priority(t.as<ArithExpr>().op) > max_priority) {
    out += '(';
    print_into(t, out);
    out += ')';
  } else {
    print_into(t, out);
  }
}

void print_args(const std::vector<Term>& args, std::string& out) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    print_into(args[i], out);
  }
}

void print_into(const Term& t, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, Atom>) {
          out += print_name(n.name);
        } else if constexpr (std::is_same_v<T, Compound>) {
          out += print_name(n.name);
          out += '(';
          print_args(n.args, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, ListTerm>) {
          out += '[';
          print_args(n.elements, out);
          if (n.tail) {
            out += '|';
            print_into(**n.tail, out);
          }
          out += ']';
        } else if constexpr (std::is_same_v<T, IntLit>) {
          out += n.value.str();
        } else {
          if (n.op == ArithOp::kNeg) {
            out += '-';
            // Any nested operator is parenthesized so "- -X" never appears.
            print_operand(n.operands[0], 0, out);
          } else {
            int p = priority(n.op);
            print_operand(n.operands[0], p, out);
            out += ' ';
            out += to_string(n.op);
            out += ' ';
            print_operand(n.operands[1], p - 1, out);
          }
        }
      },
      t.node);
}

std::string print_call(const Call& c) {
  std::string out = print_name(c.predicate);
  if (!c.args.empty()) {
    out += '(';
    print_args(c.args, out);
    out += ')';
  }
  return out;
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::string print_body_item(const BodyItem& b) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Call>) {
          return print_call(n);
        } else if constexpr (std::is_same_v<T, Unify>) {
          return print_term(n.lhs) + " = " + print_term(n.rhs);
        } else if constexpr (std::is_same_v<T, TermDiseq>) {
          return print_term(n.lhs) + " =\\= " + print_term(n.rhs);
        } else if constexpr (std::is_same_v<T, Negation>) {
          return "\\+ (" + print_body_item(*n.inner) + ")";
        } else {
          return print_term(n.lhs) + " " + std::string(to_string(n.op)) + " " +
                 print_term(n.rhs);
        }
      },
      b.node);
}

std::string print_clause(const Clause& c) {
  std::string out;
  if (c.kind == ClauseKind::kQuery) {
    out = "?- ";
  } else {
    out = print_call(*c.head);
    if (c.kind == ClauseKind::kRule) out += " :- ";
  }
  for (std::size_t i = 0; i < c.body.size(); ++i) {
    if (i) out += ", ";
    out += print_body_item(c.body[i]);
  }
  return out + ".";
}

std::string print_program(const Database& db) {
  std::string out;
  for (const auto& c : db.clauses) {
    out += print_clause(c);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

void collect_variables(const Term& t, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          if (std::find(out.begin(), out.end(), n.name) == out.end()) out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, Compound>) {
          for (const auto& a : n.args) collect_variables(a, out);
        } else if constexpr (std::is_same_v<T, ListTerm>) {
          for (const auto& e : n.elements) collect_variables(e, out);
          if (n.tail) collect_variables(**n.tail, out);
        } else if constexpr (std::is_same_v<T, ArithExpr>) {
          for (const auto& a : n.operands) collect_variables(a, out);
        }
      },
      t.node);
}

void collect_variables(const BodyItem& b, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : n.args) collect_variables(a, out);
        } else if constexpr (std::is_same_v<T, Negation>) {
          collect_variables(*n.inner, out);
        } else {
          collect_variables(n.lhs, out);
          collect_variables(n.rhs, out);
        }
      },
      b.node);
}

std::vector<std::string> clause_variables(const Clause& c) {
  std::vector<std::string> out;
  if (c.head) {
    for (const auto& a : c.head->args) collect_variables(a, out);
  }
  for (const auto& b : c.body) collect_variables(b, out);
  return out;
}

}  // namespace clp2chc::syntax
