#include "chow/dsl/parser.hpp"

#include <cctype>
#include <optional>

#include "chow/param_poly.hpp"

namespace chow::dsl {

ParseError::ParseError(SourcePos pos, std::string token, const std::string& message)
    : Error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " +
            message + (token.empty() ? "" : " (at '" + token + "')")),
      pos_(pos),
      token_(std::move(token)),
      message_(message) {}

Scope Scope::initial() {
  Scope s;
  for (const auto& p : standard_parameters()) s.params.insert(p.name);
  return s;
}

bool Scope::is_bound(const std::string& name) const {
  return params.count(name) || rings.count(name) || values.count(name) || bundles.count(name);
}

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
  Ident, Keyword, Number, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket,
  Comma, Semi, Newline, Equals, Colon, Dot, Arrow, End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool is_keyword(std::string_view s) {
  return s == "ring" || s == "let" || s == "bundle" || s == "param" || s == "assert_eq";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  int depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    const SourcePos pos{line, col};
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (c == '\n') {
      if (depth == 0) out.push_back({Tok::Newline, "\\n", pos});
      advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      out.push_back({is_keyword(word) ? Tok::Keyword : Tok::Ident, word, pos});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '.')) {
        throw ParseError(pos, std::string(src.substr(i, j - i + 1)),
                         "lexical error: malformed number (only integer literals are allowed)");
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", pos});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; ++depth; break;
      case ')': kind = Tok::RParen; depth = std::max(0, depth - 1); break;
      case '[': kind = Tok::LBracket; ++depth; break;
      case ']': kind = Tok::RBracket; depth = std::max(0, depth - 1); break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Equals; break;
      case ':': kind = Tok::Colon; break;
      case '.': kind = Tok::Dot; break;
      default: {
        // Take the whole UTF-8 sequence for the message.
        std::size_t j = i + 1;
        while (j < src.size() && (static_cast<unsigned char>(src[j]) & 0xC0) == 0x80) ++j;
        throw ParseError(pos, std::string(src.substr(i, j - i)), "lexical error: unexpected character");
      }
    }
    out.push_back({kind, std::string(1, c), pos});
    advance();
  }
  out.push_back({Tok::End, "", SourcePos{line, col}});
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

enum class Ty { Value, Bundle, Ring, List, Generator };

using MutExpr = std::shared_ptr<Expr>;

const char* ty_name(Ty t) {
  switch (t) {
    case Ty::Value: return "a value";
    case Ty::Bundle: return "a bundle";
    case Ty::Ring: return "a ring";
    case Ty::List: return "a list";
    case Ty::Generator: return "a generator declaration";
  }
  return "?";
}

class Impl {
 public:
  Impl(std::vector<Token> toks, Scope& scope) : toks_(std::move(toks)), scope_(scope) {}

  Program program() {
    Program prog;
    skip_separators();
    while (peek().kind != Tok::End) {
      prog.statements.push_back(statement());
      if (peek().kind != Tok::End && !is_separator(peek().kind)) {
        fail(peek(), "syntax error: expected ';' or end of line after statement");
      }
      skip_separators();
    }
    return prog;
  }

 private:
  // -- token helpers --------------------------------------------------------

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  static bool is_separator(Tok t) { return t == Tok::Semi || t == Tok::Newline; }
  void skip_separators() {
    while (is_separator(peek().kind)) take();
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.pos, t.kind == Tok::End ? "end of input" : t.text, msg);
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("syntax error: expected ") + what);
    return take();
  }
  std::string identifier(const char* role) {
    const Token& t = peek();
    if (t.kind == Tok::Keyword) fail(t, std::string("syntax error: reserved word cannot be used as ") + role);
    if (t.kind != Tok::Ident) fail(t, std::string("syntax error: expected ") + role);
    return take().text;
  }
  void declare(const Token& at, const std::string& name) {
    if (scope_.is_bound(name) || current_generator(name)) {
      fail(at, "duplicate binding: '" + name + "' is already defined");
    }
  }
  bool current_generator(const std::string& name) const {
    auto it = scope_.rings.find(scope_.current_ring);
    if (it == scope_.rings.end()) return false;
    for (const auto& g : it->second) {
      if (g == name) return true;
    }
    return false;
  }

  // -- statements -----------------------------------------------------------

  Statement statement() {
    const Token& first = peek();
    Statement st;
    st.pos = first.pos;
    if (first.kind == Tok::Keyword) {
      take();
      if (first.text == "ring") {
        st.node = ring_decl();
      } else if (first.text == "let") {
        const Token& at = peek();
        std::string name = identifier("a binding name");
        expect(Tok::Equals, "'='");
        MutExpr value = expr();
        expect_type(*value, Ty::Value);
        declare(at, name);
        scope_.values.insert(name);
        st.node = LetDecl{name, value};
      } else if (first.text == "bundle") {
        const Token& at = peek();
        std::string name = identifier("a bundle name");
        expect(Tok::Equals, "'='");
        MutExpr value = expr();
        expect_type(*value, Ty::Bundle);
        declare(at, name);
        scope_.bundles.insert(name);
        st.node = BundleDecl{name, value};
      } else if (first.text == "param") {
        ParamDecl decl;
        do {
          const Token& at = peek();
          std::string name = identifier("a parameter name");
          declare(at, name);
          scope_.params.insert(name);
          decl.names.push_back(name);
        } while (peek().kind == Tok::Comma && (take(), true));
        st.node = decl;
      } else {  // assert_eq
        MutExpr lhs = expr();
        expect_type(*lhs, Ty::Value);
        expect(Tok::Comma, "',' between the two sides of assert_eq");
        MutExpr rhs = expr();
        expect_type(*rhs, Ty::Value);
        st.node = AssertEq{lhs, rhs};
      }
      return st;
    }
    MutExpr value = expr();
    expect_type(*value, Ty::Value);
    st.node = ExprStmt{value};
    return st;
  }

  RingDecl ring_decl() {
    const Token& at = peek();
    std::string name = identifier("a ring name");
    expect(Tok::Equals, "'='");
    MutExpr ctor = expr(/*ring_ctor=*/true);
    if (ctor->kind != ExprKind::Call) fail(at, "type error: ring constructor expected");
    declare(at, name);
    std::vector<std::string> gens = check_ring_ctor(*ctor, name, at);
    for (const auto& g : gens) {
      if (scope_.is_bound(g)) {
        fail(at, "duplicate binding: generator '" + g + "' clashes with an existing name");
      }
    }
    scope_.rings[name] = gens;
    scope_.current_ring = name;
    return RingDecl{name, ctor};
  }

  // -- expressions ----------------------------------------------------------
  //
  // While parsing a ring constructor, unknown names are left unresolved;
  // check_ring_ctor assigns them.

  MutExpr expr(bool ring_ctor = false) {
    MutExpr lhs = term(ring_ctor);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      MutExpr rhs = term(ring_ctor);
      lhs = binary(op.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub, op.pos, lhs, rhs);
    }
    if (peek().kind == Tok::Arrow) {
      const Token& op = take();
      MutExpr rhs = expr(ring_ctor);
      lhs = binary(ExprKind::Rule, op.pos, lhs, rhs);
    }
    return lhs;
  }

  MutExpr term(bool ring_ctor) {
    MutExpr lhs = factor(ring_ctor);
    while (peek().kind == Tok::Star) {
      const Token& op = take();
      MutExpr rhs = factor(ring_ctor);
      lhs = binary(ExprKind::Mul, op.pos, lhs, rhs);
    }
    return lhs;
  }

  MutExpr factor(bool ring_ctor) {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::Neg;
      e->pos = op.pos;
      e->operands.push_back(factor(ring_ctor));
      return e;
    }
    MutExpr base = atom(ring_ctor);
    if (peek().kind == Tok::Caret) {
      const Token& op = take();
      const Token& n = expect(Tok::Number, "a non-negative integer exponent");
      if (n.text.size() > 4) fail(n, "syntax error: exponent too large");
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::Pow;
      e->pos = op.pos;
      e->exponent = static_cast<unsigned>(std::stoul(n.text));
      e->operands.push_back(base);
      return e;
    }
    return base;
  }

  MutExpr atom(bool ring_ctor) {
    const Token& t = peek();
    auto e = std::make_shared<Expr>();
    e->pos = t.pos;
    switch (t.kind) {
      case Tok::Number:
        take();
        e->kind = ExprKind::Number;
        e->number = mpz_class(t.text);
        return e;
      case Tok::LParen: {
        take();
        MutExpr inner = expr(ring_ctor);
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::LBracket: {
        take();
        e->kind = ExprKind::List;
        if (peek().kind != Tok::RBracket) {
          do {
            e->operands.push_back(list_item(ring_ctor));
          } while (peek().kind == Tok::Comma && (take(), true));
        }
        expect(Tok::RBracket, "']'");
        return e;
      }
      case Tok::Ident: {
        take();
        e->name = t.text;
        if (peek().kind == Tok::LParen) {
          take();
          e->kind = ExprKind::Call;
          if (peek().kind != Tok::RParen) {
            do {
              std::string label;
              if (peek().kind == Tok::Ident && peek(1).kind == Tok::Equals) {
                label = take().text;
                take();
              }
              e->labels.push_back(label);
              e->operands.push_back(expr(ring_ctor));
            } while (peek().kind == Tok::Comma && (take(), true));
          }
          expect(Tok::RParen, "')'");
          return e;
        }
        if (peek().kind == Tok::Dot) {
          take();
          e->kind = ExprKind::Member;
          e->member = identifier("a generator name");
          return e;
        }
        e->kind = ExprKind::Name;
        return e;
      }
      case Tok::Keyword:
        fail(t, "syntax error: reserved word '" + t.text + "' in expression");
      default:
        fail(t, "syntax error: expected an expression");
    }
  }

  MutExpr list_item(bool ring_ctor) {
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Colon) {
      auto e = std::make_shared<Expr>();
      e->pos = peek().pos;
      e->kind = ExprKind::Annotated;
      e->name = take().text;
      take();
      const Token& n = expect(Tok::Number, "a generator degree");
      e->number = mpz_class(n.text);
      return e;
    }
    return expr(ring_ctor);
  }

  static MutExpr binary(ExprKind kind, SourcePos pos, MutExpr a, MutExpr b) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    e->operands = {std::move(a), std::move(b)};
    return e;
  }

  // -- resolution and type checking ---------------------------------------

  static Token token_of(const Expr& e) {
    std::string text = e.name;
    if (e.kind == ExprKind::Number) text = e.number.get_str();
    if (e.kind == ExprKind::Member) text = e.name + "." + e.member;
    return Token{Tok::Ident, text, e.pos};
  }

  [[noreturn]] static void type_fail(const Expr& e, const std::string& msg) {
    fail(token_of(e), "type error: " + msg);
  }

  void expect_type(Expr& e, Ty want) {
    const Ty got = type_of(e);
    if (got != want) type_fail(e, std::string("expected ") + ty_name(want) + ", found " + ty_name(got));
  }

  static void expect_number(const Expr& e, const char* what) {
    if (e.kind != ExprKind::Number) type_fail(e, std::string("expected an integer literal for ") + what);
  }

  void expect_arity(const Expr& call, std::size_t n) {
    if (call.operands.size() != n) {
      type_fail(call, call.name + " takes " + std::to_string(n) + " argument(s), got " +
                          std::to_string(call.operands.size()));
    }
  }

  void no_labels(const Expr& call) {
    for (const auto& l : call.labels) {
      if (!l.empty()) type_fail(call, call.name + " does not take labelled arguments");
    }
  }

  Ty resolve_name(Expr& e) {
    const std::string& n = e.name;
    if (scope_.values.count(n)) {
      e.resolved = NameKind::Value;
      return Ty::Value;
    }
    if (current_generator(n)) {
      e.resolved = NameKind::Generator;
      e.ring = scope_.current_ring;
      return Ty::Value;
    }
    if (scope_.params.count(n)) {
      e.resolved = NameKind::Param;
      return Ty::Value;
    }
    if (scope_.bundles.count(n)) {
      e.resolved = NameKind::Bundle;
      return Ty::Bundle;
    }
    if (scope_.rings.count(n)) {
      e.resolved = NameKind::Ring;
      return Ty::Ring;
    }
    fail(token_of(e), "unknown identifier '" + n + "'");
  }

  Ty type_of(Expr& e) {
    switch (e.kind) {
      case ExprKind::Number:
        return Ty::Value;
      case ExprKind::Name:
        if (e.resolved == NameKind::Generator && !e.ring.empty()) return Ty::Value;
        return resolve_name(e);
      case ExprKind::Member: {
        auto it = scope_.rings.find(e.name);
        if (it == scope_.rings.end()) fail(token_of(e), "unknown ring '" + e.name + "'");
        if (std::find(it->second.begin(), it->second.end(), e.member) == it->second.end()) {
          fail(token_of(e), "ring '" + e.name + "' has no generator '" + e.member + "'");
        }
        e.resolved = NameKind::Generator;
        e.ring = e.name;
        return Ty::Value;
      }
      case ExprKind::Add:
      case ExprKind::Sub:
      case ExprKind::Mul:
        expect_type(mut(e.operands[0]), Ty::Value);
        expect_type(mut(e.operands[1]), Ty::Value);
        return Ty::Value;
      case ExprKind::Neg:
      case ExprKind::Pow:
        expect_type(mut(e.operands[0]), Ty::Value);
        return Ty::Value;
      case ExprKind::List:
        return Ty::List;
      case ExprKind::Annotated:
        return Ty::Generator;
      case ExprKind::Rule:
        type_fail(e, "rewrite rules are only allowed inside presented(...)");
      case ExprKind::Call:
        if (is_bundle_ctor(e)) {
          check_bundle_ctor(e);
          return Ty::Bundle;
        }
        return check_value_call(e);
    }
    return Ty::Value;
  }

  bool is_bundle_ctor(Expr& call) {
    static const std::set<std::string> ctors{"classes", "line", "trivial", "sum",
                                             "quotient", "twist", "dual"};
    if (ctors.count(call.name)) return true;
    if (call.name == "pullback" && call.operands.size() == 2) {
      Expr& arg = mut(call.operands[1]);
      return arg.kind == ExprKind::Call ? is_bundle_ctor(arg)
                                        : arg.kind == ExprKind::Name && scope_.bundles.count(arg.name);
    }
    return false;
  }

  static Expr& mut(const ExprPtr& p) { return const_cast<Expr&>(*p); }

  Ty check_value_call(Expr& call) {
    const std::string& f = call.name;
    auto arg = [&](std::size_t i) -> Expr& { return mut(call.operands[i]); };
    if (f == "subst") {
      if (call.operands.empty()) type_fail(call, "subst needs a value to substitute into");
      if (!call.labels[0].empty()) type_fail(call, "first argument of subst is positional");
      expect_type(arg(0), Ty::Value);
      for (std::size_t i = 1; i < call.operands.size(); ++i) {
        const std::string& label = call.labels[i];
        if (label.empty()) type_fail(arg(i), "subst bindings are written name = value");
        if (!scope_.params.count(label)) type_fail(arg(i), "'" + label + "' is not a parameter");
        expect_type(arg(i), Ty::Value);
      }
      return Ty::Value;
    }
    no_labels(call);
    if (f == "integrate") {
      expect_arity(call, 1);
      expect_type(arg(0), Ty::Value);
    } else if (f == "part") {
      expect_arity(call, 2);
      expect_type(arg(0), Ty::Value);
      expect_number(arg(1), "the degree");
    } else if (f == "chern" || f == "segre") {
      expect_arity(call, 2);
      expect_type(arg(0), Ty::Bundle);
      expect_number(arg(1), "the index");
    } else if (f == "det") {
      expect_arity(call, 1);
      expect_type(arg(0), Ty::Bundle);
    } else if (f == "canonical" || f == "euler") {
      expect_arity(call, 1);
      expect_type(arg(0), Ty::Ring);
    } else if (f == "pullback" || f == "pushforward") {
      expect_arity(call, 2);
      expect_type(arg(0), Ty::Ring);
      expect_type(arg(1), Ty::Value);
    } else {
      type_fail(call, "unknown function '" + f + "'");
    }
    return Ty::Value;
  }

  void check_bundle_ctor(Expr& call) {
    no_labels(call);
    const std::string& f = call.name;
    auto arg = [&](std::size_t i) -> Expr& { return mut(call.operands[i]); };
    if (f == "classes") {
      if (call.operands.empty()) type_fail(call, "classes needs a rank");
      expect_number(arg(0), "the rank");
      for (std::size_t i = 1; i < call.operands.size(); ++i) expect_type(arg(i), Ty::Value);
    } else if (f == "line") {
      expect_arity(call, 1);
      expect_type(arg(0), Ty::Value);
    } else if (f == "trivial") {
      expect_arity(call, 1);
      expect_number(arg(0), "the rank");
    } else if (f == "sum" || f == "quotient") {
      expect_arity(call, 2);
      expect_type(arg(0), Ty::Bundle);
      expect_type(arg(1), Ty::Bundle);
    } else if (f == "twist") {
      expect_arity(call, 2);
      expect_type(arg(0), Ty::Bundle);
      expect_type(arg(1), Ty::Value);
    } else if (f == "dual") {
      expect_arity(call, 1);
      expect_type(arg(0), Ty::Bundle);
    } else if (f == "pullback") {
      expect_arity(call, 2);
      expect_type(arg(0), Ty::Ring);
      expect_type(arg(1), Ty::Bundle);
    } else {
      type_fail(call, "unknown bundle constructor '" + f + "'");
    }
    if (scope_.current_ring.empty()) type_fail(call, f + " needs a ring to be declared first");
  }

  /// Parameters in ring constructors are declared on first use.
  void resolve_implicit(Expr& e, const std::string& new_ring, const std::vector<std::string>& new_gens) {
    switch (e.kind) {
      case ExprKind::Name: {
        if (std::find(new_gens.begin(), new_gens.end(), e.name) != new_gens.end()) {
          e.resolved = NameKind::Generator;
          e.ring = new_ring;
          return;
        }
        if (!scope_.is_bound(e.name) && !current_generator(e.name)) {
          scope_.params.insert(e.name);
          e.resolved = NameKind::Param;
          return;
        }
        resolve_name(e);
        return;
      }
      case ExprKind::Number:
      case ExprKind::Member:
        type_of(e);
        return;
      case ExprKind::Call:
        type_of(e);
        return;
      default:
        for (const auto& op : e.operands) resolve_implicit(mut(op), new_ring, new_gens);
        return;
    }
  }

  void expect_value_with_implicit(Expr& e, const std::string& ring, const std::vector<std::string>& gens) {
    if (e.kind == ExprKind::List || e.kind == ExprKind::Annotated || e.kind == ExprKind::Rule) {
      type_fail(e, "expected a value");
    }
    resolve_implicit(e, ring, gens);
    expect_type(e, Ty::Value);
  }

  std::vector<std::string> check_ring_ctor(Expr& call, const std::string& name, const Token& at) {
    no_labels(call);
    const std::string& f = call.name;
    auto arg = [&](std::size_t i) -> Expr& { return mut(call.operands[i]); };
    if (f == "curve") {
      expect_arity(call, 1);
      expect_value_with_implicit(arg(0), name, {});
      return {"pt"};
    }
    if (f == "p2_bundle") {
      expect_arity(call, 2);
      if (arg(0).kind == ExprKind::Name && scope_.rings.count(arg(0).name)) {
        expect_type(arg(0), Ty::Ring);
      } else {
        expect_value_with_implicit(arg(0), name, {});
      }
      expect_value_with_implicit(arg(1), name, {});
      return {"H", "F"};
    }
    if (f == "proj") {
      expect_arity(call, 2);
      expect_type(arg(0), Ty::Ring);
      expect_type(arg(1), Ty::Bundle);
      std::vector<std::string> gens{"xi"};
      const auto& base = scope_.rings.at(arg(0).name);
      gens.insert(gens.end(), base.begin(), base.end());
      return gens;
    }
    if (f == "presented") {
      expect_arity(call, 4);
      expect_number(arg(0), "the dimension");
      Expr& gen_list = arg(1);
      Expr& rule_list = arg(2);
      if (gen_list.kind != ExprKind::List || gen_list.operands.empty()) {
        type_fail(gen_list, "expected a non-empty generator list such as [H, F]");
      }
      std::vector<std::string> gens;
      for (const auto& g : gen_list.operands) {
        if (g->kind != ExprKind::Name && g->kind != ExprKind::Annotated) {
          type_fail(*g, "expected a generator name or name:degree");
        }
        if (std::find(gens.begin(), gens.end(), g->name) != gens.end()) {
          fail(token_of(*g), "duplicate binding: generator '" + g->name + "' listed twice");
        }
        mut(g).resolved = NameKind::Generator;
        mut(g).ring = name;
        gens.push_back(g->name);
      }
      if (rule_list.kind != ExprKind::List) type_fail(rule_list, "expected a rule list such as [F^2 -> 0]");
      for (const auto& r : rule_list.operands) {
        if (r->kind != ExprKind::Rule) type_fail(*r, "expected a rule lhs -> rhs");
        expect_value_with_implicit(mut(r->operands[0]), name, gens);
        expect_value_with_implicit(mut(r->operands[1]), name, gens);
      }
      expect_value_with_implicit(arg(3), name, gens);
      return gens;
    }
    fail(at, "type error: unknown ring constructor '" + f + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Scope& scope_;
};

}  // namespace

Program Parser::parse(std::string_view text) {
  Scope working = scope_;
  Impl impl(lex(text), working);
  Program prog = impl.program();
  scope_ = std::move(working);
  return prog;
}

Program parse_program(std::string_view text) { return Parser().parse(text); }

}  // namespace chow::dsl
