#include "depcat/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <set>
#include <sstream>

namespace depcat {

std::string Span::str() const {
  std::ostringstream os;
  os << line << ":" << col << "-" << end_line << ":" << end_col;
  return os.str();
}

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Dot,
  Lambda,     // '\' or unicode lambda
  Turnstile,  // |-
  Arrow,      // ->
  Star,       // '*' (product sugar)
  Equals,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span span;
};

struct Lexer {
  explicit Lexer(const std::string& src) : s(src) {}

  const std::string& s;
  std::size_t pos = 0;
  int line = 1, col = 1;

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos < s.size(); ++i) {
      if (s[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  bool starts_with(const char* p) const {
    return s.compare(pos, std::strlen(p), p) == 0;
  }

  void skip_ws() {
    for (;;) {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == '\n'))
        advance();
      if (pos < s.size() && s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') advance();
        continue;
      }
      break;
    }
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  Token next() {
    skip_ws();
    Token t;
    t.span.line = line;
    t.span.col = col;
    auto finish = [&](Tok k, std::string text, std::size_t len) {
      t.kind = k;
      t.text = std::move(text);
      advance(len);
      t.span.end_line = line;
      t.span.end_col = col;
      return t;
    };
    if (pos >= s.size()) return finish(Tok::End, "", 0);

    // unicode aliases
    if (starts_with("\xce\xbb")) return finish(Tok::Lambda, "\\", 2);            // lambda
    if (starts_with("\xe2\x8a\xa2")) return finish(Tok::Turnstile, "|-", 3);     // turnstile
    if (starts_with("\xe2\x86\x92")) return finish(Tok::Arrow, "->", 3);         // right arrow
    if (starts_with("\xc3\x97")) return finish(Tok::Star, "*", 2);               // times
    if (starts_with("\xe2\x8b\x86")) return finish(Tok::Ident, "star", 3);       // star
    if (starts_with("\xe2\x98\x85")) return finish(Tok::Ident, "star", 3);       // black star
    if (starts_with("\xce\xa0")) return finish(Tok::Ident, "Pi", 2);             // Pi
    if (starts_with("\xce\xa3")) return finish(Tok::Ident, "Sigma", 2);          // Sigma
    if (starts_with("\xe2\x8b\x84")) return finish(Tok::Ident, "diamond", 3);    // empty ctx

    const char c = s[pos];
    if (starts_with("|-")) return finish(Tok::Turnstile, "|-", 2);
    if (starts_with("->")) return finish(Tok::Arrow, "->", 2);
    switch (c) {
      case '(': return finish(Tok::LParen, "(", 1);
      case ')': return finish(Tok::RParen, ")", 1);
      case '[': return finish(Tok::LBracket, "[", 1);
      case ']': return finish(Tok::RBracket, "]", 1);
      case ',': return finish(Tok::Comma, ",", 1);
      case ':': return finish(Tok::Colon, ":", 1);
      case '.': return finish(Tok::Dot, ".", 1);
      case '\\': return finish(Tok::Lambda, "\\", 1);
      case '*': return finish(Tok::Star, "*", 1);
      case '=': return finish(Tok::Equals, "=", 1);
      default: break;
    }
    if (ident_start(c)) {
      std::size_t end = pos;
      while (end < s.size() && ident_char(s[end])) ++end;
      return finish(Tok::Ident, s.substr(pos, end - pos), end - pos);
    }
    throw ParseError(ParseErrorKind::Syntax, t.span, std::string("unexpected character '") + c + "'");
  }
};

struct Parser {
  explicit Parser(const std::string& src) : lex(src) { toks.push_back(lex.next()); }

  Lexer lex;
  std::vector<Token> toks;
  std::size_t at = 0;

  std::set<std::string> ty_consts;
  std::set<std::string> tm_consts;
  std::map<std::string, TmRef> defs;
  std::vector<std::string> scope;  // bound names, outermost first

  const Token& peek(std::size_t k = 0) {
    while (at + k >= toks.size()) toks.push_back(lex.next());
    return toks[at + k];
  }
  Token take() {
    const Token t = peek();
    ++at;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++at;
      return true;
    }
    return false;
  }
  bool accept_kw(const char* kw) {
    if (peek().kind == Tok::Ident && peek().text == kw) {
      ++at;
      return true;
    }
    return false;
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(ParseErrorKind::Syntax, peek().span,
                       std::string("expected ") + what + ", found '" + peek().text + "'");
    return take();
  }
  void expect_kw(const char* kw) {
    if (!accept_kw(kw))
      throw ParseError(ParseErrorKind::Syntax, peek().span,
                       std::string("expected '") + kw + "', found '" + peek().text + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(ParseErrorKind::Syntax, peek().span, msg);
  }

  bool is_kw(const char* kw) { return peek().kind == Tok::Ident && peek().text == kw; }

  static bool reserved(const std::string& n) {
    static const std::set<std::string> kws = {"Unit", "Pi",    "Sigma",     "star",
                                              "rsig", "type",  "ctx",       "typeconst",
                                              "termconst",     "axiom",     "check",
                                              "eval", "def",   "diamond"};
    return kws.count(n) > 0;
  }

  // ---- types ----------------------------------------------------------------

  TyRef parse_type() {
    if (is_kw("Pi") || is_kw("Sigma")) {
      const bool pi = peek().text == "Pi";
      take();
      expect(Tok::LParen, "'('");
      const Token name = expect(Tok::Ident, "binder name");
      expect(Tok::Colon, "':'");
      TyRef dom = parse_type();
      expect(Tok::RParen, "')'");
      scope.push_back(name.text);
      TyRef cod = parse_type();
      scope.pop_back();
      return pi ? ty_pi(dom, cod, name.text) : ty_sigma(dom, cod, name.text);
    }
    return parse_arrow();
  }

  TyRef parse_arrow() {
    TyRef lhs = parse_prod();
    if (accept(Tok::Arrow)) {
      // Non-dependent sugar: the codomain is parsed in the outer scope and
      // shifted under the vacuous binder.
      TyRef rhs = parse_type();
      return ty_pi(lhs, shift_ty(rhs, 1), "_");
    }
    return lhs;
  }

  TyRef parse_prod() {
    TyRef lhs = parse_atom_type();
    if (accept(Tok::Star)) {
      TyRef rhs = parse_prod();
      return ty_sigma(lhs, shift_ty(rhs, 1), "_");
    }
    return lhs;
  }

  TyRef parse_atom_type() {
    if (accept_kw("Unit")) return ty_unit();
    if (peek().kind == Tok::Ident) {
      const Token name = take();
      if (reserved(name.text))
        throw ParseError(ParseErrorKind::Syntax, name.span,
                         "'" + name.text + "' cannot appear here");
      if (!ty_consts.count(name.text)) {
        const auto kind = tm_consts.count(name.text) || defs.count(name.text)
                              ? ParseErrorKind::Syntax
                              : ParseErrorKind::ForwardReference;
        throw ParseError(kind, name.span, "unknown type constant '" + name.text + "'");
      }
      expect(Tok::LBracket, "'[' (type constants are applied with brackets)");
      std::vector<TmRef> args = parse_term_list(Tok::RBracket);
      return ty_const(name.text, std::move(args));
    }
    if (accept(Tok::LParen)) {
      TyRef t = parse_type();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("expected a type");
  }

  std::vector<TmRef> parse_term_list(Tok closer) {
    std::vector<TmRef> args;
    if (peek().kind == closer) {
      take();
      return args;
    }
    for (;;) {
      args.push_back(parse_term());
      if (accept(Tok::Comma)) continue;
      if (peek().kind == closer) {
        take();
        return args;
      }
      fail("expected ',' or closing bracket");
    }
  }

  // ---- terms ----------------------------------------------------------------

  TmRef parse_term() {
    if (accept(Tok::Lambda)) {
      const Token name = expect(Tok::Ident, "binder name");
      expect(Tok::Dot, "'.'");
      scope.push_back(name.text);
      TmRef body = parse_term();
      scope.pop_back();
      return tm_lam(body, name.text);
    }
    return parse_app();
  }

  TmRef parse_app() {
    TmRef head = parse_atom_term();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::LParen || k == Tok::Lambda ||
          (k == Tok::Ident && !is_kw("type") && !is_kw("ctx"))) {
        if (k == Tok::Ident && reserved(peek().text) && !is_kw("star") && !is_kw("rsig"))
          break;
        head = tm_app(head, parse_atom_term());
        continue;
      }
      break;
    }
    return head;
  }

  TmRef parse_atom_term() {
    if (accept_kw("star")) return tm_star();
    if (is_kw("rsig")) return parse_rsig();
    if (peek().kind == Tok::Ident) {
      const Token name = take();
      if (reserved(name.text))
        throw ParseError(ParseErrorKind::Syntax, name.span, "'" + name.text + "' cannot appear here");
      if (peek().kind == Tok::LBracket) {
        if (!tm_consts.count(name.text)) {
          const auto kind = ty_consts.count(name.text) ? ParseErrorKind::Syntax
                                                       : ParseErrorKind::ForwardReference;
          throw ParseError(kind, name.span, "unknown term constant '" + name.text + "'");
        }
        take();
        std::vector<TmRef> args = parse_term_list(Tok::RBracket);
        return tm_const(name.text, std::move(args));
      }
      // bound variable, innermost first
      for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i) {
        if (scope[static_cast<std::size_t>(i)] == name.text)
          return tm_var(static_cast<int>(scope.size()) - 1 - i, name.text);
      }
      auto d = defs.find(name.text);
      if (d != defs.end()) return d->second;
      throw ParseError(ParseErrorKind::Syntax, name.span, "unbound variable '" + name.text + "'");
    }
    if (accept(Tok::LParen)) {
      TmRef first = parse_term();
      if (accept(Tok::Comma)) {
        TmRef second = parse_term();
        expect(Tok::RParen, "')'");
        return tm_pair(first, second);
      }
      expect(Tok::RParen, "')'");
      return first;
    }
    fail("expected a term");
  }

  // rsig[z : S . C](x.y.g, p)
  TmRef parse_rsig() {
    expect_kw("rsig");
    expect(Tok::LBracket, "'['");
    const Token z = expect(Tok::Ident, "motive binder");
    expect(Tok::Colon, "':' (the eliminated Sigma type annotation is mandatory)");
    TyRef sigma = parse_type();
    if (!std::holds_alternative<TySigma>(sigma->node))
      fail("rsig annotation must be a Sigma type");
    expect(Tok::Dot, "'.'");
    scope.push_back(z.text);
    TyRef motive = parse_type();
    scope.pop_back();
    expect(Tok::RBracket, "']'");
    expect(Tok::LParen, "'('");
    const Token x = expect(Tok::Ident, "branch binder");
    expect(Tok::Dot, "'.'");
    const Token y = expect(Tok::Ident, "branch binder");
    expect(Tok::Dot, "'.'");
    scope.push_back(x.text);
    scope.push_back(y.text);
    TmRef branch = parse_term();
    scope.pop_back();
    scope.pop_back();
    expect(Tok::Comma, "','");
    TmRef scrut = parse_term();
    expect(Tok::RParen, "')'");
    return tm_sig_elim(sigma, motive, branch, scrut, z.text, x.text, y.text);
  }

  // ---- contexts ---------------------------------------------------------------

  // '(' x : A (',' y : B)* ')' | '(' ')' | 'diamond'
  Ctx parse_ctx_expr() {
    std::vector<CtxEntry> entries;
    if (accept_kw("diamond")) return Ctx{};
    expect(Tok::LParen, "'('");
    if (accept(Tok::RParen)) return Ctx{};
    std::set<std::string> seen;
    const std::size_t scope_mark = scope.size();
    for (;;) {
      const Token name = expect(Tok::Ident, "variable name");
      if (seen.count(name.text))
        throw ParseError(ParseErrorKind::Syntax, name.span,
                         "duplicate context variable '" + name.text + "'");
      seen.insert(name.text);
      expect(Tok::Colon, "':'");
      TyRef ty = parse_type();
      entries.push_back(CtxEntry{name.text, ty});
      scope.push_back(name.text);
      if (accept(Tok::Comma)) continue;
      expect(Tok::RParen, "')'");
      break;
    }
    scope.resize(scope_mark);
    return Ctx(std::move(entries));
  }

  bool looks_like_ctx_expr() {
    if (is_kw("diamond")) return true;
    if (peek().kind != Tok::LParen) return false;
    if (peek(1).kind == Tok::RParen) return true;
    return peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon;
  }

  // ---- judgements ---------------------------------------------------------------

  Judgement parse_judgement() {
    Ctx ambient;
    bool have_ambient = false;
    if (looks_like_ctx_expr() && !is_ctx_judgement_ahead()) {
      ambient = parse_ctx_expr();
      have_ambient = true;
    }
    expect(Tok::Turnstile, "'|-'");
    // ctx judgements: |- (..) ctx  or  |- (..) = (..) ctx
    if (!have_ambient && looks_like_ctx_expr()) {
      Ctx lhs = parse_ctx_expr();
      if (accept(Tok::Equals)) {
        Ctx rhs = parse_ctx_expr();
        expect_kw("ctx");
        return Judgement::ctx_eq(std::move(lhs), std::move(rhs));
      }
      expect_kw("ctx");
      return Judgement::ctx_wf(std::move(lhs));
    }
    return parse_judgement_body(std::move(ambient));
  }

  bool is_ctx_judgement_ahead() {
    // Within this item, a context expression before '|-' is an ambient
    // context; only after '|-' may a ctx judgement start.
    return false;
  }

  Judgement parse_judgement_body(Ctx ambient) {
    const std::size_t scope_mark = scope.size();
    for (const auto& e : ambient.entries()) scope.push_back(e.name);
    const std::size_t scope_depth = scope.size();
    // Try a type judgement first: A type | A = A' type.
    const std::size_t save = at;
    try {
      TyRef a = parse_type();
      if (accept_kw("type")) {
        scope.resize(scope_mark);
        return Judgement::ty_wf(std::move(ambient), std::move(a));
      }
      if (peek().kind == Tok::Equals) {
        take();
        TyRef b = parse_type();
        expect_kw("type");
        scope.resize(scope_mark);
        return Judgement::ty_eq(std::move(ambient), std::move(a), std::move(b));
      }
      at = save;  // it was a term after all (e.g. a constant application)
    } catch (const ParseError&) {
      at = save;
      scope.resize(scope_depth);
    }
    TmRef a = parse_term();
    if (accept(Tok::Equals)) {
      TmRef b = parse_term();
      expect(Tok::Colon, "':'");
      TyRef ty = parse_type();
      scope.resize(scope_mark);
      return Judgement::tm_eq(std::move(ambient), std::move(a), std::move(b), std::move(ty));
    }
    expect(Tok::Colon, "':'");
    TyRef ty = parse_type();
    scope.resize(scope_mark);
    return Judgement::tm_of(std::move(ambient), std::move(a), std::move(ty));
  }

  // ---- items ----------------------------------------------------------------------

  SourceFile parse_source() {
    SourceFile out;
    while (peek().kind != Tok::End) {
      const Span start = peek().span;
      SourceItem item;
      if (accept_kw("typeconst")) {
        const Token name = expect(Tok::Ident, "constant name");
        declare(name, /*is_type=*/true);
        Ctx tel = parse_ctx_expr();
        ty_consts.insert(name.text);
        item.item = TypeConstItem{name.text, std::move(tel)};
      } else if (accept_kw("termconst")) {
        const Token name = expect(Tok::Ident, "constant name");
        declare(name, /*is_type=*/false);
        Ctx tel = parse_ctx_expr();
        expect(Tok::Colon, "':'");
        const std::size_t scope_mark = scope.size();
        for (const auto& e : tel.entries()) scope.push_back(e.name);
        TyRef cod = parse_type();
        scope.resize(scope_mark);
        tm_consts.insert(name.text);
        item.item = TermConstItem{name.text, std::move(tel), std::move(cod)};
      } else if (accept_kw("axiom")) {
        Ctx tel;
        if (looks_like_ctx_expr()) tel = parse_ctx_expr();
        expect(Tok::Turnstile, "'|-'");
        item.item = parse_axiom_body(std::move(tel));
      } else if (accept_kw("def")) {
        const Token name = expect(Tok::Ident, "definition name");
        declare(name, /*is_type=*/false);
        expect(Tok::Colon, "':'");
        TyRef ty = parse_type();
        expect(Tok::Equals, "'='");
        TmRef body = parse_term();
        defs[name.text] = body;
        item.item = DefItem{name.text, std::move(ty), std::move(body)};
      } else if (accept_kw("check")) {
        item.item = CheckItem{parse_judgement()};
      } else if (accept_kw("eval")) {
        item.item = EvalItem{parse_judgement()};
      } else {
        fail("expected an item (typeconst, termconst, axiom, def, check, eval)");
      }
      item.span = start;
      item.span.end_line = peek().span.line;
      item.span.end_col = peek().span.col;
      out.items.push_back(std::move(item));
    }
    return out;
  }

  void declare(const Token& name, bool) {
    if (reserved(name.text))
      throw ParseError(ParseErrorKind::Syntax, name.span,
                       "'" + name.text + "' is reserved and cannot be declared");
    if (ty_consts.count(name.text) || tm_consts.count(name.text) || defs.count(name.text))
      throw ParseError(ParseErrorKind::DuplicateConstant, name.span,
                       "duplicate declaration of '" + name.text + "'");
  }

  AxiomItem parse_axiom_body(Ctx tel) {
    const std::size_t scope_mark = scope.size();
    for (const auto& e : tel.entries()) scope.push_back(e.name);
    const std::size_t scope_depth = scope.size();
    const std::size_t save = at;
    try {
      TyRef a = parse_type();
      if (peek().kind == Tok::Equals) {
        take();
        TyRef b = parse_type();
        if (accept_kw("type")) {
          scope.resize(scope_mark);
          AxiomItem ax;
          ax.telescope = std::move(tel);
          ax.is_type_eq = true;
          ax.lhs_ty = std::move(a);
          ax.rhs_ty = std::move(b);
          return ax;
        }
      }
      at = save;
      scope.resize(scope_depth);
    } catch (const ParseError&) {
      at = save;
      scope.resize(scope_depth);
    }
    TmRef a = parse_term();
    expect(Tok::Equals, "'='");
    TmRef b = parse_term();
    expect(Tok::Colon, "':'");
    TyRef ty = parse_type();
    scope.resize(scope_mark);
    AxiomItem ax;
    ax.telescope = std::move(tel);
    ax.lhs_tm = std::move(a);
    ax.rhs_tm = std::move(b);
    ax.at = std::move(ty);
    return ax;
  }
};

}  // namespace

SourceFile parse_file(const std::string& text) {
  Parser p(text);
  return p.parse_source();
}

TyRef parse_type(const std::string& text, const std::vector<std::string>& ty_consts,
                 const std::vector<std::string>& tm_consts, const std::vector<std::string>& binders) {
  Parser p(text);
  p.ty_consts.insert(ty_consts.begin(), ty_consts.end());
  p.tm_consts.insert(tm_consts.begin(), tm_consts.end());
  p.scope = binders;
  TyRef t = p.parse_type();
  if (p.peek().kind != Tok::End) p.fail("trailing input after type");
  return t;
}

TmRef parse_term(const std::string& text, const std::vector<std::string>& ty_consts,
                 const std::vector<std::string>& tm_consts, const std::vector<std::string>& binders) {
  Parser p(text);
  p.ty_consts.insert(ty_consts.begin(), ty_consts.end());
  p.tm_consts.insert(tm_consts.begin(), tm_consts.end());
  p.scope = binders;
  TmRef t = p.parse_term();
  if (p.peek().kind != Tok::End) p.fail("trailing input after term");
  return t;
}

Ctx parse_ctx(const std::string& text, const std::vector<std::string>& ty_consts,
              const std::vector<std::string>& tm_consts) {
  Parser p(text);
  p.ty_consts.insert(ty_consts.begin(), ty_consts.end());
  p.tm_consts.insert(tm_consts.begin(), tm_consts.end());
  Ctx c = p.parse_ctx_expr();
  if (p.peek().kind != Tok::End) p.fail("trailing input after context");
  return c;
}

// ---- printing ---------------------------------------------------------------

namespace {

bool mentions_var0_ty(const TyRef& t) {
  std::vector<int> idx;
  free_indices(t, idx);
  return std::find(idx.begin(), idx.end(), 0) != idx.end();
}

struct Printer {
  std::vector<std::string> names;

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? std::string("x") : hint;
    return fresh_name(base, names);
  }

  // term precedence: 0 lambda, 1 application, 2 atom
  void tm(std::ostringstream& os, const TmRef& t, int prec) {
    struct V {
      Printer& pr;
      std::ostringstream& os;
      int prec;
      void operator()(const TmVar& v) const {
        if (v.index >= 0 && static_cast<std::size_t>(v.index) < pr.names.size())
          os << pr.names[pr.names.size() - 1 - static_cast<std::size_t>(v.index)];
        else
          os << "?v" << v.index;
      }
      void operator()(const TmStar&) const { os << "star"; }
      void operator()(const TmLam& l) const {
        const bool paren = prec > 0;
        if (paren) os << "(";
        const std::string n = pr.fresh(l.binder);
        os << "\\" << n << ". ";
        pr.names.push_back(n);
        pr.tm(os, l.body, 0);
        pr.names.pop_back();
        if (paren) os << ")";
      }
      void operator()(const TmApp& a) const {
        const bool paren = prec > 1;
        if (paren) os << "(";
        pr.tm(os, a.fn, 1);
        os << " ";
        pr.tm(os, a.arg, 2);
        if (paren) os << ")";
      }
      void operator()(const TmPair& p) const {
        os << "(";
        pr.tm(os, p.fst, 0);
        os << ", ";
        pr.tm(os, p.snd, 0);
        os << ")";
      }
      void operator()(const TmSigElim& r) const {
        const std::string z = pr.fresh(r.zname);
        os << "rsig[" << z << " : ";
        pr.ty(os, r.sigma, 0);
        os << " . ";
        pr.names.push_back(z);
        pr.ty(os, r.motive, 0);
        pr.names.pop_back();
        os << "](";
        const std::string x = pr.fresh(r.xname);
        pr.names.push_back(x);
        const std::string y = pr.fresh(r.yname);
        pr.names.push_back(y);
        os << x << "." << y << ".";
        pr.tm(os, r.branch, 0);
        pr.names.pop_back();
        pr.names.pop_back();
        os << ", ";
        pr.tm(os, r.scrut, 0);
        os << ")";
      }
      void operator()(const TmConst& c) const {
        os << c.name << "[";
        for (std::size_t i = 0; i < c.args.size(); ++i) {
          if (i) os << ", ";
          pr.tm(os, c.args[i], 0);
        }
        os << "]";
      }
    };
    std::visit(V{*this, os, prec}, t->node);
  }

  // type precedence: 0 binder, 1 arrow, 2 product, 3 atom
  void ty(std::ostringstream& os, const TyRef& t, int prec) {
    struct V {
      Printer& pr;
      std::ostringstream& os;
      int prec;
      void operator()(const TyUnit&) const { os << "Unit"; }
      void binderless(const char* op, const TyRef& dom, const TyRef& cod, int my, int sub) const {
        const bool paren = prec > my;
        if (paren) os << "(";
        pr.ty(os, dom, my + 1);
        os << " " << op << " ";
        // codomain does not mention the binder; print it one level down
        pr.names.push_back("_");
        pr.ty(os, cod, sub);
        pr.names.pop_back();
        if (paren) os << ")";
      }
      void operator()(const TyPi& p) const {
        if (!mentions_var0_ty(p.cod)) {
          binderless("->", p.dom, p.cod, 1, 1);
          return;
        }
        const bool paren = prec > 0;
        if (paren) os << "(";
        const std::string n = pr.fresh(p.binder);
        os << "Pi (" << n << " : ";
        pr.ty(os, p.dom, 0);
        os << ") ";
        pr.names.push_back(n);
        pr.ty(os, p.cod, 0);
        pr.names.pop_back();
        if (paren) os << ")";
      }
      void operator()(const TySigma& s) const {
        if (!mentions_var0_ty(s.cod)) {
          binderless("*", s.dom, s.cod, 2, 2);
          return;
        }
        const bool paren = prec > 0;
        if (paren) os << "(";
        const std::string n = pr.fresh(s.binder);
        os << "Sigma (" << n << " : ";
        pr.ty(os, s.dom, 0);
        os << ") ";
        pr.names.push_back(n);
        pr.ty(os, s.cod, 0);
        pr.names.pop_back();
        if (paren) os << ")";
      }
      void operator()(const TyConst& c) const {
        os << c.name << "[";
        for (std::size_t i = 0; i < c.args.size(); ++i) {
          if (i) os << ", ";
          pr.tm(os, c.args[i], 0);
        }
        os << "]";
      }
    };
    std::visit(V{*this, os, prec}, t->node);
  }
};

}  // namespace

std::vector<std::string> ctx_names(const Ctx& ctx) {
  std::vector<std::string> names;
  names.reserve(ctx.size());
  for (const auto& e : ctx.entries()) names.push_back(fresh_name(e.name, names));
  return names;
}

std::string print(const TyRef& t, const std::vector<std::string>& names) {
  Printer pr{names};
  std::ostringstream os;
  pr.ty(os, t, 0);
  return os.str();
}

std::string print(const TmRef& t, const std::vector<std::string>& names) {
  Printer pr{names};
  std::ostringstream os;
  pr.tm(os, t, 0);
  return os.str();
}

std::string print(const Ctx& ctx) {
  std::ostringstream os;
  os << "(";
  Printer pr{{}};
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) os << ", ";
    const std::string n = pr.fresh(ctx.entry(i).name);
    os << n << " : ";
    pr.ty(os, ctx.entry(i).type, 0);
    pr.names.push_back(n);
  }
  os << ")";
  return os.str();
}

std::string print(const Judgement& j) {
  std::ostringstream os;
  const auto amb = ctx_names(j.ctx);
  switch (j.form) {
    case Judgement::Form::CtxWf:
      os << "|- " << print(j.ctx) << " ctx";
      break;
    case Judgement::Form::CtxEq:
      os << "|- " << print(j.ctx) << " = " << print(j.ctx2) << " ctx";
      break;
    case Judgement::Form::TyWf:
      if (!j.ctx.empty()) os << print(j.ctx) << " ";
      os << "|- " << print(j.ty, amb) << " type";
      break;
    case Judgement::Form::TyEq:
      if (!j.ctx.empty()) os << print(j.ctx) << " ";
      os << "|- " << print(j.ty, amb) << " = " << print(j.ty2, amb) << " type";
      break;
    case Judgement::Form::TmOf:
      if (!j.ctx.empty()) os << print(j.ctx) << " ";
      os << "|- " << print(j.tm, amb) << " : " << print(j.ty, amb);
      break;
    case Judgement::Form::TmEq:
      if (!j.ctx.empty()) os << print(j.ctx) << " ";
      os << "|- " << print(j.tm, amb) << " = " << print(j.tm2, amb) << " : " << print(j.ty, amb);
      break;
  }
  return os.str();
}

}  // namespace depcat
