#ifndef DEPCAT_PARSER_HPP
#define DEPCAT_PARSER_HPP

#include <string>
#include <variant>
#include <vector>

#include "depcat/judgement.hpp"
#include "depcat/syntax.hpp"

// Concrete text syntax (.mltt files).  ASCII surface with Unicode aliases
// accepted on input.  Grammar sketch:
//
//   item     := typeconst C (x1:A1, ..., xk:Ak)
//             | termconst F (x1:A1, ..., xk:Ak) : B
//             | axiom <ctx>? |- a = a' : A
//             | axiom <ctx>? |- A = A' type
//             | def name : A = a
//             | check <judgement>
//             | eval <judgement>
//   judgement:= <ctx>? |- a : A | <ctx>? |- a = a' : A
//             | <ctx>? |- A type | <ctx>? |- A = A' type
//             | |- (x1:A1, ...) ctx | |- (..) = (..) ctx
//   type     := Pi (x:A) B | Sigma (x:A) B | arrow
//   arrow    := prod ('->' arrow)?
//   prod     := atomty ('*' prod)?
//   atomty   := Unit | C[f1,...,fn] | ( type )
//   term     := \x. a | appterm
//   appterm  := atomtm atomtm*
//   atomtm   := x | star | F[f1,...,fn] | (a, b) | ( a )
//             | rsig[z : S . C](x.y.g, p)

namespace depcat {

struct Span {
  int line = 1, col = 1;
  int end_line = 1, end_col = 1;
  std::string str() const;
};

enum class ParseErrorKind { Syntax, DuplicateConstant, ForwardReference };

struct ParseError : std::runtime_error {
  ParseError(ParseErrorKind k, Span s, const std::string& msg)
      : std::runtime_error(msg + " @" + s.str()), kind(k), span(s), bare(msg) {}
  ParseErrorKind kind;
  Span span;
  std::string bare;
};

struct TypeConstItem {
  std::string name;
  Ctx telescope;
};
struct TermConstItem {
  std::string name;
  Ctx telescope;
  TyRef codomain;
};
struct AxiomItem {
  Ctx telescope;
  bool is_type_eq = false;
  TyRef lhs_ty, rhs_ty;  // for type axioms
  TmRef lhs_tm, rhs_tm;  // for term axioms
  TyRef at;              // classifier of a term axiom
};
struct DefItem {
  std::string name;
  TyRef type;
  TmRef body;
};
struct CheckItem {
  Judgement judgement;
};
struct EvalItem {
  Judgement judgement;  // TmOf or TyWf
};

struct SourceItem {
  std::variant<TypeConstItem, TermConstItem, AxiomItem, DefItem, CheckItem, EvalItem> item;
  Span span;
};

struct SourceFile {
  std::vector<SourceItem> items;
};

SourceFile parse_file(const std::string& text);

// Parses a single type/term/context with the given constant name sets in
// scope (used by tests and the Python bindings).
TyRef parse_type(const std::string& text, const std::vector<std::string>& ty_consts = {},
                 const std::vector<std::string>& tm_consts = {},
                 const std::vector<std::string>& binders = {});
TmRef parse_term(const std::string& text, const std::vector<std::string>& ty_consts = {},
                 const std::vector<std::string>& tm_consts = {},
                 const std::vector<std::string>& binders = {});
Ctx parse_ctx(const std::string& text, const std::vector<std::string>& ty_consts = {},
              const std::vector<std::string>& tm_consts = {});

// Pretty-printing; parse(print(e)) is alpha-equal to e.
std::string print(const TyRef& t, const std::vector<std::string>& names = {});
std::string print(const TmRef& t, const std::vector<std::string>& names = {});
std::string print(const Ctx& ctx);
std::string print(const Judgement& j);

std::vector<std::string> ctx_names(const Ctx& ctx);

}  // namespace depcat

#endif
