#include "depcat/parser.hpp"

#include "doctest.h"
#include "gen.hpp"

using namespace depcat;
using testgen::Rng;

TEST_CASE("terms parse to kernel trees") {
  CHECK(alpha_eq(parse_term("star"), tm_star()));
  CHECK(alpha_eq(parse_term("\\x. x"), tm_lam(tm_var(0))));
  CHECK(alpha_eq(parse_term("\\f. \\x. f x"), tm_lam(tm_lam(tm_app(tm_var(1), tm_var(0))))));
  CHECK(alpha_eq(parse_term("(star, \\x. x)"), tm_pair(tm_star(), tm_lam(tm_var(0)))));
}

TEST_CASE("types parse with sugar") {
  CHECK(alpha_eq(parse_type("Unit"), ty_unit()));
  CHECK(alpha_eq(parse_type("Pi (x:Unit) Unit"), ty_pi(ty_unit(), ty_unit())));
  CHECK(alpha_eq(parse_type("Unit -> Unit"), ty_pi(ty_unit(), ty_unit())));
  CHECK(alpha_eq(parse_type("Unit * Unit"), ty_sigma(ty_unit(), ty_unit())));
  // arrow is right-associative and binds looser than product
  CHECK(alpha_eq(parse_type("Unit * Unit -> Unit"),
                 ty_pi(ty_sigma(ty_unit(), ty_unit()), ty_unit())));
  CHECK(alpha_eq(parse_type("Unit -> Unit -> Unit"),
                 ty_pi(ty_unit(), ty_pi(ty_unit(), ty_unit()))));
}

TEST_CASE("unicode aliases are accepted") {
  CHECK(alpha_eq(parse_term("\xce\xbbx. x"), tm_lam(tm_var(0))));            // lambda
  CHECK(alpha_eq(parse_type("\xce\xa0 (x:Unit) Unit"), ty_pi(ty_unit(), ty_unit())));
  CHECK(alpha_eq(parse_term("\xe2\x8b\x86"), tm_star()));                    // unicode star
}

TEST_CASE("rsig parses with mandatory annotations") {
  const TmRef t = parse_term("rsig[z : Sigma (x:Unit) Unit . Unit](x.y.x, (star, star))");
  const auto* r = std::get_if<TmSigElim>(&t->node);
  REQUIRE(r != nullptr);
  CHECK(alpha_eq(r->sigma, ty_sigma(ty_unit(), ty_unit())));
  CHECK(alpha_eq(r->branch, tm_var(1)));
  CHECK_THROWS_AS(parse_term("rsig[z.Unit](x.y.x, p)"), ParseError);
}

TEST_CASE("file items and judgements") {
  const std::string src =
      "typeconst N ()\n"
      "termconst zero () : N[]\n"
      "termconst succ (n : N[]) : N[]\n"
      "check (n : N[]) |- succ[n] : N[]\n"
      "check |- star : Unit\n"
      "check |- (x : Unit, y : Unit) ctx\n"
      "eval |- \\x. x : Pi (x:Unit) Unit\n";
  const SourceFile f = parse_file(src);
  REQUIRE(f.items.size() == 7);
  CHECK(std::holds_alternative<TypeConstItem>(f.items[0].item));
  CHECK(std::holds_alternative<TermConstItem>(f.items[1].item));
  const auto& chk = std::get<CheckItem>(f.items[3].item);
  CHECK(chk.judgement.form == Judgement::Form::TmOf);
  CHECK(chk.judgement.ctx.size() == 1);
  const auto& ctxj = std::get<CheckItem>(f.items[5].item);
  CHECK(ctxj.judgement.form == Judgement::Form::CtxWf);
  CHECK(ctxj.judgement.ctx.size() == 2);
}

TEST_CASE("equality judgements parse") {
  const SourceFile f = parse_file(
      "check (t : Unit) |- t = star : Unit\n"
      "check |- Unit = Unit type\n"
      "check |- (x:Unit) = (y:Unit) ctx\n");
  REQUIRE(f.items.size() == 3);
  CHECK(std::get<CheckItem>(f.items[0].item).judgement.form == Judgement::Form::TmEq);
  CHECK(std::get<CheckItem>(f.items[1].item).judgement.form == Judgement::Form::TyEq);
  CHECK(std::get<CheckItem>(f.items[2].item).judgement.form == Judgement::Form::CtxEq);
}

TEST_CASE("axioms parse in both forms") {
  const SourceFile f = parse_file(
      "typeconst B ()\n"
      "termconst tt () : B[]\n"
      "axiom (b : B[]) |- b = tt[] : B[]\n"
      "axiom |- B[] = B[] type\n");
  REQUIRE(f.items.size() == 4);
  CHECK_FALSE(std::get<AxiomItem>(f.items[2].item).is_type_eq);
  CHECK(std::get<AxiomItem>(f.items[3].item).is_type_eq);
}

TEST_CASE("defs expand into later items") {
  const SourceFile f = parse_file(
      "def idu : Pi (x:Unit) Unit = \\x. x\n"
      "check |- idu star : Unit\n");
  const auto& chk = std::get<CheckItem>(f.items[1].item);
  CHECK(alpha_eq(chk.judgement.tm, tm_app(tm_lam(tm_var(0)), tm_star())));
}

TEST_CASE("errors carry spans and kinds") {
  try {
    parse_file("check |- star : Unit\ncheck |- star :\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseErrorKind::Syntax);
    CHECK(e.span.line >= 2);
  }
  CHECK_THROWS_AS(parse_file("typeconst N ()\ntypeconst N ()\n"), ParseError);
  try {
    parse_file("check |- zero[] : Unit\n");
    FAIL("expected a forward-reference error");
  } catch (const ParseError& e) {
    CHECK(e.kind == ParseErrorKind::ForwardReference);
  }
  CHECK_THROWS_AS(parse_file("check |- (x:Unit, x:Unit) ctx\n"), ParseError);
}

TEST_CASE("print/parse round-trips on fuzzed trees") {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const TmRef t = testgen::random_tm(rng, 0, 5);
    const std::string s = print(t);
    CAPTURE(s);
    CHECK(alpha_eq(parse_term(s), t));
  }
  for (int trial = 0; trial < 300; ++trial) {
    const TyRef t = testgen::random_ty(rng, 0, 4);
    const std::string s = print(t);
    CAPTURE(s);
    CHECK(alpha_eq(parse_type(s), t));
  }
}

TEST_CASE("printing renames shadowed binders") {
  // \y. x with x a free variable printed under ambient name "y" must rename
  const TmRef t = tm_lam(tm_var(1, "y"), "y");
  const std::string s = print(t, {"y"});
  CHECK(s.find("\\y1. y") == 0);
}
