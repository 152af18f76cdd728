#include "depcat/checker.hpp"

#include "depcat/frontend.hpp"
#include "depcat/parser.hpp"
#include "depcat/typegen.hpp"
#include "doctest.h"

using namespace depcat;

namespace {

const ValidatedSignature& empty_sig() {
  static const ValidatedSignature vs = validate_signature(Signature{});
  return vs;
}

Checker& phi() {
  static Checker chk(empty_sig());
  return chk;
}

TyRef T(const std::string& s) { return parse_type(s); }
TmRef t(const std::string& s) { return parse_term(s); }

}  // namespace

TEST_CASE("context formation") {
  CHECK(phi().check_ctx(Ctx{}).ok());
  CHECK(phi().check_ctx(parse_ctx("(x:Unit, y:Unit)")).ok());
  // the parser rejects duplicate names; the checker must too for raw trees
  Ctx dup({CtxEntry{"x", ty_unit()}, CtxEntry{"x", ty_unit()}});
  const Verdict v = phi().check_ctx(dup);
  CHECK(v.kind == Verdict::Kind::NotDerivable);
  // ill-formed entry type
  Ctx bad({CtxEntry{"x", ty_const("Nope", {})}});
  CHECK(phi().check_ctx(bad).kind == Verdict::Kind::NotDerivable);
}

TEST_CASE("type formation") {
  CHECK(phi().check_type(Ctx{}, T("Unit")).ok());
  CHECK(phi().check_type(parse_ctx("(x:Unit)"), T("Unit")).ok());
  CHECK(phi().check_type(Ctx{}, T("Pi (x:Unit) Sigma (y:Unit) Unit")).ok());
  CHECK(phi().check_type(Ctx{}, T("(Unit -> Unit) * Unit")).ok());
}

TEST_CASE("variable lookup weakens") {
  const Ctx ctx = parse_ctx("(x : Unit * Unit, y : Unit)");
  auto [ty, v] = phi().infer_term(ctx, tm_var(1, "x"));
  REQUIRE(v.ok());
  CHECK(alpha_eq(ty, T("Unit * Unit")));
}

TEST_CASE("term checking and inference") {
  CHECK(phi().check_term(Ctx{}, t("star"), T("Unit")).ok());
  CHECK(phi().check_term(Ctx{}, t("\\x. x"), T("Pi (x:Unit) Unit")).ok());
  CHECK(phi().check_term(Ctx{}, t("(star, star)"), T("Sigma (x:Unit) Unit")).ok());
  CHECK(phi().check_term(Ctx{}, t("(star, star)"), T("Pi (x:Unit) Unit")).kind ==
        Verdict::Kind::NotDerivable);
  CHECK(phi().check_term(Ctx{}, t("star"), T("Pi (x:Unit) Unit")).kind ==
        Verdict::Kind::NotDerivable);

  // (\x.x)(star) infers Unit
  auto [ty, v] = phi().infer_term(Ctx{}, t("(\\x. x) star"));
  REQUIRE(v.ok());
  CHECK(alpha_eq(phi().normalize_type(Ctx{}, ty), T("Unit")));
}

TEST_CASE("judgmental equality: computation and uniqueness rules") {
  // Pi-Comp
  CHECK(phi().equal_terms(Ctx{}, t("(\\x. x) star"), t("star"), T("Unit")).ok());
  // 1-Uniq
  const Ctx c1 = parse_ctx("(t : Unit)");
  CHECK(phi().equal_terms(c1, tm_var(0), tm_star(), T("Unit")).ok());
  // Pi-Uniq (eta)
  const Ctx c2 = parse_ctx("(f : Pi (x:Unit) Unit)");
  CHECK(phi()
            .equal_terms(c2, parse_term("\\x. f x", {}, {}, {"f"}), tm_var(0, "f"),
                         T("Pi (x:Unit) Unit"))
            .ok());
  // eta at higher type
  const Ctx c3 = parse_ctx("(f : (Unit -> Unit) -> Unit)");
  CHECK(phi()
            .equal_terms(c3, parse_term("\\g. f g", {}, {}, {"f"}), tm_var(0, "f"),
                         T("(Unit -> Unit) -> Unit"))
            .ok());
}

TEST_CASE("sigma rules via the eliminator") {
  const TyRef sig = T("Sigma (x:Unit) Unit");
  const TyRef sig2 = T("Sigma (x:Unit*Unit) Unit*Unit");

  // Sigma-Comp through the derived projections
  const TmRef pr = t("((star, star), (star, star))");
  auto [p1, p2] = phi().derived_projections(Ctx{}, pr, T("Unit * Unit"), shift_ty(T("Unit * Unit"), 1));
  CHECK(phi().equal_terms(Ctx{}, p1, t("(star, star)"), T("Unit * Unit")).ok());
  CHECK(phi().equal_terms(Ctx{}, p2, t("(star, star)"), T("Unit * Unit")).ok());

  // Sigma-Uniq: <pi1 p, pi2 p> = p
  const Ctx cp = Ctx{}.extended("p", sig2);
  auto [q1, q2] = phi().derived_projections(cp, tm_var(0, "p"), T("Unit * Unit"),
                                            shift_ty(T("Unit * Unit"), 1));
  CHECK(phi().equal_terms(cp, tm_pair(q1, q2), tm_var(0, "p"), shift_ty(sig2, 0)).ok());

  // general eliminator: swap the components of a pair
  const TmRef swap = parse_term(
      "rsig[z : Sigma (x:Unit*Unit) Unit . Unit * (Unit*Unit)](x.y.(y, x), p)", {}, {}, {"p"});
  const Ctx cq = Ctx{}.extended("p", T("Sigma (x:Unit*Unit) Unit"));
  auto [ty, v] = phi().infer_term(cq, swap);
  REQUIRE(v.ok());
  CHECK(phi().equal_types(cq, ty, T("Unit * (Unit*Unit)")).ok());
}

TEST_CASE("context morphisms") {
  const Ctx delta = parse_ctx("(d : Unit)");
  CHECK(phi().check_ctx_morphism(delta, {}, Ctx{}).ok());
  const Ctx gamma = parse_ctx("(x : Unit, y : Unit -> Unit)");
  CHECK(phi().check_ctx_morphism(id_cm(gamma)).ok());
  CHECK(phi().check_ctx_morphism(Ctx{}, {tm_star()}, parse_ctx("(x : Unit)")).ok());
  // arity mismatch
  CHECK(phi().check_ctx_morphism(Ctx{}, {tm_star(), tm_star()}, parse_ctx("(x : Unit)")).kind ==
        Verdict::Kind::NotDerivable);
}

TEST_CASE("dependent application") {
  // f : Pi (p : Unit*Unit) Unit, a : Unit*Unit |- f a : Unit
  const Ctx ctx = parse_ctx("(f : Pi (p : Unit*Unit) Unit, a : Unit*Unit)");
  auto [ty, v] = phi().infer_term(ctx, parse_term("f a", {}, {}, {"f", "a"}));
  REQUIRE(v.ok());
  CHECK(phi().equal_types(ctx, ty, T("Unit")).ok());
}

TEST_CASE("the N signature from the fixtures validates and computes") {
  const LoadedFile f = load_source_text(
      "typeconst N ()\n"
      "termconst zero () : N[]\n"
      "termconst succ (n : N[]) : N[]\n"
      "termconst recN (y : N[], cz : N[], cs : N[] -> N[]) : N[]\n"
      "axiom (cz : N[], cs : N[] -> N[]) |- recN[zero[], cz, cs] = cz : N[]\n"
      "axiom (y : N[], cz : N[], cs : N[] -> N[]) |- recN[succ[y], cz, cs] = cs (recN[y, cz, cs]) "
      ": N[]\n");
  // the successor axiom grows, so validation needs --trust-axioms
  CHECK_THROWS_AS(validate(f), IllTypedAxiom);
  ValidationOptions opts;
  opts.trust_axioms = true;
  const ValidatedSignature vs = validate(f, opts);
  Checker chk(vs);

  const Ctx nctx = Ctx{}.extended("n", ty_const("N", {}));
  CHECK(chk.check_type(nctx, ty_const("N", {})).ok());
  CHECK(chk.check_term(nctx, tm_const("succ", {tm_var(0, "n")}), ty_const("N", {})).ok());

  // recN computes: recN(succ(succ(zero)), zero, \n. succ n) = succ(succ(zero))
  const auto N = ty_const("N", {});
  const auto zero = tm_const("zero", {});
  auto succ = [&](TmRef x) { return tm_const("succ", {std::move(x)}); };
  const TmRef two = succ(succ(zero));
  const TmRef prog = tm_const("recN", {two, zero, tm_lam(succ(tm_var(0)), "n")});
  CHECK(chk.equal_terms(Ctx{}, prog, two, N).ok());

  // double(two) = four via recursion
  const TmRef dbl = tm_const("recN", {two, zero, tm_lam(succ(succ(tm_var(0))), "n")});
  CHECK(chk.equal_terms(Ctx{}, dbl, succ(succ(two)), N).ok());
  CHECK(chk.equal_terms(Ctx{}, dbl, two, N).kind == Verdict::Kind::NotDerivable);
}

TEST_CASE("ill-formed signatures are rejected") {
  LoadedFile f;
  f.signature.add_term_constant("bad", Ctx{}, ty_const("Missing", {}));
  CHECK_THROWS_AS(validate(f), IllFormedFormat);
}

TEST_CASE("id-type fixture validates with its computation axiom") {
  const LoadedFile f = load_source_text(
      "typeconst B ()\n"
      "typeconst Id (a : B[], b : B[])\n"
      "termconst refl (a : B[]) : Id[a, a]\n"
      "termconst recId (x : B[], y : B[], p : Id[x, y], c : B[]) : B[]\n"
      "axiom (x : B[], c : B[]) |- recId[x, x, refl[x], c] = c : B[]\n");
  const ValidatedSignature vs = validate(f);
  Checker chk(vs);
  const Ctx ctx = parse_ctx("(x : B[], c : B[])", {"B", "Id"}, {"refl", "recId"});
  const TmRef lhs = parse_term("recId[x, x, refl[x], c]", {"B", "Id"}, {"refl", "recId"}, {"x", "c"});
  CHECK(chk.equal_terms(ctx, lhs, tm_var(0, "c"), ty_const("B", {})).ok());
  // mismat: recId[x, y, p, c] with distinct endpoints does not reduce
  const Ctx ctx2 = parse_ctx("(x : B[], y : B[], p : Id[x, y], c : B[])", {"B", "Id"}, {"refl", "recId"});
  const TmRef stuck =
      parse_term("recId[x, y, p, c]", {"B", "Id"}, {"refl", "recId"}, {"x", "y", "p", "c"});
  CHECK(chk.equal_terms(ctx2, stuck, tm_var(0, "c"), ty_const("B", {})).kind ==
        Verdict::Kind::NotDerivable);
}

TEST_CASE("conversion: types computed by axioms are interchangeable") {
  const LoadedFile f = load_source_text(
      "typeconst N ()\n"
      "termconst zero () : N[]\n"
      "termconst succ (n : N[]) : N[]\n"
      "termconst recN (y : N[], cz : N[], cs : N[] -> N[]) : N[]\n"
      "axiom (cz : N[], cs : N[] -> N[]) |- recN[zero[], cz, cs] = cz : N[]\n"
      "axiom (y : N[], cz : N[], cs : N[] -> N[]) |- recN[succ[y], cz, cs] = cs (recN[y, cz, cs]) "
      ": N[]\n"
      "typeconst V (n : N[])\n");
  ValidationOptions opts;
  opts.trust_axioms = true;
  const ValidatedSignature vs = validate(f, opts);
  Checker chk(vs);
  // v : V[recN[zero, zero, succ]] |- v : V[zero]   (Ty-Con via computation)
  const std::vector<std::string> tycs{"N", "V"};
  const std::vector<std::string> tmcs{"zero", "succ", "recN"};
  const Ctx ctx = parse_ctx("(v : V[recN[zero[], zero[], \\n. succ[n]]])", tycs, tmcs);
  CHECK(chk.check_ctx(ctx).ok());
  CHECK(chk.check_term(ctx, tm_var(0, "v"), parse_type("V[zero[]]", tycs, tmcs)).ok());
}

TEST_CASE("weakening admissibility (property)") {
  GenRng rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 3)(rng);
    const Ctx ctx = gen_ctx(rng, n, 2);
    const TyRef ty = gen_type(rng, n, 2);
    const TmRef tm = gen_term(rng, ctx, ty, 3);
    REQUIRE(phi().check_term(ctx, tm, ty).ok());

    // insert u : Unit at a random position p
    const int p = std::uniform_int_distribution<int>(0, n)(rng);
    const int inner = n - p;  // variables inside the inserted entry
    std::vector<CtxEntry> entries(ctx.entries().begin(), ctx.entries().begin() + p);
    entries.push_back(CtxEntry{"fresh_u", ty_unit()});
    for (int i = p; i < n; ++i) {
      const auto& e = ctx.entry(static_cast<std::size_t>(i));
      entries.push_back(CtxEntry{e.name, shift_ty(e.type, 1, i - p)});
    }
    const Ctx weakened{entries};
    CHECK(phi().check_term(weakened, shift_tm(tm, 1, inner), shift_ty(ty, 1, inner)).ok());
  }
}

TEST_CASE("substitution admissibility (property)") {
  GenRng rng(103);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const Ctx ctx = gen_ctx(rng, n, 2);
    const TyRef ty = gen_type(rng, n, 2);
    const TmRef tm = gen_term(rng, ctx, ty, 3);
    REQUIRE(phi().check_term(ctx, tm, ty).ok());

    const int p = std::uniform_int_distribution<int>(0, n - 1)(rng);  // substituted position
    const int j = n - 1 - p;                                          // its de Bruijn index
    const Ctx prefix = ctx.prefix(static_cast<std::size_t>(p));
    const TmRef a = gen_term(rng, prefix, ctx.entry(static_cast<std::size_t>(p)).type, 3);
    REQUIRE(phi().check_term(prefix, a, ctx.entry(static_cast<std::size_t>(p)).type).ok());

    std::vector<CtxEntry> entries(ctx.entries().begin(), ctx.entries().begin() + p);
    for (int i = p + 1; i < n; ++i) {
      const auto& e = ctx.entry(static_cast<std::size_t>(i));
      entries.push_back(CtxEntry{e.name, subst_ty(e.type, i - (p + 1), a)});
    }
    const Ctx substituted{entries};
    CHECK(phi().check_term(substituted, subst_tm(tm, j, a), subst_ty(ty, j, a)).ok());
    ++done;
  }
  CHECK(done >= 100);
}

TEST_CASE("equality is an equivalence and a congruence (property)") {
  GenRng rng(107);
  for (int trial = 0; trial < 80; ++trial) {
    const Ctx ctx = gen_ctx(rng, 2, 2);
    const TyRef ty = gen_type(rng, 2, 2);
    const TmRef a = gen_term(rng, ctx, ty, 3);
    const TmRef b = gen_term(rng, ctx, ty, 3);
    // reflexivity
    CHECK(phi().equal_terms(ctx, a, a, ty).ok());
    // symmetry
    const bool ab = phi().equal_terms(ctx, a, b, ty).ok();
    const bool ba = phi().equal_terms(ctx, b, a, ty).ok();
    CHECK(ab == ba);
    // congruence under pairing with star
    const TyRef pty = ty_sigma(ty, shift_ty(ty_unit(), 1));
    if (ab) CHECK(phi().equal_terms(ctx, tm_pair(a, tm_star()), tm_pair(b, tm_star()), pty).ok());
  }
}

TEST_CASE("conversion soundness (property)") {
  GenRng rng(109);
  for (int trial = 0; trial < 60; ++trial) {
    const Ctx ctx = gen_ctx(rng, 2, 2);
    const TyRef tya = gen_type(rng, 2, 2);
    const TyRef tyb = gen_type(rng, 2, 2);
    const TmRef a = gen_term(rng, ctx, tya, 3);
    if (phi().equal_types(ctx, tya, tyb).ok()) CHECK(phi().check_term(ctx, a, tyb).ok());
  }
}

TEST_CASE("normalization is idempotent and never Unknown over the empty signature") {
  GenRng rng(113);
  for (int trial = 0; trial < 150; ++trial) {
    const Ctx ctx = gen_ctx(rng, 2, 2);
    const TyRef ty = gen_type(rng, 2, 2);
    const TmRef a = gen_term(rng, ctx, ty, 4);
    const TmRef n1 = phi().normalize(ctx, a, ty);
    const TmRef n2 = phi().normalize(ctx, n1, ty);
    CHECK(alpha_eq(n1, n2));
    const TmRef b = gen_term(rng, ctx, ty, 4);
    CHECK(phi().equal_terms(ctx, a, b, ty).kind != Verdict::Kind::Unknown);
  }
}

TEST_CASE("full judgement dispatch") {
  CHECK(phi().check(Judgement::ctx_wf(parse_ctx("(x:Unit)"))).ok());
  CHECK(phi().check(Judgement::ctx_eq(parse_ctx("(x:Unit)"), parse_ctx("(y:Unit)"))).ok());
  CHECK(phi().check(Judgement::ty_eq(Ctx{}, T("Unit -> Unit"), T("Pi (y:Unit) Unit"))).ok());
  CHECK(phi().check(Judgement::tm_of(Ctx{}, t("star"), T("Pi (x:Unit) Unit"))).kind ==
        Verdict::Kind::NotDerivable);
}
