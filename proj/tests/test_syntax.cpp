#include "depcat/syntax.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "gen.hpp"

using namespace depcat;
using testgen::Rng;

TEST_CASE("alpha equality ignores binder names") {
  // \x. x  vs  \y. y
  CHECK(alpha_eq(tm_lam(tm_var(0, "x"), "x"), tm_lam(tm_var(0, "y"), "y")));
  // \x. \y. x  vs  \y. \x. x   (the latter projects the inner binder)
  CHECK_FALSE(alpha_eq(tm_lam(tm_lam(tm_var(1), "y"), "x"), tm_lam(tm_lam(tm_var(0), "x"), "y")));
  // Pi (x:Unit) Unit  vs  Pi (y:Unit) Unit
  CHECK(alpha_eq(ty_pi(ty_unit(), ty_unit(), "x"), ty_pi(ty_unit(), ty_unit(), "y")));
}

TEST_CASE("substitution basics") {
  // x[a/x] = a
  const TmRef a = tm_pair(tm_star(), tm_star());
  CHECK(alpha_eq(subst_top(tm_var(0, "x"), a), a));
  // (\y.y)[a/x] = \y.y
  const TmRef id = tm_lam(tm_var(0, "y"), "y");
  CHECK(alpha_eq(subst_top(shift_tm(id, 1), a), id));
  // (\y. x)[y/x]: the binder cannot capture; the result body refers outward
  const TmRef body = tm_lam(tm_var(1, "x"), "y");  // \y. x  with x free (index 1)
  const TmRef yfree = tm_var(0, "y");              // the outer y
  const TmRef res = subst_top(body, yfree);
  CHECK(alpha_eq(res, tm_lam(tm_var(1, "y"), "y")));  // \y'. y  (y still the outer variable)
}

TEST_CASE("substitution never captures") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testgen::pick(rng, 1, 4);
    const TmRef body = testgen::random_tm(rng, n, 4);
    const TmRef what = testgen::random_tm(rng, n - 1, 3);
    const TmRef out = subst_top(body, what);

    std::vector<int> fb, fw, fo;
    free_indices(body, fb);
    free_indices(what, fw);
    free_indices(out, fo);
    // free(out) <= (free(body) \ {0} shifted down) u free(what)
    std::set<int> allowed;
    for (int i : fb)
      if (i > 0) allowed.insert(i - 1);
    for (int i : fw) allowed.insert(i);
    for (int i : fo) CHECK(allowed.count(i));
  }
}

TEST_CASE("identity context morphisms") {
  CHECK(id_cm(Ctx{}).comps.empty());
  Ctx one = Ctx{}.extended("x", ty_unit());
  CHECK(id_cm(one).comps.size() == 1);
  CHECK(alpha_eq(id_cm(one).comps[0], tm_var(0)));
  Ctx two = one.extended("y", ty_pi(ty_unit(), ty_unit()));
  const CtxMor id2 = id_cm(two);
  REQUIRE(id2.comps.size() == 2);
  CHECK(alpha_eq(id2.comps[0], tm_var(1)));
  CHECK(alpha_eq(id2.comps[1], tm_var(0)));
}

TEST_CASE("gen_subst along the identity is the identity") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testgen::pick(rng, 0, 3);
    const Ctx ctx = testgen::random_ctx(rng, n, 2);
    const CtxMor id = id_cm(ctx);
    const TmRef t = testgen::random_tm(rng, n, 4);
    CHECK(alpha_eq(gen_subst(t, id), t));
    const TyRef ty = testgen::random_ty(rng, n, 3);
    CHECK(alpha_eq(gen_subst(ty, id), ty));
  }
}

TEST_CASE("gen_subst goes under binders structurally") {
  // (Pi (y:A) B)[f] = Pi (y:A[f]) B[f, y/y]
  Ctx cod = Ctx{}.extended("x", ty_unit());
  Ctx dom = Ctx{}.extended("u", ty_unit()).extended("v", ty_unit());
  const CtxMor f(dom, cod, {tm_pair(tm_var(0), tm_var(1))});
  const TyRef a = ty_sigma(ty_unit(), ty_unit());
  const TyRef pi = ty_pi(a, ty_sigma(shift_ty(a, 1), ty_unit()), "y");
  const TyRef lhs = gen_subst(pi, f);
  const TyRef rhs = ty_pi(gen_subst(a, f), gen_subst(ty_sigma(shift_ty(a, 1), ty_unit()),
                                                     lift_cm(f, "y", a)),
                          "y");
  CHECK(alpha_eq(lhs, rhs));
}

TEST_CASE("composition is generalized substitution componentwise") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Ctx theta = testgen::random_ctx(rng, testgen::pick(rng, 0, 3), 2);
    const Ctx delta = testgen::random_ctx(rng, testgen::pick(rng, 0, 3), 2);
    const Ctx gamma = testgen::random_ctx(rng, testgen::pick(rng, 0, 3), 2);
    const CtxMor f = testgen::random_cm(rng, theta, delta, 3);
    const CtxMor g = testgen::random_cm(rng, delta, gamma, 3);
    const CtxMor gf = compose_cm(g, f);
    REQUIRE(gf.comps.size() == g.comps.size());
    for (std::size_t i = 0; i < g.comps.size(); ++i)
      CHECK(alpha_eq(gf.comps[i], gen_subst(g.comps[i], f)));

    // unit laws
    CHECK(alpha_eq(compose_cm(g, id_cm(delta)), g));
    CHECK(alpha_eq(compose_cm(id_cm(gamma), g), g));
  }
}

TEST_CASE("gen_subst respects composition and compose_cm is associative") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Ctx xi = testgen::random_ctx(rng, testgen::pick(rng, 0, 2), 2);
    const Ctx theta = testgen::random_ctx(rng, testgen::pick(rng, 0, 2), 2);
    const Ctx delta = testgen::random_ctx(rng, testgen::pick(rng, 0, 2), 2);
    const Ctx gamma = testgen::random_ctx(rng, testgen::pick(rng, 0, 3), 2);
    const CtxMor e = testgen::random_cm(rng, xi, theta, 2);
    const CtxMor f = testgen::random_cm(rng, theta, delta, 2);
    const CtxMor g = testgen::random_cm(rng, delta, gamma, 2);

    const TmRef t = testgen::random_tm(rng, static_cast<int>(gamma.size()), 4);
    CHECK(alpha_eq(gen_subst(gen_subst(t, g), f), gen_subst(t, compose_cm(g, f))));
    const TyRef ty = testgen::random_ty(rng, static_cast<int>(gamma.size()), 3);
    CHECK(alpha_eq(gen_subst(gen_subst(ty, g), f), gen_subst(ty, compose_cm(g, f))));

    CHECK(alpha_eq(compose_cm(compose_cm(g, f), e), compose_cm(g, compose_cm(f, e))));
  }
}

TEST_CASE("gen_subst rejects out-of-scope variables") {
  Ctx cod;  // empty codomain
  Ctx dom;
  const CtxMor f(dom, cod, {});
  CHECK_THROWS_AS(gen_subst(tm_var(0), f), UnboundVariable);
}

TEST_CASE("compose_cm checks domains") {
  Ctx a = Ctx{}.extended("x", ty_unit());
  const CtxMor f(Ctx{}, a, {tm_star()});
  const CtxMor g(Ctx{}, Ctx{}, {});
  CHECK_THROWS_AS(compose_cm(f, f), DomainMismatch);
  CHECK_NOTHROW(compose_cm(f, g));
}
