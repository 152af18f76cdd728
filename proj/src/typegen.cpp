#include "depcat/typegen.hpp"

namespace depcat {

namespace {

int pick(GenRng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

TyRef gen_type(GenRng& rng, int ctx_len, int depth) {
  if (depth <= 0) return ty_unit();
  switch (pick(rng, 0, 3)) {
    case 0:
    case 1:
      return ty_unit();
    case 2:
      return ty_pi(gen_type(rng, ctx_len, depth - 1), gen_type(rng, ctx_len + 1, depth - 1));
    default:
      return ty_sigma(gen_type(rng, ctx_len, depth - 1), gen_type(rng, ctx_len + 1, depth - 1));
  }
}

Ctx gen_ctx(GenRng& rng, int len, int depth) {
  Ctx ctx;
  for (int i = 0; i < len; ++i) ctx = ctx.extended("v", gen_type(rng, i, depth));
  return ctx;
}

TmRef canonical_inhabitant(const Ctx& ctx, const TyRef& ty) {
  if (std::holds_alternative<TyUnit>(ty->node)) return tm_star();
  if (const auto* p = std::get_if<TyPi>(&ty->node)) {
    const Ctx ext = ctx.extended(p->binder, p->dom);
    return tm_lam(canonical_inhabitant(ext, p->cod), p->binder);
  }
  if (const auto* s = std::get_if<TySigma>(&ty->node)) {
    const TmRef fst = canonical_inhabitant(ctx, s->dom);
    return tm_pair(fst, canonical_inhabitant(ctx, subst_top_ty(s->cod, fst)));
  }
  throw KernelError("no canonical inhabitant for constant-headed types");
}

TmRef gen_term(GenRng& rng, const Ctx& ctx, const TyRef& ty, int depth) {
  // occasionally a matching variable
  if (depth > 0 && pick(rng, 0, 3) == 0) {
    std::vector<int> candidates;
    for (int k = 0; k < static_cast<int>(ctx.size()); ++k)
      if (alpha_eq(ctx.lookup(k), ty)) candidates.push_back(k);
    if (!candidates.empty())
      return tm_var(candidates[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(candidates.size()) - 1))]);
  }
  // occasionally a beta-redex around the goal: (\u:1. t^) star
  if (depth > 0 && pick(rng, 0, 4) == 0) {
    const Ctx ext = ctx.extended("u", ty_unit());
    const TmRef body = gen_term(rng, ext, shift_ty(ty, 1), depth - 1);
    return tm_app(tm_lam(body, "u"), tm_star());
  }
  if (std::holds_alternative<TyUnit>(ty->node)) return tm_star();
  if (const auto* p = std::get_if<TyPi>(&ty->node)) {
    const Ctx ext = ctx.extended(p->binder, p->dom);
    return tm_lam(gen_term(rng, ext, p->cod, depth - 1), p->binder);
  }
  if (const auto* s = std::get_if<TySigma>(&ty->node)) {
    const TmRef fst = gen_term(rng, ctx, s->dom, depth - 1);
    return tm_pair(fst, gen_term(rng, ctx, subst_top_ty(s->cod, fst), depth - 1));
  }
  return canonical_inhabitant(ctx, ty);
}

CtxMor gen_ctx_morphism(GenRng& rng, const Ctx& dom, const Ctx& cod, int depth) {
  std::vector<TmRef> comps;
  comps.reserve(cod.size());
  for (std::size_t i = 0; i < cod.size(); ++i) {
    CtxMor prefix(dom, cod.prefix(i), comps);
    comps.push_back(gen_term(rng, dom, gen_subst(cod.entry(i).type, prefix), depth));
  }
  return CtxMor(dom, cod, comps);
}

}  // namespace depcat
