#include "depcat/checker.hpp"

#include <algorithm>

#include "depcat/parser.hpp"

namespace depcat {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Step budget for one normalization: axiom rewrites count against `axiom_fuel`
// (configurable, exhaustion -> Unknown); beta/Sigma steps count against a hard
// cap so that ill-typed inputs fail instead of spinning.
struct Budget {
  int axiom_fuel;
  long hard_cap = 2'000'000;

  void spend_axiom() {
    if (axiom_fuel-- <= 0) throw FuelExhausted("axiom rewrite fuel exhausted");
    spend_step();
  }
  void spend_step() {
    if (hard_cap-- <= 0) throw KernelError("normalization step cap exceeded (diverging input?)");
  }
};

bool is_var(const TmRef& t, int idx) {
  const auto* v = std::get_if<TmVar>(&t->node);
  return v && v->index == idx;
}

// Projection-shaped eliminations behave as the derived projections pi_1/pi_2
// and are frozen as neutrals by the normalizer.
bool is_proj1(const TmSigElim& r) { return is_var(r.branch, 1); }
bool is_proj2(const TmSigElim& r) { return is_var(r.branch, 0); }

}  // namespace

TmRef proj1_term(const TyRef& sigma, const TmRef& p) {
  const auto* s = std::get_if<TySigma>(&sigma->node);
  if (!s) throw KernelError("proj1_term: annotation is not a Sigma type");
  // motive [z] A  (A weakened under z)
  return tm_sig_elim(sigma, shift_ty(s->dom, 1), tm_var(1, "x"), p, "z", "x", "y");
}

TmRef proj2_term(const TyRef& sigma, const TmRef& p) {
  const auto* s = std::get_if<TySigma>(&sigma->node);
  if (!s) throw KernelError("proj2_term: annotation is not a Sigma type");
  // motive [z] B[pi_1(z)/x]
  const TmRef p1z = proj1_term(shift_ty(sigma, 1), tm_var(0, "z"));
  const TyRef motive = subst_top_ty(shift_ty(s->cod, 1, 1), p1z);
  return tm_sig_elim(sigma, motive, tm_var(0, "y"), p, "z", "x", "y");
}

namespace {

// ---- axiom matching ----------------------------------------------------------

struct MatchState {
  std::vector<std::optional<TmRef>> bind;  // indexed by telescope position
};

bool match_tm(const TmRef& pat, const TmRef& sub, int depth, MatchState& st);

bool match_ty(const TyRef& pat, const TyRef& sub, int depth, MatchState& st) {
  if (pat->node.index() != sub->node.index()) return false;
  return std::visit(
      overloaded{[&](const TyUnit&) { return true; },
                 [&](const TyPi& p) {
                   const auto& q = std::get<TyPi>(sub->node);
                   return match_ty(p.dom, q.dom, depth, st) && match_ty(p.cod, q.cod, depth + 1, st);
                 },
                 [&](const TySigma& p) {
                   const auto& q = std::get<TySigma>(sub->node);
                   return match_ty(p.dom, q.dom, depth, st) && match_ty(p.cod, q.cod, depth + 1, st);
                 },
                 [&](const TyConst& p) {
                   const auto& q = std::get<TyConst>(sub->node);
                   if (p.name != q.name || p.args.size() != q.args.size()) return false;
                   for (std::size_t i = 0; i < p.args.size(); ++i)
                     if (!match_tm(p.args[i], q.args[i], depth, st)) return false;
                   return true;
                 }},
      pat->node);
}

bool match_tm(const TmRef& pat, const TmRef& sub, int depth, MatchState& st) {
  if (const auto* v = std::get_if<TmVar>(&pat->node)) {
    if (v->index < depth) return is_var(sub, v->index);
    const int global = v->index - depth;
    const int n = static_cast<int>(st.bind.size());
    if (global >= n) return false;
    // The candidate must not capture pattern-local binders.
    std::vector<int> idx;
    free_indices(sub, idx);
    for (int i : idx)
      if (i < depth) return false;
    TmRef value = shift_tm(sub, -depth);
    auto& slot = st.bind[static_cast<std::size_t>(n - 1 - global)];
    if (slot.has_value()) return alpha_eq(*slot, value);
    slot = value;
    return true;
  }
  if (pat->node.index() != sub->node.index()) return false;
  return std::visit(
      overloaded{[&](const TmVar&) { return false; },  // handled above
                 [&](const TmStar&) { return true; },
                 [&](const TmLam& p) {
                   return match_tm(p.body, std::get<TmLam>(sub->node).body, depth + 1, st);
                 },
                 [&](const TmApp& p) {
                   const auto& q = std::get<TmApp>(sub->node);
                   return match_tm(p.fn, q.fn, depth, st) && match_tm(p.arg, q.arg, depth, st);
                 },
                 [&](const TmPair& p) {
                   const auto& q = std::get<TmPair>(sub->node);
                   return match_tm(p.fst, q.fst, depth, st) && match_tm(p.snd, q.snd, depth, st);
                 },
                 [&](const TmSigElim& p) {
                   const auto& q = std::get<TmSigElim>(sub->node);
                   return match_ty(p.sigma, q.sigma, depth, st) &&
                          match_ty(p.motive, q.motive, depth + 1, st) &&
                          match_tm(p.branch, q.branch, depth + 2, st) &&
                          match_tm(p.scrut, q.scrut, depth, st);
                 },
                 [&](const TmConst& p) {
                   const auto& q = std::get<TmConst>(sub->node);
                   if (p.name != q.name || p.args.size() != q.args.size()) return false;
                   for (std::size_t i = 0; i < p.args.size(); ++i)
                     if (!match_tm(p.args[i], q.args[i], depth, st)) return false;
                   return true;
                 }},
      pat->node);
}

std::vector<TmRef> bindings_or_stars(const MatchState& st) {
  std::vector<TmRef> comps;
  comps.reserve(st.bind.size());
  for (const auto& b : st.bind) comps.push_back(b.has_value() ? *b : tm_star());
  return comps;
}

// ---- the normalizer -----------------------------------------------------------

struct Norm {
  const Signature& sig;
  Budget& budget;

  // one rewrite attempt at the root; nullopt when no axiom applies
  std::optional<TmRef> rewrite_tm(const TmRef& t) {
    for (const auto& ax : sig.axioms()) {
      if (ax.is_type_eq) continue;
      MatchState st;
      st.bind.resize(ax.telescope.size());
      if (match_tm(ax.lhs_tm, t, 0, st)) {
        budget.spend_axiom();
        const auto comps = bindings_or_stars(st);
        TmRef out = ax.rhs_tm;
        // reuse generalized substitution machinery via a loose morphism
        CtxMor f(Ctx{}, ax.telescope, comps);
        return gen_subst(out, f);
      }
    }
    return std::nullopt;
  }

  std::optional<TyRef> rewrite_ty(const TyRef& t) {
    for (const auto& ax : sig.axioms()) {
      if (!ax.is_type_eq) continue;
      MatchState st;
      st.bind.resize(ax.telescope.size());
      if (match_ty(ax.lhs_ty, t, 0, st)) {
        budget.spend_axiom();
        CtxMor f(Ctx{}, ax.telescope, bindings_or_stars(st));
        return gen_subst(ax.rhs_ty, f);
      }
    }
    return std::nullopt;
  }

  TmRef whnf(TmRef t) {
    for (;;) {
      if (const auto* a = std::get_if<TmApp>(&t->node)) {
        TmRef fn = whnf(a->fn);
        if (const auto* l = std::get_if<TmLam>(&fn->node)) {
          budget.spend_step();
          t = subst_top(l->body, a->arg);
          continue;
        }
        if (fn.get() != a->fn.get()) t = tm_app(fn, a->arg);
      } else if (const auto* r = std::get_if<TmSigElim>(&t->node)) {
        TmRef scrut = whnf(r->scrut);
        if (const auto* pr = std::get_if<TmPair>(&scrut->node)) {
          // Sigma-Comp: R([x,y]g, <u,v>) -> g[u/x, v/y]
          budget.spend_step();
          t = subst_top(subst_tm(r->branch, 1, pr->fst), pr->snd);
          continue;
        }
        if (!is_proj1(*r) && !is_proj2(*r)) {
          // Against a non-pair scrutinee, a general eliminator unfolds through
          // the surjective pairing p = <pi_1 p, pi_2 p>.
          budget.spend_step();
          const TmRef p1 = proj1_term(r->sigma, scrut);
          const TmRef p2 = proj2_term(r->sigma, scrut);
          t = subst_top(subst_tm(r->branch, 1, p1), p2);
          continue;
        }
        if (scrut.get() != r->scrut.get())
          t = tm_sig_elim(r->sigma, r->motive, r->branch, scrut, r->zname, r->xname, r->yname);
      }
      if (auto rw = rewrite_tm(t)) {
        t = *rw;
        continue;
      }
      return t;
    }
  }

  TyRef whnf_ty(TyRef t) {
    for (;;) {
      if (auto rw = rewrite_ty(t)) {
        t = *rw;
        continue;
      }
      return t;
    }
  }
};

}  // namespace

// ---- checker ------------------------------------------------------------------

TmRef Checker::whnf(const TmRef& tm) const {
  Budget b{fuel()};
  Norm n{sig(), b};
  return n.whnf(tm);
}

TyRef Checker::whnf_type(const TyRef& ty) const {
  Budget b{fuel()};
  Norm n{sig(), b};
  return n.whnf_ty(ty);
}

namespace {

struct Engine {
  const Checker& chk;
  const Signature& sig;
  Budget budget;

  explicit Engine(const Checker& c) : chk(c), sig(c.sig()), budget{c.fuel()} {}

  Norm norm() { return Norm{sig, budget}; }

  // -- type normalization --

  TyRef nf_ty(const Ctx& ctx, TyRef t) {
    t = norm().whnf_ty(t);
    return std::visit(
        overloaded{[&](const TyUnit&) { return t; },
                   [&](const TyPi& p) {
                     TyRef d = nf_ty(ctx, p.dom);
                     return ty_pi(d, nf_ty(ctx.extended(p.binder, d), p.cod), p.binder);
                   },
                   [&](const TySigma& s) {
                     TyRef d = nf_ty(ctx, s.dom);
                     return ty_sigma(d, nf_ty(ctx.extended(s.binder, d), s.cod), s.binder);
                   },
                   [&](const TyConst& c) {
                     const Format* fmt = sig.find_type_constant(c.name);
                     if (!fmt) throw KernelError("unknown type constant '" + c.name + "'");
                     return ty_const(c.name, nf_morphism(ctx, c.args, fmt->telescope));
                   }},
        t->node);
  }

  std::vector<TmRef> nf_morphism(const Ctx& ctx, const std::vector<TmRef>& comps, const Ctx& cod) {
    if (comps.size() != cod.size())
      throw KernelError("constant applied to a tuple of the wrong length");
    std::vector<TmRef> out;
    out.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      CtxMor prefix(ctx, cod.prefix(i), std::vector<TmRef>(comps.begin(), comps.begin() + static_cast<long>(i)));
      out.push_back(nf_tm(ctx, comps[i], gen_subst(cod.entry(i).type, prefix)));
    }
    return out;
  }

  // -- term normalization (beta-normal, eta-long) --

  TmRef nf_tm(const Ctx& ctx, TmRef t, TyRef ty) {
    const TyRef tw = norm().whnf_ty(ty);
    if (std::holds_alternative<TyUnit>(tw->node)) return tm_star();  // 1-Uniq
    if (const auto* p = std::get_if<TyPi>(&tw->node)) {
      // eta-long: lam x. nf (t^ x) at cod
      const TmRef applied = tm_app(shift_tm(t, 1), tm_var(0, p->binder));
      const Ctx ext = ctx.extended(p->binder, p->dom);
      return tm_lam(nf_tm(ext, applied, p->cod), p->binder);
    }
    if (const auto* s = std::get_if<TySigma>(&tw->node)) {
      const TmRef w = norm().whnf(t);
      if (const auto* pr = std::get_if<TmPair>(&w->node)) {
        TmRef fst = nf_tm(ctx, pr->fst, s->dom);
        return tm_pair(fst, nf_tm(ctx, pr->snd, subst_top_ty(s->cod, pr->fst)));
      }
      // surjective pairing on a neutral
      const TmRef p1 = proj1_term(tw, w);
      const TmRef p2 = proj2_term(tw, w);
      TmRef fst = nf_tm(ctx, p1, s->dom);
      return tm_pair(fst, nf_tm(ctx, p2, subst_top_ty(s->cod, p1)));
    }
    // neutral type (constant-headed): normalize the spine
    return nf_neutral(ctx, norm().whnf(t)).first;
  }

  // Returns the normalized neutral together with its synthesized type.
  std::pair<TmRef, TyRef> nf_neutral(const Ctx& ctx, const TmRef& t) {
    if (const auto* v = std::get_if<TmVar>(&t->node)) return {t, ctx.lookup(v->index)};
    if (const auto* a = std::get_if<TmApp>(&t->node)) {
      auto [fn, fnty] = nf_neutral(ctx, a->fn);
      const TyRef ft = norm().whnf_ty(fnty);
      const auto* p = std::get_if<TyPi>(&ft->node);
      if (!p) throw KernelError("application head is not of Pi type");
      TmRef arg = nf_tm(ctx, a->arg, p->dom);
      return {tm_app(fn, arg), subst_top_ty(p->cod, a->arg)};
    }
    if (const auto* r = std::get_if<TmSigElim>(&t->node)) {
      // only projection-shaped eliminations survive whnf with a neutral scrutinee
      const TyRef signf = nf_ty(ctx, r->sigma);
      const auto* s = std::get_if<TySigma>(&signf->node);
      if (!s) throw KernelError("eliminator annotation is not a Sigma type");
      auto [scrut, scrutty] = nf_neutral(ctx, norm().whnf(r->scrut));
      if (is_proj1(*r)) {
        return {proj1_term(signf, scrut), s->dom};
      }
      if (is_proj2(*r)) {
        const TmRef p1 = proj1_term(signf, scrut);
        return {proj2_term(signf, scrut), subst_top_ty(s->cod, p1)};
      }
      throw KernelError("unexpected reducible eliminator in neutral position");
    }
    if (const auto* c = std::get_if<TmConst>(&t->node)) {
      const Format* fmt = sig.find_term_constant(c->name);
      if (!fmt) throw KernelError("unknown term constant '" + c->name + "'");
      std::vector<TmRef> args = nf_morphism(ctx, c->args, fmt->telescope);
      CtxMor f(ctx, fmt->telescope, c->args);
      return {tm_const(c->name, std::move(args)), gen_subst(*fmt->codomain, f)};
    }
    throw KernelError("non-neutral term in neutral position (ill-typed input?)");
  }

  // -- judgements --

  Verdict check_ctx(const Ctx& ctx) {
    if (!ctx.names_distinct())
      return Verdict::no("context variables are not pairwise distinct: " + print(ctx));
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      Verdict v = check_type(ctx.prefix(i), ctx.entry(i).type);
      if (!v.ok()) return v;
    }
    return Verdict::yes();
  }

  Verdict check_type(const Ctx& ctx, const TyRef& ty) {
    return std::visit(
        overloaded{[&](const TyUnit&) { return Verdict::yes(); },
                   [&](const TyPi& p) {
                     Verdict v = check_type(ctx, p.dom);
                     if (!v.ok()) return v;
                     return check_type(ctx.extended(p.binder, p.dom), p.cod);
                   },
                   [&](const TySigma& s) {
                     Verdict v = check_type(ctx, s.dom);
                     if (!v.ok()) return v;
                     return check_type(ctx.extended(s.binder, s.dom), s.cod);
                   },
                   [&](const TyConst& c) {
                     const Format* fmt = sig.find_type_constant(c.name);
                     if (!fmt) return Verdict::no("unknown type constant '" + c.name + "'");
                     return check_ctx_morphism(ctx, c.args, fmt->telescope);
                   }},
        ty->node);
  }

  Verdict check_ctx_morphism(const Ctx& dom, const std::vector<TmRef>& comps, const Ctx& cod) {
    if (comps.size() != cod.size())
      return Verdict::no("context morphism has " + std::to_string(comps.size()) +
                         " components, codomain needs " + std::to_string(cod.size()));
    for (std::size_t i = 0; i < comps.size(); ++i) {
      CtxMor prefix(dom, cod.prefix(i), std::vector<TmRef>(comps.begin(), comps.begin() + static_cast<long>(i)));
      Verdict v = check_term(dom, comps[i], gen_subst(cod.entry(i).type, prefix));
      if (!v.ok()) return v;
    }
    return Verdict::yes();
  }

  std::pair<TyRef, Verdict> infer(const Ctx& ctx, const TmRef& t) {
    const auto names = ctx_names(ctx);
    auto fail = [&](const std::string& why) {
      return std::make_pair(TyRef{}, Verdict::no(why));
    };
    if (const auto* v = std::get_if<TmVar>(&t->node)) {
      if (v->index < 0 || static_cast<std::size_t>(v->index) >= ctx.size())
        return fail("unbound variable");
      return {ctx.lookup(v->index), Verdict::yes()};
    }
    if (std::holds_alternative<TmStar>(t->node)) return {ty_unit(), Verdict::yes()};
    if (std::holds_alternative<TmLam>(t->node))
      return fail("cannot synthesize a type for a lambda (check it against a Pi type)");
    if (std::holds_alternative<TmPair>(t->node))
      return fail("cannot synthesize a type for a pair (check it against a Sigma type)");
    if (const auto* a = std::get_if<TmApp>(&t->node)) {
      if (const auto* l = std::get_if<TmLam>(&a->fn->node)) {
        // beta-redex: type the argument, then the body (Subst admissibility)
        auto [argty, v1] = infer(ctx, a->arg);
        if (!v1.ok()) return {TyRef{}, v1};
        auto [bodyty, v2] = infer(ctx.extended(l->binder, argty), l->body);
        if (!v2.ok()) return {TyRef{}, v2};
        return {subst_top_ty(bodyty, a->arg), Verdict::yes()};
      }
      auto [fnty, v1] = infer(ctx, a->fn);
      if (!v1.ok()) return {TyRef{}, v1};
      const TyRef ft = norm().whnf_ty(fnty);
      const auto* p = std::get_if<TyPi>(&ft->node);
      if (!p)
        return fail("Pi-Elim: '" + print(a->fn, names) + "' has type '" + print(fnty, names) +
                    "', not a Pi type");
      Verdict v2 = check_term(ctx, a->arg, p->dom);
      if (!v2.ok()) return {TyRef{}, v2};
      return {subst_top_ty(p->cod, a->arg), Verdict::yes()};
    }
    if (const auto* r = std::get_if<TmSigElim>(&t->node)) {
      Verdict v0 = check_type(ctx, r->sigma);
      if (!v0.ok()) return {TyRef{}, v0};
      const TyRef sw = norm().whnf_ty(r->sigma);
      const auto* s = std::get_if<TySigma>(&sw->node);
      if (!s) return fail("Sigma-Elim: annotation is not a Sigma type");
      Verdict v1 = check_term(ctx, r->scrut, r->sigma);
      if (!v1.ok()) return {TyRef{}, v1};
      Verdict v2 = check_type(ctx.extended(r->zname, r->sigma), r->motive);
      if (!v2.ok()) return {TyRef{}, v2};
      // branch : C[<x,y>/z] in ctx, x:A, y:B
      const TyRef cxy = subst_top_ty(shift_ty(r->motive, 2, 1), tm_pair(tm_var(1, r->xname), tm_var(0, r->yname)));
      const Ctx ext = ctx.extended(r->xname, s->dom).extended(r->yname, s->cod);
      Verdict v3 = check_term(ext, r->branch, cxy);
      if (!v3.ok()) return {TyRef{}, v3};
      return {subst_top_ty(r->motive, r->scrut), Verdict::yes()};
    }
    if (const auto* c = std::get_if<TmConst>(&t->node)) {
      const Format* fmt = sig.find_term_constant(c->name);
      if (!fmt) return fail("unknown term constant '" + c->name + "'");
      Verdict v = check_ctx_morphism(ctx, c->args, fmt->telescope);
      if (!v.ok()) return {TyRef{}, v};
      CtxMor f(ctx, fmt->telescope, c->args);
      return {gen_subst(*fmt->codomain, f), Verdict::yes()};
    }
    return fail("unrecognized term");
  }

  Verdict check_term(const Ctx& ctx, const TmRef& t, const TyRef& ty) {
    const auto names = ctx_names(ctx);
    const TyRef tw = norm().whnf_ty(ty);
    if (const auto* l = std::get_if<TmLam>(&t->node)) {
      const auto* p = std::get_if<TyPi>(&tw->node);
      if (!p)
        return Verdict::no("Pi-Intro: lambda '" + print(t, names) + "' checked against non-Pi type '" +
                           print(ty, names) + "'");
      return check_term(ctx.extended(l->binder, p->dom), l->body, p->cod);
    }
    if (const auto* pr = std::get_if<TmPair>(&t->node)) {
      const auto* s = std::get_if<TySigma>(&tw->node);
      if (!s)
        return Verdict::no("Sigma-Intro: pair '" + print(t, names) +
                           "' checked against non-Sigma type '" + print(ty, names) + "'");
      Verdict v1 = check_term(ctx, pr->fst, s->dom);
      if (!v1.ok()) return v1;
      return check_term(ctx, pr->snd, subst_top_ty(s->cod, pr->fst));
    }
    if (const auto* ap = std::get_if<TmApp>(&t->node)) {
      // A checked beta-redex whose body is an intro form cannot go through the
      // synthesis path; check the body against the weakened goal instead.
      if (const auto* l = std::get_if<TmLam>(&ap->fn->node)) {
        auto [argty, v1] = infer(ctx, ap->arg);
        if (v1.ok()) {
          Verdict vb = check_term(ctx.extended(l->binder, argty), l->body, shift_ty(ty, 1));
          if (vb.ok()) return vb;
        }
      }
    }
    auto [got, v] = infer(ctx, t);
    if (!v.ok()) return v;
    Verdict eq = equal_types(ctx, got, ty);
    if (eq.kind == Verdict::Kind::NotDerivable)
      return Verdict::no("Tm-Con: '" + print(t, names) + "' has type '" + print(got, names) +
                         "', expected '" + print(ty, names) + "'");
    return eq;
  }

  Verdict equal_types(const Ctx& ctx, const TyRef& a, const TyRef& b) {
    try {
      return alpha_eq(nf_ty(ctx, a), nf_ty(ctx, b))
                 ? Verdict::yes()
                 : Verdict::no("types are not judgmentally equal: '" + print(a, ctx_names(ctx)) +
                               "' vs '" + print(b, ctx_names(ctx)) + "'");
    } catch (const FuelExhausted& e) {
      return Verdict::unknown(e.what());
    }
  }

  Verdict equal_terms(const Ctx& ctx, const TmRef& a, const TmRef& b, const TyRef& ty) {
    try {
      return alpha_eq(nf_tm(ctx, a, ty), nf_tm(ctx, b, ty))
                 ? Verdict::yes()
                 : Verdict::no("terms are not judgmentally equal: '" + print(a, ctx_names(ctx)) +
                               "' vs '" + print(b, ctx_names(ctx)) + "' at '" +
                               print(ty, ctx_names(ctx)) + "'");
    } catch (const FuelExhausted& e) {
      return Verdict::unknown(e.what());
    }
  }

  Verdict equal_ctxs(const Ctx& a, const Ctx& b) {
    if (a.size() != b.size())
      return Verdict::no("contexts have different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) {
      Verdict v = equal_types(a.prefix(i), a.entry(i).type, b.entry(i).type);
      if (!v.ok()) return v;
    }
    return Verdict::yes();
  }
};

}  // namespace

namespace {

template <class F>
Verdict run_verdict(F&& f) {
  try {
    return f();
  } catch (const FuelExhausted& ex) {
    return Verdict::unknown(ex.what());
  } catch (const KernelError& ex) {
    return Verdict::no(ex.what());
  }
}

}  // namespace

Verdict Checker::check_ctx(const Ctx& ctx) const {
  return run_verdict([&] {
    Engine e(*this);
    return e.check_ctx(ctx);
  });
}

Verdict Checker::check_type(const Ctx& ctx, const TyRef& ty) const {
  return run_verdict([&] {
    Engine e(*this);
    return e.check_type(ctx, ty);
  });
}

Verdict Checker::check_term(const Ctx& ctx, const TmRef& tm, const TyRef& ty) const {
  return run_verdict([&] {
    Engine e(*this);
    return e.check_term(ctx, tm, ty);
  });
}

Verdict Checker::check_ctx_morphism(const Ctx& dom, const std::vector<TmRef>& comps,
                                    const Ctx& cod) const {
  return run_verdict([&] {
    Engine e(*this);
    return e.check_ctx_morphism(dom, comps, cod);
  });
}

Verdict Checker::check_ctx_morphism(const CtxMor& f) const {
  return check_ctx_morphism(f.dom, f.comps, f.cod);
}

std::pair<TyRef, Verdict> Checker::infer_term(const Ctx& ctx, const TmRef& tm) const {
  try {
    Engine e(*this);
    return e.infer(ctx, tm);
  } catch (const FuelExhausted& ex) {
    return {TyRef{}, Verdict::unknown(ex.what())};
  } catch (const KernelError& ex) {
    return {TyRef{}, Verdict::no(ex.what())};
  }
}

Verdict Checker::equal_terms(const Ctx& ctx, const TmRef& a, const TmRef& b, const TyRef& ty) const {
  return run_verdict([&] {
    Engine e(*this);
    return e.equal_terms(ctx, a, b, ty);
  });
}

Verdict Checker::equal_types(const Ctx& ctx, const TyRef& a, const TyRef& b) const {
  return run_verdict([&] {
    Engine e(*this);
    return e.equal_types(ctx, a, b);
  });
}

Verdict Checker::equal_ctxs(const Ctx& a, const Ctx& b) const {
  return run_verdict([&] {
    Engine e(*this);
    return e.equal_ctxs(a, b);
  });
}

TmRef Checker::normalize(const Ctx& ctx, const TmRef& tm, const TyRef& ty) const {
  Engine e(*this);
  return e.nf_tm(ctx, tm, ty);
}

TyRef Checker::normalize_type(const Ctx& ctx, const TyRef& ty) const {
  Engine e(*this);
  return e.nf_ty(ctx, ty);
}

std::pair<TmRef, TmRef> Checker::derived_projections(const Ctx& ctx, const TmRef& p, const TyRef& a,
                                                     const TyRef& b) const {
  (void)ctx;
  const TyRef sigma = ty_sigma(a, b);
  return {proj1_term(sigma, p), proj2_term(sigma, p)};
}

Verdict Checker::check(const Judgement& j) const {
  auto combine = [](std::initializer_list<Verdict> vs) {
    for (const auto& v : vs)
      if (v.kind == Verdict::Kind::NotDerivable) return v;
    for (const auto& v : vs)
      if (v.kind == Verdict::Kind::Unknown) return v;
    return Verdict::yes();
  };
  switch (j.form) {
    case Judgement::Form::CtxWf:
      return check_ctx(j.ctx);
    case Judgement::Form::CtxEq:
      return combine({check_ctx(j.ctx), check_ctx(j.ctx2), equal_ctxs(j.ctx, j.ctx2)});
    case Judgement::Form::TyWf:
      return combine({check_ctx(j.ctx), check_type(j.ctx, j.ty)});
    case Judgement::Form::TyEq:
      return combine({check_ctx(j.ctx), check_type(j.ctx, j.ty), check_type(j.ctx, j.ty2),
                      equal_types(j.ctx, j.ty, j.ty2)});
    case Judgement::Form::TmOf:
      return combine({check_ctx(j.ctx), check_type(j.ctx, j.ty), check_term(j.ctx, j.tm, j.ty)});
    case Judgement::Form::TmEq:
      return combine({check_ctx(j.ctx), check_type(j.ctx, j.ty), check_term(j.ctx, j.tm, j.ty),
                      check_term(j.ctx, j.tm2, j.ty), equal_terms(j.ctx, j.tm, j.tm2, j.ty)});
  }
  return Verdict::no("unreachable judgement form");
}

}  // namespace depcat
