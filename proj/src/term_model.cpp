#include "depcat/term_model.hpp"

namespace depcat {

bool TermModel::verdict(const Verdict& v) const {
  if (v.kind == Verdict::Kind::Unknown) unknown_seen_ = true;
  return v.ok();
}

TermModel::DObj TermModel::reindex_dobj(const DObj& a, const Mor& phi) const {
  return DObj{phi.dom, gen_subst(a.ty, phi)};
}

TermModel::DMor TermModel::reindex_dmor(const DMor& f, const Mor& phi) const {
  return DMor{phi.dom, gen_subst(f.ty, phi), gen_subst(f.tm, phi)};
}

TermModel::Obj TermModel::comprehend(const Obj& g, const DObj& a) const {
  return Obj{g.ctx.extended("x", a.ty)};
}

TermModel::Mor TermModel::p1(const Obj& g, const DObj& a) const {
  const Obj ga = comprehend(g, a);
  const int n = static_cast<int>(g.ctx.size());
  std::vector<TmRef> comps;
  comps.reserve(g.ctx.size());
  for (int i = 0; i < n; ++i) comps.push_back(tm_var(n - i, g.ctx.entry(static_cast<std::size_t>(i)).name));
  return CtxMor(ga.ctx, g.ctx, std::move(comps));
}

TermModel::DMor TermModel::p2(const Obj& g, const DObj& a) const {
  const Obj ga = comprehend(g, a);
  return DMor{ga.ctx, shift_ty(a.ty, 1), tm_var(0, ga.ctx.entries().back().name)};
}

TermModel::Mor TermModel::extend(const Mor& phi, const DMor& g, const DObj& a) const {
  std::vector<TmRef> comps = phi.comps;
  comps.push_back(g.tm);
  return CtxMor(phi.dom, comprehend(Obj{phi.cod}, a).ctx, std::move(comps));
}

TermModel::DObj TermModel::sigma(const Obj& g, const DObj& a, const DObj& b) const {
  (void)g;
  const std::string binder = b.base.empty() ? "x" : b.base.entries().back().name;
  return DObj{a.base, ty_sigma(a.ty, b.ty, binder)};
}

TermModel::DMor TermModel::sigma_p1(const Obj& g, const DObj& a, const DObj& b) const {
  const DObj s = sigma(g, a, b);
  const Obj gs = comprehend(g, s);
  const TmRef v = tm_var(0, gs.ctx.entries().back().name);
  return DMor{gs.ctx, shift_ty(a.ty, 1), proj1_term(shift_ty(s.ty, 1), v)};
}

TermModel::DMor TermModel::sigma_p2(const Obj& g, const DObj& a, const DObj& b) const {
  const DObj s = sigma(g, a, b);
  const Obj gs = comprehend(g, s);
  const TmRef v = tm_var(0, gs.ctx.entries().back().name);
  const TmRef pr1 = proj1_term(shift_ty(s.ty, 1), v);
  // B over Gamma.A becomes B[pi1(p)/x] over Gamma.Sigma(A,B)
  const TyRef bty = subst_top_ty(shift_ty(b.ty, 1, 1), pr1);
  return DMor{gs.ctx, bty, proj2_term(shift_ty(s.ty, 1), v)};
}

TermModel::DMor TermModel::sigma_pair(const Obj& g, const DObj& a, const DObj& b, const Mor& phi,
                                      const DMor& gg, const DMor& hh) const {
  const DObj s = sigma(g, a, b);
  return DMor{phi.dom, gen_subst(s.ty, phi), tm_pair(gg.tm, hh.tm)};
}

TermModel::DObj TermModel::pi(const Obj& g, const DObj& a, const DObj& b) const {
  (void)g;
  const std::string binder = b.base.empty() ? "x" : b.base.entries().back().name;
  return DObj{a.base, ty_pi(a.ty, b.ty, binder)};
}

TermModel::DMor TermModel::dev(const Obj& g, const DObj& a, const DObj& b) const {
  // Gamma, f : Pi(A,B), x : A{p} |- f(x) : B{p^{+A}}
  const DObj piAB = pi(g, a, b);
  const Obj gp = comprehend(g, piAB);
  const DObj api1 = reindex_dobj(a, p1(g, piAB));
  const Obj dom = comprehend(gp, api1);
  const TmRef f = tm_var(1, "f");
  const TmRef x = tm_var(0, "x");
  // B over Gamma.A; in (Gamma, f, x) its A-variable stays innermost and the
  // ambient variables skip the new f binder.
  const TyRef bty = shift_ty(b.ty, 1, 1);
  return DMor{dom.ctx, bty, tm_app(f, x)};
}

TermModel::DMor TermModel::lam(const Obj& g, const DObj& a, const DObj& b, const DMor& f) const {
  const std::string binder = f.base.empty() ? "x" : f.base.entries().back().name;
  return DMor{a.base, pi(g, a, b).ty, tm_lam(f.tm, binder)};
}

bool TermModel::eq_obj(const Obj& x, const Obj& y) const {
  return verdict(chk_.equal_ctxs(x.ctx, y.ctx));
}

bool TermModel::eq_mor(const Mor& x, const Mor& y) const {
  if (x.comps.size() != y.comps.size()) return false;
  if (!verdict(chk_.equal_ctxs(x.dom, y.dom))) return false;
  // componentwise at the progressively substituted types
  for (std::size_t i = 0; i < x.comps.size(); ++i) {
    CtxMor prefix(x.dom, x.cod.prefix(i), std::vector<TmRef>(x.comps.begin(), x.comps.begin() + static_cast<long>(i)));
    const TyRef at = gen_subst(x.cod.entry(i).type, prefix);
    if (!verdict(chk_.equal_terms(x.dom, x.comps[i], y.comps[i], at))) return false;
  }
  return true;
}

bool TermModel::eq_dobj(const DObj& x, const DObj& y) const {
  return verdict(chk_.equal_types(x.base, x.ty, y.ty));
}

bool TermModel::eq_dmor(const DMor& x, const DMor& y) const {
  return verdict(chk_.equal_terms(x.base, x.tm, y.tm, x.ty));
}

std::string TermModel::show_mor(const Mor& x) const {
  std::string s = "(";
  const auto names = ctx_names(x.dom);
  for (std::size_t i = 0; i < x.comps.size(); ++i) {
    if (i) s += ", ";
    s += print(x.comps[i], names);
  }
  return s + ")";
}

// ---- instance generation -----------------------------------------------------

const std::vector<TyRef>& closed_type_pool(int depth) {
  static std::vector<std::vector<TyRef>> pools = [] {
    std::vector<std::vector<TyRef>> out;
    out.push_back({ty_unit()});
    for (int d = 1; d <= 2; ++d) {
      std::vector<TyRef> cur = out.back();
      for (const auto& a : out.back())
        for (const auto& b : out.back()) {
          cur.push_back(ty_pi(a, shift_ty(b, 1)));
          cur.push_back(ty_sigma(a, shift_ty(b, 1)));
        }
      // dedupe up to alpha
      std::vector<TyRef> uniq;
      for (const auto& t : cur) {
        bool seen = false;
        for (const auto& u : uniq)
          if (alpha_eq(t, u)) {
            seen = true;
            break;
          }
        if (!seen) uniq.push_back(t);
      }
      out.push_back(std::move(uniq));
    }
    return out;
  }();
  return pools[static_cast<std::size_t>(std::min(depth, 2))];
}

namespace {

TmDMor mk_dmor(const Ctx& ctx, const TyRef& ty, const TmRef& tm) { return TmDMor{ctx, ty, tm}; }

}  // namespace

std::optional<cwf::Bundle<TermModel>> TermModelGen::bundle(cwf::Rng& rng) const {
  using B = cwf::Bundle<TermModel>;
  TermModel& m = model;
  auto pickint = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  B b;
  b.gamma = TmObj{gen_ctx(rng, pickint(0, max_ctx_len), max_ty_depth)};
  b.delta = TmObj{gen_ctx(rng, pickint(0, max_ctx_len), max_ty_depth)};
  b.theta = TmObj{gen_ctx(rng, pickint(0, max_ctx_len), max_ty_depth)};
  b.phi = gen_ctx_morphism(rng, b.delta.ctx, b.gamma.ctx, 2);
  b.psi = gen_ctx_morphism(rng, b.theta.ctx, b.delta.ctx, 2);

  const int glen = static_cast<int>(b.gamma.ctx.size());
  b.A = TmDObj{b.gamma.ctx, gen_type(rng, glen, max_ty_depth)};
  const TmObj gA = m.comprehend(b.gamma, b.A);
  b.B = TmDObj{gA.ctx, gen_type(rng, glen + 1, max_ty_depth)};
  b.C = TmDObj{b.gamma.ctx, gen_type(rng, glen, 1)};
  b.D = TmDObj{b.gamma.ctx, gen_type(rng, glen, 1)};
  const TmDObj sAB = m.sigma(b.gamma, b.A, b.B);
  const TmObj gS = m.comprehend(b.gamma, sAB);
  b.P = TmDObj{gS.ctx, gen_type(rng, glen + 1, 1)};

  b.f = mk_dmor(b.gamma.ctx, b.A.ty, gen_term(rng, b.gamma.ctx, b.A.ty, 2));
  b.a = mk_dmor(b.gamma.ctx, b.A.ty, gen_term(rng, b.gamma.ctx, b.A.ty, 2));
  const TmDObj Aphi = m.reindex_dobj(b.A, b.phi);
  b.g = mk_dmor(b.delta.ctx, Aphi.ty, gen_term(rng, b.delta.ctx, Aphi.ty, 2));
  const TmDObj Bext = m.reindex_dobj(b.B, m.extend(b.phi, b.g, b.A));
  b.h = mk_dmor(b.delta.ctx, Bext.ty, gen_term(rng, b.delta.ctx, Bext.ty, 2));
  b.k = mk_dmor(gA.ctx, b.B.ty, gen_term(rng, gA.ctx, b.B.ty, 2));

  const TmDObj piAB = m.pi(b.gamma, b.A, b.B);
  const TmDObj piP = m.reindex_dobj(piAB, m.p1(b.gamma, b.A));
  b.q = mk_dmor(gA.ctx, piP.ty, gen_term(rng, gA.ctx, piP.ty, 2));

  auto pair = cwf::pair_iso(m, b.gamma, b.A, b.B);
  const TmObj gAB = m.comprehend(gA, b.B);
  const TmDObj Ppair = m.reindex_dobj(b.P, pair.fwd);
  b.fP = mk_dmor(gAB.ctx, Ppair.ty, gen_term(rng, gAB.ctx, Ppair.ty, 2));
  b.gP = mk_dmor(gS.ctx, b.P.ty, gen_term(rng, gS.ctx, b.P.ty, 2));

  const TmObj gC = m.comprehend(b.gamma, b.C);
  const CtxMor pi1C = m.p1(b.gamma, b.C);
  const TmDObj Api1 = m.reindex_dobj(b.A, pi1C);
  const CtxMor pi1CA = cwf::lift(m, gC, b.gamma, pi1C, b.A);
  const TmDObj Blift = m.reindex_dobj(b.B, pi1CA);
  const TmObj gCA = m.comprehend(gC, Api1);
  b.hC = mk_dmor(gCA.ctx, Blift.ty, gen_term(rng, gCA.ctx, Blift.ty, 2));
  const TmObj gD = m.comprehend(b.gamma, b.D);
  const TmDObj Cpi1 = m.reindex_dobj(b.C, m.p1(b.gamma, b.D));
  b.gD = mk_dmor(gD.ctx, Cpi1.ty, gen_term(rng, gD.ctx, Cpi1.ty, 2));

  // uniqueness candidates: a handful of generated inhabitants
  const TmDObj sPhi = m.reindex_dobj(sAB, b.phi);
  for (int i = 0; i < uniqueness_samples; ++i) {
    b.sigma_candidates.push_back(
        mk_dmor(b.delta.ctx, sPhi.ty, gen_term(rng, b.delta.ctx, sPhi.ty, 2)));
    b.pi_candidates.push_back(
        mk_dmor(b.gamma.ctx, piAB.ty, gen_term(rng, b.gamma.ctx, piAB.ty, 2)));
    b.unit_candidates.push_back(
        mk_dmor(b.gamma.ctx, ty_unit(), gen_term(rng, b.gamma.ctx, ty_unit(), 2)));
    b.terminal_candidates.push_back(CtxMor(b.gamma.ctx, Ctx{}, {}));
  }
  return b;
}

std::size_t TermModelGen::exhaustive_count() const {
  const auto& pool = closed_type_pool(max_ty_depth);
  // contexts of length 0, 1, 2 over the pool
  return 1 + pool.size() + pool.size() * pool.size();
}

std::optional<cwf::Bundle<TermModel>> TermModelGen::exhaustive_bundle(std::size_t index) const {
  const auto& pool = closed_type_pool(max_ty_depth);
  const std::size_t n = pool.size();
  Ctx ctx;
  if (index == 0) {
    // empty context
  } else if (index <= n) {
    ctx = Ctx{}.extended("x", pool[index - 1]);
  } else if (index <= n + n * n) {
    const std::size_t k = index - 1 - n;
    ctx = Ctx{}.extended("x", pool[k / n]).extended("y", shift_ty(pool[k % n], 0));
  } else {
    return std::nullopt;
  }
  // derive the rest deterministically from the context shape
  cwf::Rng rng(0xacce55 + index);
  TermModelGen sub{model, max_ctx_len, max_ty_depth, uniqueness_samples};
  // temporarily reuse the random builder but override gamma
  auto b = sub.bundle(rng);
  if (!b) return std::nullopt;
  TermModel& m = model;
  b->gamma = TmObj{ctx};
  const int glen = static_cast<int>(ctx.size());
  b->delta = b->gamma;
  b->phi = m.id(b->gamma);
  b->theta = b->gamma;
  b->psi = m.id(b->gamma);
  b->A = TmDObj{ctx, gen_type(rng, glen, max_ty_depth)};
  const TmObj gA = m.comprehend(b->gamma, b->A);
  b->B = TmDObj{gA.ctx, gen_type(rng, glen + 1, max_ty_depth)};
  b->C = TmDObj{ctx, gen_type(rng, glen, 1)};
  b->D = TmDObj{ctx, gen_type(rng, glen, 1)};
  const TmDObj sAB = m.sigma(b->gamma, b->A, b->B);
  const TmObj gS = m.comprehend(b->gamma, sAB);
  b->P = TmDObj{gS.ctx, gen_type(rng, glen + 1, 1)};

  b->f = mk_dmor(ctx, b->A.ty, gen_term(rng, ctx, b->A.ty, 2));
  b->a = mk_dmor(ctx, b->A.ty, gen_term(rng, ctx, b->A.ty, 2));
  b->g = mk_dmor(ctx, b->A.ty, gen_term(rng, ctx, b->A.ty, 2));
  const TmDObj Bext = m.reindex_dobj(b->B, m.extend(b->phi, b->g, b->A));
  b->h = mk_dmor(ctx, Bext.ty, gen_term(rng, ctx, Bext.ty, 2));
  b->k = mk_dmor(gA.ctx, b->B.ty, gen_term(rng, gA.ctx, b->B.ty, 2));
  const TmDObj piAB = m.pi(b->gamma, b->A, b->B);
  const TmDObj piP = m.reindex_dobj(piAB, m.p1(b->gamma, b->A));
  b->q = mk_dmor(gA.ctx, piP.ty, gen_term(rng, gA.ctx, piP.ty, 2));
  auto pair = cwf::pair_iso(m, b->gamma, b->A, b->B);
  const TmObj gAB = m.comprehend(gA, b->B);
  const TmDObj Ppair = m.reindex_dobj(b->P, pair.fwd);
  b->fP = mk_dmor(gAB.ctx, Ppair.ty, gen_term(rng, gAB.ctx, Ppair.ty, 2));
  b->gP = mk_dmor(gS.ctx, b->P.ty, gen_term(rng, gS.ctx, b->P.ty, 2));
  const TmObj gC = m.comprehend(b->gamma, b->C);
  const CtxMor pi1C = m.p1(b->gamma, b->C);
  const TmDObj Api1 = m.reindex_dobj(b->A, pi1C);
  const CtxMor pi1CA = cwf::lift(m, gC, b->gamma, pi1C, b->A);
  const TmDObj Blift = m.reindex_dobj(b->B, pi1CA);
  const TmObj gCA = m.comprehend(gC, Api1);
  b->hC = mk_dmor(gCA.ctx, Blift.ty, gen_term(rng, gCA.ctx, Blift.ty, 2));
  const TmObj gD = m.comprehend(b->gamma, b->D);
  const TmDObj Cpi1 = m.reindex_dobj(b->C, m.p1(b->gamma, b->D));
  b->gD = mk_dmor(gD.ctx, Cpi1.ty, gen_term(rng, gD.ctx, Cpi1.ty, 2));

  b->sigma_candidates.clear();
  b->pi_candidates.clear();
  b->unit_candidates.clear();
  b->terminal_candidates.clear();
  const TmDObj sPhi = m.reindex_dobj(sAB, b->phi);
  for (int i = 0; i < uniqueness_samples; ++i) {
    b->sigma_candidates.push_back(mk_dmor(ctx, sPhi.ty, gen_term(rng, ctx, sPhi.ty, 2)));
    b->pi_candidates.push_back(mk_dmor(ctx, piAB.ty, gen_term(rng, ctx, piAB.ty, 2)));
    b->unit_candidates.push_back(mk_dmor(ctx, ty_unit(), gen_term(rng, ctx, ty_unit(), 2)));
    b->terminal_candidates.push_back(CtxMor(ctx, Ctx{}, {}));
  }
  return b;
}

}  // namespace depcat
