#include "depcat/syntax.hpp"

#include <algorithm>
#include <functional>

namespace depcat {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

TyRef ty_unit() {
  static const TyRef unit = std::make_shared<Ty>(Ty{TyUnit{}});
  return unit;
}
TyRef ty_pi(TyRef dom, TyRef cod, std::string binder) {
  return std::make_shared<Ty>(Ty{TyPi{std::move(dom), std::move(cod), std::move(binder)}});
}
TyRef ty_sigma(TyRef dom, TyRef cod, std::string binder) {
  return std::make_shared<Ty>(Ty{TySigma{std::move(dom), std::move(cod), std::move(binder)}});
}
TyRef ty_const(std::string name, std::vector<TmRef> args) {
  return std::make_shared<Ty>(Ty{TyConst{std::move(name), std::move(args)}});
}

TmRef tm_var(int index, std::string hint) {
  return std::make_shared<Tm>(Tm{TmVar{index, std::move(hint)}});
}
TmRef tm_star() {
  static const TmRef star = std::make_shared<Tm>(Tm{TmStar{}});
  return star;
}
TmRef tm_lam(TmRef body, std::string binder) {
  return std::make_shared<Tm>(Tm{TmLam{std::move(body), std::move(binder)}});
}
TmRef tm_app(TmRef fn, TmRef arg) {
  return std::make_shared<Tm>(Tm{TmApp{std::move(fn), std::move(arg)}});
}
TmRef tm_pair(TmRef fst, TmRef snd) {
  return std::make_shared<Tm>(Tm{TmPair{std::move(fst), std::move(snd)}});
}
TmRef tm_sig_elim(TyRef sigma, TyRef motive, TmRef branch, TmRef scrut,
                  std::string zname, std::string xname, std::string yname) {
  return std::make_shared<Tm>(Tm{TmSigElim{std::move(sigma), std::move(motive),
                                           std::move(branch), std::move(scrut),
                                           std::move(zname), std::move(xname),
                                           std::move(yname)}});
}
TmRef tm_const(std::string name, std::vector<TmRef> args) {
  return std::make_shared<Tm>(Tm{TmConst{std::move(name), std::move(args)}});
}

// ---- shift -----------------------------------------------------------------

TmRef shift_tm(const TmRef& t, int by, int cutoff) {
  if (by == 0) return t;
  return std::visit(
      overloaded{
          [&](const TmVar& v) -> TmRef {
            if (v.index < cutoff) return t;
            if (v.index + by < cutoff) throw UnboundVariable("negative shift below cutoff");
            return tm_var(v.index + by, v.hint);
          },
          [&](const TmStar&) -> TmRef { return t; },
          [&](const TmLam& l) -> TmRef { return tm_lam(shift_tm(l.body, by, cutoff + 1), l.binder); },
          [&](const TmApp& a) -> TmRef {
            return tm_app(shift_tm(a.fn, by, cutoff), shift_tm(a.arg, by, cutoff));
          },
          [&](const TmPair& p) -> TmRef {
            return tm_pair(shift_tm(p.fst, by, cutoff), shift_tm(p.snd, by, cutoff));
          },
          [&](const TmSigElim& r) -> TmRef {
            return tm_sig_elim(shift_ty(r.sigma, by, cutoff), shift_ty(r.motive, by, cutoff + 1),
                               shift_tm(r.branch, by, cutoff + 2), shift_tm(r.scrut, by, cutoff),
                               r.zname, r.xname, r.yname);
          },
          [&](const TmConst& c) -> TmRef {
            std::vector<TmRef> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(shift_tm(a, by, cutoff));
            return tm_const(c.name, std::move(args));
          }},
      t->node);
}

TyRef shift_ty(const TyRef& t, int by, int cutoff) {
  if (by == 0) return t;
  return std::visit(
      overloaded{
          [&](const TyUnit&) -> TyRef { return t; },
          [&](const TyPi& p) -> TyRef {
            return ty_pi(shift_ty(p.dom, by, cutoff), shift_ty(p.cod, by, cutoff + 1), p.binder);
          },
          [&](const TySigma& s) -> TyRef {
            return ty_sigma(shift_ty(s.dom, by, cutoff), shift_ty(s.cod, by, cutoff + 1), s.binder);
          },
          [&](const TyConst& c) -> TyRef {
            std::vector<TmRef> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(shift_tm(a, by, cutoff));
            return ty_const(c.name, std::move(args));
          }},
      t->node);
}

// ---- single substitution ---------------------------------------------------

TmRef subst_tm(const TmRef& t, int j, const TmRef& what) {
  return std::visit(
      overloaded{
          [&](const TmVar& v) -> TmRef {
            if (v.index == j) return shift_tm(what, j);
            if (v.index > j) return tm_var(v.index - 1, v.hint);
            return t;
          },
          [&](const TmStar&) -> TmRef { return t; },
          [&](const TmLam& l) -> TmRef { return tm_lam(subst_tm(l.body, j + 1, what), l.binder); },
          [&](const TmApp& a) -> TmRef {
            return tm_app(subst_tm(a.fn, j, what), subst_tm(a.arg, j, what));
          },
          [&](const TmPair& p) -> TmRef {
            return tm_pair(subst_tm(p.fst, j, what), subst_tm(p.snd, j, what));
          },
          [&](const TmSigElim& r) -> TmRef {
            return tm_sig_elim(subst_ty(r.sigma, j, what), subst_ty(r.motive, j + 1, what),
                               subst_tm(r.branch, j + 2, what), subst_tm(r.scrut, j, what),
                               r.zname, r.xname, r.yname);
          },
          [&](const TmConst& c) -> TmRef {
            std::vector<TmRef> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(subst_tm(a, j, what));
            return tm_const(c.name, std::move(args));
          }},
      t->node);
}

TyRef subst_ty(const TyRef& t, int j, const TmRef& what) {
  return std::visit(
      overloaded{
          [&](const TyUnit&) -> TyRef { return t; },
          [&](const TyPi& p) -> TyRef {
            return ty_pi(subst_ty(p.dom, j, what), subst_ty(p.cod, j + 1, what), p.binder);
          },
          [&](const TySigma& s) -> TyRef {
            return ty_sigma(subst_ty(s.dom, j, what), subst_ty(s.cod, j + 1, what), s.binder);
          },
          [&](const TyConst& c) -> TyRef {
            std::vector<TmRef> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(subst_tm(a, j, what));
            return ty_const(c.name, std::move(args));
          }},
      t->node);
}

// ---- alpha equality ----------------------------------------------------------

bool alpha_eq(const TyRef& a, const TyRef& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const TyUnit&) { return true; },
          [&](const TyPi& p) {
            const auto& q = std::get<TyPi>(b->node);
            return alpha_eq(p.dom, q.dom) && alpha_eq(p.cod, q.cod);
          },
          [&](const TySigma& s) {
            const auto& q = std::get<TySigma>(b->node);
            return alpha_eq(s.dom, q.dom) && alpha_eq(s.cod, q.cod);
          },
          [&](const TyConst& c) {
            const auto& q = std::get<TyConst>(b->node);
            if (c.name != q.name || c.args.size() != q.args.size()) return false;
            for (std::size_t i = 0; i < c.args.size(); ++i)
              if (!alpha_eq(c.args[i], q.args[i])) return false;
            return true;
          }},
      a->node);
}

bool alpha_eq(const TmRef& a, const TmRef& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const TmVar& v) { return v.index == std::get<TmVar>(b->node).index; },
          [&](const TmStar&) { return true; },
          [&](const TmLam& l) { return alpha_eq(l.body, std::get<TmLam>(b->node).body); },
          [&](const TmApp& ap) {
            const auto& q = std::get<TmApp>(b->node);
            return alpha_eq(ap.fn, q.fn) && alpha_eq(ap.arg, q.arg);
          },
          [&](const TmPair& p) {
            const auto& q = std::get<TmPair>(b->node);
            return alpha_eq(p.fst, q.fst) && alpha_eq(p.snd, q.snd);
          },
          [&](const TmSigElim& r) {
            const auto& q = std::get<TmSigElim>(b->node);
            return alpha_eq(r.sigma, q.sigma) && alpha_eq(r.motive, q.motive) &&
                   alpha_eq(r.branch, q.branch) && alpha_eq(r.scrut, q.scrut);
          },
          [&](const TmConst& c) {
            const auto& q = std::get<TmConst>(b->node);
            if (c.name != q.name || c.args.size() != q.args.size()) return false;
            for (std::size_t i = 0; i < c.args.size(); ++i)
              if (!alpha_eq(c.args[i], q.args[i])) return false;
            return true;
          }},
      a->node);
}

// ---- size / hash / free variables -------------------------------------------

std::size_t tree_size(const TyRef& t) {
  return std::visit(
      overloaded{[&](const TyUnit&) -> std::size_t { return 1; },
                 [&](const TyPi& p) { return 1 + tree_size(p.dom) + tree_size(p.cod); },
                 [&](const TySigma& s) { return 1 + tree_size(s.dom) + tree_size(s.cod); },
                 [&](const TyConst& c) {
                   std::size_t n = 1;
                   for (const auto& a : c.args) n += tree_size(a);
                   return n;
                 }},
      t->node);
}

std::size_t tree_size(const TmRef& t) {
  return std::visit(
      overloaded{[&](const TmVar&) -> std::size_t { return 1; },
                 [&](const TmStar&) -> std::size_t { return 1; },
                 [&](const TmLam& l) { return 1 + tree_size(l.body); },
                 [&](const TmApp& a) { return 1 + tree_size(a.fn) + tree_size(a.arg); },
                 [&](const TmPair& p) { return 1 + tree_size(p.fst) + tree_size(p.snd); },
                 [&](const TmSigElim& r) {
                   return 1 + tree_size(r.sigma) + tree_size(r.motive) + tree_size(r.branch) +
                          tree_size(r.scrut);
                 },
                 [&](const TmConst& c) {
                   std::size_t n = 1;
                   for (const auto& a : c.args) n += tree_size(a);
                   return n;
                 }},
      t->node);
}

std::size_t tree_hash(const TyRef& t) {
  return std::visit(
      overloaded{[&](const TyUnit&) -> std::size_t { return 0x11u; },
                 [&](const TyPi& p) {
                   return mix(mix(0x12u, tree_hash(p.dom)), tree_hash(p.cod));
                 },
                 [&](const TySigma& s) {
                   return mix(mix(0x13u, tree_hash(s.dom)), tree_hash(s.cod));
                 },
                 [&](const TyConst& c) {
                   std::size_t h = mix(0x14u, std::hash<std::string>{}(c.name));
                   for (const auto& a : c.args) h = mix(h, tree_hash(a));
                   return h;
                 }},
      t->node);
}

std::size_t tree_hash(const TmRef& t) {
  return std::visit(
      overloaded{[&](const TmVar& v) { return mix(0x21u, static_cast<std::size_t>(v.index)); },
                 [&](const TmStar&) -> std::size_t { return 0x22u; },
                 [&](const TmLam& l) { return mix(0x23u, tree_hash(l.body)); },
                 [&](const TmApp& a) {
                   return mix(mix(0x24u, tree_hash(a.fn)), tree_hash(a.arg));
                 },
                 [&](const TmPair& p) {
                   return mix(mix(0x25u, tree_hash(p.fst)), tree_hash(p.snd));
                 },
                 [&](const TmSigElim& r) {
                   std::size_t h = mix(0x26u, tree_hash(r.sigma));
                   h = mix(h, tree_hash(r.motive));
                   h = mix(h, tree_hash(r.branch));
                   return mix(h, tree_hash(r.scrut));
                 },
                 [&](const TmConst& c) {
                   std::size_t h = mix(0x27u, std::hash<std::string>{}(c.name));
                   for (const auto& a : c.args) h = mix(h, tree_hash(a));
                   return h;
                 }},
      t->node);
}

void free_indices(const TmRef& t, std::vector<int>& out, int depth) {
  std::visit(overloaded{[&](const TmVar& v) {
                          if (v.index >= depth) out.push_back(v.index - depth);
                        },
                        [&](const TmStar&) {},
                        [&](const TmLam& l) { free_indices(l.body, out, depth + 1); },
                        [&](const TmApp& a) {
                          free_indices(a.fn, out, depth);
                          free_indices(a.arg, out, depth);
                        },
                        [&](const TmPair& p) {
                          free_indices(p.fst, out, depth);
                          free_indices(p.snd, out, depth);
                        },
                        [&](const TmSigElim& r) {
                          free_indices(r.sigma, out, depth);
                          free_indices(r.motive, out, depth + 1);
                          free_indices(r.branch, out, depth + 2);
                          free_indices(r.scrut, out, depth);
                        },
                        [&](const TmConst& c) {
                          for (const auto& a : c.args) free_indices(a, out, depth);
                        }},
             t->node);
}

void free_indices(const TyRef& t, std::vector<int>& out, int depth) {
  std::visit(overloaded{[&](const TyUnit&) {},
                        [&](const TyPi& p) {
                          free_indices(p.dom, out, depth);
                          free_indices(p.cod, out, depth + 1);
                        },
                        [&](const TySigma& s) {
                          free_indices(s.dom, out, depth);
                          free_indices(s.cod, out, depth + 1);
                        },
                        [&](const TyConst& c) {
                          for (const auto& a : c.args) free_indices(a, out, depth);
                        }},
             t->node);
}

int max_free_index(const TmRef& t) {
  std::vector<int> idx;
  free_indices(t, idx);
  return idx.empty() ? -1 : *std::max_element(idx.begin(), idx.end());
}
int max_free_index(const TyRef& t) {
  std::vector<int> idx;
  free_indices(t, idx);
  return idx.empty() ? -1 : *std::max_element(idx.begin(), idx.end());
}

// ---- contexts ----------------------------------------------------------------

std::string fresh_name(const std::string& hint, const std::vector<std::string>& taken) {
  std::string base = hint.empty() ? std::string("x") : hint;
  auto used = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  if (!used(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!used(cand)) return cand;
  }
}

Ctx Ctx::extended(const std::string& name, const TyRef& type) const {
  std::vector<std::string> taken;
  taken.reserve(entries_.size());
  for (const auto& e : entries_) taken.push_back(e.name);
  std::vector<CtxEntry> es = entries_;
  es.push_back(CtxEntry{fresh_name(name, taken), type});
  return Ctx(std::move(es));
}

TyRef Ctx::lookup(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= entries_.size())
    throw UnboundVariable("variable index " + std::to_string(k) + " out of context");
  const auto& e = entries_[entries_.size() - 1 - static_cast<std::size_t>(k)];
  return shift_ty(e.type, k + 1);
}

const std::string& Ctx::name_of(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= entries_.size())
    throw UnboundVariable("variable index " + std::to_string(k) + " out of context");
  return entries_[entries_.size() - 1 - static_cast<std::size_t>(k)].name;
}

bool Ctx::names_distinct() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].name == entries_[j].name) return false;
  return true;
}

Ctx Ctx::prefix(std::size_t n) const {
  return Ctx(std::vector<CtxEntry>(entries_.begin(), entries_.begin() + static_cast<long>(n)));
}

bool alpha_eq(const Ctx& a, const Ctx& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_eq(a.entry(i).type, b.entry(i).type)) return false;
  return true;
}

// ---- context morphisms --------------------------------------------------------

CtxMor::CtxMor(Ctx d, Ctx c, std::vector<TmRef> comps_)
    : dom(std::move(d)), cod(std::move(c)), comps(std::move(comps_)) {
  if (comps.size() != cod.size())
    throw DomainMismatch("context morphism arity does not match codomain length");
}

CtxMor id_cm(const Ctx& ctx) {
  std::vector<TmRef> comps;
  const int n = static_cast<int>(ctx.size());
  comps.reserve(ctx.size());
  for (int i = 0; i < n; ++i) comps.push_back(tm_var(n - 1 - i, ctx.entry(static_cast<std::size_t>(i)).name));
  return CtxMor(ctx, ctx, std::move(comps));
}

namespace {

// Shared core of generalized substitution: replaces the free variable with
// index k (relative to the tree root) by comps[n-1-k] shifted past `depth`
// local binders.
TmRef gsub_tm(const TmRef& t, const std::vector<TmRef>& comps, int depth);

TyRef gsub_ty(const TyRef& t, const std::vector<TmRef>& comps, int depth) {
  return std::visit(
      overloaded{
          [&](const TyUnit&) -> TyRef { return t; },
          [&](const TyPi& p) -> TyRef {
            return ty_pi(gsub_ty(p.dom, comps, depth), gsub_ty(p.cod, comps, depth + 1), p.binder);
          },
          [&](const TySigma& s) -> TyRef {
            return ty_sigma(gsub_ty(s.dom, comps, depth), gsub_ty(s.cod, comps, depth + 1), s.binder);
          },
          [&](const TyConst& c) -> TyRef {
            std::vector<TmRef> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(gsub_tm(a, comps, depth));
            return ty_const(c.name, std::move(args));
          }},
      t->node);
}

TmRef gsub_tm(const TmRef& t, const std::vector<TmRef>& comps, int depth) {
  return std::visit(
      overloaded{
          [&](const TmVar& v) -> TmRef {
            if (v.index < depth) return t;
            const int global = v.index - depth;
            const int n = static_cast<int>(comps.size());
            if (global >= n)
              throw UnboundVariable("variable " + (v.hint.empty() ? std::to_string(v.index) : v.hint) +
                                    " not covered by the context morphism");
            return shift_tm(comps[static_cast<std::size_t>(n - 1 - global)], depth);
          },
          [&](const TmStar&) -> TmRef { return t; },
          [&](const TmLam& l) -> TmRef { return tm_lam(gsub_tm(l.body, comps, depth + 1), l.binder); },
          [&](const TmApp& a) -> TmRef {
            return tm_app(gsub_tm(a.fn, comps, depth), gsub_tm(a.arg, comps, depth));
          },
          [&](const TmPair& p) -> TmRef {
            return tm_pair(gsub_tm(p.fst, comps, depth), gsub_tm(p.snd, comps, depth));
          },
          [&](const TmSigElim& r) -> TmRef {
            return tm_sig_elim(gsub_ty(r.sigma, comps, depth), gsub_ty(r.motive, comps, depth + 1),
                               gsub_tm(r.branch, comps, depth + 2), gsub_tm(r.scrut, comps, depth),
                               r.zname, r.xname, r.yname);
          },
          [&](const TmConst& c) -> TmRef {
            std::vector<TmRef> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(gsub_tm(a, comps, depth));
            return tm_const(c.name, std::move(args));
          }},
      t->node);
}

}  // namespace

TmRef gen_subst(const TmRef& t, const CtxMor& f) { return gsub_tm(t, f.comps, 0); }
TyRef gen_subst(const TyRef& t, const CtxMor& f) { return gsub_ty(t, f.comps, 0); }

CtxMor compose_cm(const CtxMor& g, const CtxMor& f) {
  if (!alpha_eq(f.cod, g.dom))
    throw DomainMismatch("compose_cm: codomain of the inner morphism differs from domain of the outer");
  std::vector<TmRef> comps;
  comps.reserve(g.comps.size());
  for (const auto& gi : g.comps) comps.push_back(gen_subst(gi, f));
  return CtxMor(f.dom, g.cod, std::move(comps));
}

bool alpha_eq(const CtxMor& a, const CtxMor& b) {
  if (!alpha_eq(a.dom, b.dom) || !alpha_eq(a.cod, b.cod)) return false;
  for (std::size_t i = 0; i < a.comps.size(); ++i)
    if (!alpha_eq(a.comps[i], b.comps[i])) return false;
  return true;
}

CtxMor lift_cm(const CtxMor& f, const std::string& name, const TyRef& cod_entry_type) {
  Ctx dom2 = f.dom.extended(name, gen_subst(cod_entry_type, f));
  Ctx cod2 = f.cod.extended(name, cod_entry_type);
  std::vector<TmRef> comps;
  comps.reserve(f.comps.size() + 1);
  for (const auto& c : f.comps) comps.push_back(shift_tm(c, 1));
  comps.push_back(tm_var(0, name));
  return CtxMor(std::move(dom2), std::move(cod2), std::move(comps));
}

std::vector<CtxEntry> gen_subst_tail(const std::vector<CtxEntry>& tail, const CtxMor& f) {
  CtxMor cur = f;
  std::vector<CtxEntry> out;
  out.reserve(tail.size());
  for (const auto& e : tail) {
    out.push_back(CtxEntry{e.name, gen_subst(e.type, cur)});
    cur = lift_cm(cur, e.name, e.type);
  }
  return out;
}

}  // namespace depcat
