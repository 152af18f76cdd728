#ifndef DEPCAT_TERM_MODEL_HPP
#define DEPCAT_TERM_MODEL_HPP

#include <optional>

#include "depcat/checker.hpp"
#include "depcat/cwf.hpp"
#include "depcat/parser.hpp"
#include "depcat/typegen.hpp"

// The classifying model over a validated signature: contexts and context
// morphisms modulo judgmental equality, with types as D-objects and terms as
// D-morphisms.  Value equality is the checker.

namespace depcat {

struct TmObj {
  Ctx ctx;
};
struct TmDObj {
  Ctx base;
  TyRef ty;
};
struct TmDMor {
  Ctx base;
  TyRef ty;
  TmRef tm;
};

class TermModel {
 public:
  using Obj = TmObj;
  using Mor = CtxMor;
  using DObj = TmDObj;
  using DMor = TmDMor;

  explicit TermModel(ValidatedSignature vsig) : chk_(std::move(vsig)) {}

  const Checker& checker() const { return chk_; }

  Obj terminal() const { return TmObj{Ctx{}}; }
  Mor id(const Obj& g) const { return id_cm(g.ctx); }
  Mor compose(const Mor& g, const Mor& f) const { return compose_cm(g, f); }
  Mor bang(const Obj& g) const { return CtxMor(g.ctx, Ctx{}, {}); }

  DObj reindex_dobj(const DObj& a, const Mor& phi) const;
  DMor reindex_dmor(const DMor& f, const Mor& phi) const;

  Obj comprehend(const Obj& g, const DObj& a) const;
  Mor p1(const Obj& g, const DObj& a) const;
  DMor p2(const Obj& g, const DObj& a) const;
  Mor extend(const Mor& phi, const DMor& g, const DObj& a) const;

  DObj unit() const { return DObj{Ctx{}, ty_unit()}; }
  DMor unit_bang(const Obj& g) const { return DMor{g.ctx, ty_unit(), tm_star()}; }

  DObj sigma(const Obj& g, const DObj& a, const DObj& b) const;
  DMor sigma_p1(const Obj& g, const DObj& a, const DObj& b) const;
  DMor sigma_p2(const Obj& g, const DObj& a, const DObj& b) const;
  DMor sigma_pair(const Obj& g, const DObj& a, const DObj& b, const Mor& phi, const DMor& gg,
                  const DMor& hh) const;

  DObj pi(const Obj& g, const DObj& a, const DObj& b) const;
  DMor dev(const Obj& g, const DObj& a, const DObj& b) const;
  DMor lam(const Obj& g, const DObj& a, const DObj& b, const DMor& f) const;

  bool eq_obj(const Obj& x, const Obj& y) const;
  bool eq_mor(const Mor& x, const Mor& y) const;
  bool eq_dobj(const DObj& x, const DObj& y) const;
  bool eq_dmor(const DMor& x, const DMor& y) const;

  std::string show_obj(const Obj& x) const { return print(x.ctx); }
  std::string show_mor(const Mor& x) const;
  std::string show_dobj(const DObj& x) const { return print(x.ty, ctx_names(x.base)); }
  std::string show_dmor(const DMor& x) const { return print(x.tm, ctx_names(x.base)); }

  // Unknown verdicts (possible only under trusted axioms) are treated as
  // inequality; the harness downgrades affected laws to CONDITIONAL.
  bool consume_unknown_flag() const {
    const bool v = unknown_seen_;
    unknown_seen_ = false;
    return v;
  }

 private:
  bool verdict(const Verdict& v) const;

  Checker chk_;
  mutable bool unknown_seen_ = false;
};

static_assert(cwf::Model<TermModel>);

// Instance source for the law harness over the empty signature: contexts of
// bounded length, types of bounded depth, terms from the derivable generator.
struct TermModelGen {
  TermModel& model;
  int max_ctx_len = 2;
  int max_ty_depth = 2;
  int uniqueness_samples = 3;

  std::optional<cwf::Bundle<TermModel>> bundle(cwf::Rng& rng) const;

  // Deterministic sweep over all contexts of length <= 2 whose entry types
  // come from the closed-type pool of depth <= 2.
  std::optional<cwf::Bundle<TermModel>> exhaustive_bundle(std::size_t index) const;
  std::size_t exhaustive_count() const;
};

// All closed 1/Pi/Sigma types of the given tree depth (for the sweep).
const std::vector<TyRef>& closed_type_pool(int depth);

}  // namespace depcat

#endif
