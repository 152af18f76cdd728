#ifndef DEPCAT_CHECKER_HPP
#define DEPCAT_CHECKER_HPP

#include <optional>
#include <string>
#include <utility>

#include "depcat/judgement.hpp"
#include "depcat/signature.hpp"
#include "depcat/syntax.hpp"

// Decides the six judgement forms for a validated signature.  Judgmental
// equality is decided by type-directed normalization: beta-reduce, eta-expand
// at Pi, expand to surjective pairs at Sigma, collapse to star at Unit, and
// apply guarded axioms as left-to-right rewrites; then compare up to alpha.

namespace depcat {

struct Verdict {
  enum class Kind { Derivable, NotDerivable, Unknown };
  Kind kind = Kind::Derivable;
  std::string reason;  // first failing premise in rule order, or fuel note

  bool ok() const { return kind == Kind::Derivable; }
  static Verdict yes() { return Verdict{}; }
  static Verdict no(std::string why) { return Verdict{Kind::NotDerivable, std::move(why)}; }
  static Verdict unknown(std::string why) { return Verdict{Kind::Unknown, std::move(why)}; }
};

// Thrown internally when the rewrite fuel runs out under trusted axioms;
// surfaces as Verdict::Unknown.
struct FuelExhausted : KernelError {
  using KernelError::KernelError;
};

class Checker {
 public:
  explicit Checker(ValidatedSignature vsig) : vsig_(std::move(vsig)) {}

  const Signature& sig() const { return vsig_.sig(); }
  const ValidatedSignature& vsig() const { return vsig_; }
  int fuel() const { return vsig_.fuel(); }
  bool trusted() const { return vsig_.trusted(); }

  Verdict check_ctx(const Ctx& ctx) const;
  Verdict check_type(const Ctx& ctx, const TyRef& ty) const;
  Verdict check_term(const Ctx& ctx, const TmRef& tm, const TyRef& ty) const;
  Verdict check_ctx_morphism(const Ctx& dom, const std::vector<TmRef>& comps, const Ctx& cod) const;
  Verdict check_ctx_morphism(const CtxMor& f) const;

  // Returns the synthesized type, or a NotDerivable verdict in .second.
  std::pair<TyRef, Verdict> infer_term(const Ctx& ctx, const TmRef& tm) const;

  Verdict equal_terms(const Ctx& ctx, const TmRef& a, const TmRef& b, const TyRef& ty) const;
  Verdict equal_types(const Ctx& ctx, const TyRef& a, const TyRef& b) const;
  Verdict equal_ctxs(const Ctx& a, const Ctx& b) const;

  Verdict check(const Judgement& j) const;

  // Beta-normal eta-long form of a well-typed term at the given type.
  TmRef normalize(const Ctx& ctx, const TmRef& tm, const TyRef& ty) const;
  TyRef normalize_type(const Ctx& ctx, const TyRef& ty) const;

  // Weak-head form (beta, Sigma-computation, axiom rewrites at the root).
  TmRef whnf(const TmRef& tm) const;
  TyRef whnf_type(const TyRef& ty) const;

  // The R^Sigma-encoded projections of p : Sigma (x:A) B.
  std::pair<TmRef, TmRef> derived_projections(const Ctx& ctx, const TmRef& p, const TyRef& a,
                                              const TyRef& b) const;

 private:
  ValidatedSignature vsig_;
};

// Convenience projections independent of a checker instance (pure syntax).
TmRef proj1_term(const TyRef& sigma, const TmRef& p);
TmRef proj2_term(const TyRef& sigma, const TmRef& p);

}  // namespace depcat

#endif
