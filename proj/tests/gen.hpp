#ifndef DEPCAT_TESTS_GEN_HPP
#define DEPCAT_TESTS_GEN_HPP

#include <random>
#include <vector>

#include "depcat/syntax.hpp"

// Hand-rolled generators for property tests over raw kernel trees.

namespace depcat::testgen {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random raw pre-type / pre-term scoped over `nvars` variables (no constants).
inline TyRef random_ty(Rng& rng, int nvars, int depth);

inline TmRef random_tm(Rng& rng, int nvars, int depth) {
  if (depth <= 0) {
    if (nvars > 0 && pick(rng, 0, 1) == 0) return tm_var(pick(rng, 0, nvars - 1));
    return tm_star();
  }
  switch (pick(rng, 0, 5)) {
    case 0:
      return nvars > 0 ? tm_var(pick(rng, 0, nvars - 1)) : tm_star();
    case 1:
      return tm_star();
    case 2:
      return tm_lam(random_tm(rng, nvars + 1, depth - 1));
    case 3:
      return tm_app(random_tm(rng, nvars, depth - 1), random_tm(rng, nvars, depth - 1));
    case 4:
      return tm_pair(random_tm(rng, nvars, depth - 1), random_tm(rng, nvars, depth - 1));
    default:
      return tm_sig_elim(ty_sigma(random_ty(rng, nvars, depth - 1), random_ty(rng, nvars + 1, depth - 1)),
                         random_ty(rng, nvars + 1, depth - 1), random_tm(rng, nvars + 2, depth - 1),
                         random_tm(rng, nvars, depth - 1));
  }
}

inline TyRef random_ty(Rng& rng, int nvars, int depth) {
  if (depth <= 0) return ty_unit();
  switch (pick(rng, 0, 2)) {
    case 0:
      return ty_unit();
    case 1:
      return ty_pi(random_ty(rng, nvars, depth - 1), random_ty(rng, nvars + 1, depth - 1));
    default:
      return ty_sigma(random_ty(rng, nvars, depth - 1), random_ty(rng, nvars + 1, depth - 1));
  }
}

// Random raw context of the given length (types over the empty signature).
inline Ctx random_ctx(Rng& rng, int len, int depth) {
  Ctx ctx;
  for (int i = 0; i < len; ++i) ctx = ctx.extended("v", random_ty(rng, i, depth));
  return ctx;
}

// Random raw context morphism dom -> cod (terms scoped over dom, untyped).
inline CtxMor random_cm(Rng& rng, const Ctx& dom, const Ctx& cod, int depth) {
  std::vector<TmRef> comps;
  comps.reserve(cod.size());
  for (std::size_t i = 0; i < cod.size(); ++i)
    comps.push_back(random_tm(rng, static_cast<int>(dom.size()), depth));
  return CtxMor(dom, cod, comps);
}

}  // namespace depcat::testgen

#endif
