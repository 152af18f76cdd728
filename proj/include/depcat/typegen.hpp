#ifndef DEPCAT_TYPEGEN_HPP
#define DEPCAT_TYPEGEN_HPP

#include <optional>
#include <random>

#include "depcat/signature.hpp"
#include "depcat/syntax.hpp"

// Seeded generators for derivable syntax over the empty signature (and over
// signatures whose closed types are inhabited by canonical terms).  Used by
// the term-model instance source and by property tests.

namespace depcat {

using GenRng = std::mt19937_64;

// Random well-formed type over a context of the given length (1/Pi/Sigma only).
TyRef gen_type(GenRng& rng, int ctx_len, int depth);

// Random well-formed context (1/Pi/Sigma types of the given depth).
Ctx gen_ctx(GenRng& rng, int len, int depth);

// Canonical inhabitant of a 1/Pi/Sigma type (star, lambdas, pairs).
TmRef canonical_inhabitant(const Ctx& ctx, const TyRef& ty);

// Random derivable term at the given type: intro forms, matching variables,
// and occasional beta-redexes.
TmRef gen_term(GenRng& rng, const Ctx& ctx, const TyRef& ty, int depth);

// Random derivable context morphism dom -> cod.
CtxMor gen_ctx_morphism(GenRng& rng, const Ctx& dom, const Ctx& cod, int depth);

}  // namespace depcat

#endif
