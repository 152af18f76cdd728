#ifndef DEPCAT_CWF_HPP
#define DEPCAT_CWF_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

// The abstract model interface: a strict semi-cartesian category with
// dependence together with a unit D-object, coherent Sigma-spaces and
// coherent Pi-spaces (equivalently, a CwF supporting strict 1/Pi/Sigma).
// Everything here is generic over a model type M providing the structure
// maps and a decidable equality; the law harness exercises the full
// equational theory through that equality only.

namespace depcat::cwf {

template <class M>
concept Model = requires(M m, typename M::Obj G, typename M::Mor phi, typename M::DObj A,
                         typename M::DMor f) {
  // category with terminal object
  { m.terminal() } -> std::same_as<typename M::Obj>;
  { m.id(G) } -> std::same_as<typename M::Mor>;
  { m.compose(phi, phi) } -> std::same_as<typename M::Mor>;
  { m.bang(G) } -> std::same_as<typename M::Mor>;
  // dependence
  { m.reindex_dobj(A, phi) } -> std::same_as<typename M::DObj>;
  { m.reindex_dmor(f, phi) } -> std::same_as<typename M::DMor>;
  // comprehension
  { m.comprehend(G, A) } -> std::same_as<typename M::Obj>;
  { m.p1(G, A) } -> std::same_as<typename M::Mor>;
  { m.p2(G, A) } -> std::same_as<typename M::DMor>;
  { m.extend(phi, f, A) } -> std::same_as<typename M::Mor>;
  // unit D-object
  { m.unit() } -> std::same_as<typename M::DObj>;
  { m.unit_bang(G) } -> std::same_as<typename M::DMor>;
  // Sigma-spaces
  { m.sigma(G, A, A) } -> std::same_as<typename M::DObj>;
  { m.sigma_p1(G, A, A) } -> std::same_as<typename M::DMor>;
  { m.sigma_p2(G, A, A) } -> std::same_as<typename M::DMor>;
  { m.sigma_pair(G, A, A, phi, f, f) } -> std::same_as<typename M::DMor>;
  // Pi-spaces
  { m.pi(G, A, A) } -> std::same_as<typename M::DObj>;
  { m.dev(G, A, A) } -> std::same_as<typename M::DMor>;
  { m.lam(G, A, A, f) } -> std::same_as<typename M::DMor>;
  // decidable equality and printing
  { m.eq_obj(G, G) } -> std::same_as<bool>;
  { m.eq_mor(phi, phi) } -> std::same_as<bool>;
  { m.eq_dobj(A, A) } -> std::same_as<bool>;
  { m.eq_dmor(f, f) } -> std::same_as<bool>;
  { m.show_obj(G) } -> std::same_as<std::string>;
  { m.show_mor(phi) } -> std::same_as<std::string>;
  { m.show_dobj(A) } -> std::same_as<std::string>;
  { m.show_dmor(f) } -> std::same_as<std::string>;
};

// ---- derived helpers (the defining formulas, shared by all instances) -------

// phi^{+A} = <phi o pi1, pi2> : Delta.A{phi} -> Gamma.A
template <class M>
typename M::Mor lift(M& m, typename M::Obj delta, typename M::Obj gamma, typename M::Mor phi,
                     typename M::DObj A) {
  auto Aphi = m.reindex_dobj(A, phi);
  auto pi1 = m.p1(delta, Aphi);
  auto pi2 = m.p2(delta, Aphi);
  return m.extend(m.compose(phi, pi1), pi2, A);
}

// a-bar = <id, a> : Gamma -> Gamma.A
template <class M>
typename M::Mor section(M& m, typename M::Obj gamma, typename M::DObj A, typename M::DMor a) {
  return m.extend(m.id(gamma), a, A);
}

// Lambda^{-1}(g) = dev { (g-bar)^{+A{pi1}} } : Gamma.A -> B
template <class M>
typename M::DMor lam_inv(M& m, typename M::Obj gamma, typename M::DObj A, typename M::DObj B,
                         typename M::DMor g) {
  auto piAB = m.pi(gamma, A, B);
  auto gbar = section(m, gamma, piAB, g);            // Gamma -> Gamma.Pi(A,B)
  auto gAB = m.comprehend(gamma, piAB);              // Gamma.Pi(A,B)
  auto Api1 = m.reindex_dobj(A, m.p1(gamma, piAB));  // A{pi1} over Gamma.Pi(A,B)
  auto liftg = lift(m, gamma, gAB, gbar, Api1);      // Gamma.A -> Gamma.Pi(A,B).A{pi1}
  return m.reindex_dmor(m.dev(gamma, A, B), liftg);
}

// App(g, a) = Lambda^{-1}(g){a-bar}
template <class M>
typename M::DMor app(M& m, typename M::Obj gamma, typename M::DObj A, typename M::DObj B,
                     typename M::DMor g, typename M::DMor a) {
  return m.reindex_dmor(lam_inv(m, gamma, A, B, g), section(m, gamma, A, a));
}

// Pair = <pi1 o pi1, {{ pi2{pi1}, pi2 }}> : Gamma.A.B -> Gamma.Sigma(A,B)
// Pair^{-1} = <<pi1, w1>, w2> : Gamma.Sigma(A,B) -> Gamma.A.B
template <class M>
struct PairIso {
  typename M::Mor fwd;
  typename M::Mor bwd;
};

template <class M>
PairIso<M> pair_iso(M& m, typename M::Obj gamma, typename M::DObj A, typename M::DObj B) {
  auto gA = m.comprehend(gamma, A);
  auto pi1A = m.p1(gamma, A);
  auto pi2A = m.p2(gamma, A);
  auto pi1B = m.p1(gA, B);
  auto pi2B = m.p2(gA, B);
  // forward: phi = pi1 o pi1 : Gamma.A.B -> Gamma
  auto phi = m.compose(pi1A, pi1B);
  // g = pi2{pi1} : Gamma.A.B -> A{phi};  h = pi2 : Gamma.A.B -> B{<phi,g>}
  auto g = m.reindex_dmor(pi2A, pi1B);
  auto fwd = m.extend(phi, m.sigma_pair(gamma, A, B, phi, g, pi2B), m.sigma(gamma, A, B));
  // backward
  auto w1 = m.sigma_p1(gamma, A, B);
  auto w2 = m.sigma_p2(gamma, A, B);
  auto pi1S = m.p1(gamma, m.sigma(gamma, A, B));
  auto inner = m.extend(pi1S, w1, A);  // Gamma.Sigma(A,B) -> Gamma.A
  auto bwd = m.extend(inner, w2, B);   // Gamma.Sigma(A,B) -> Gamma.A.B
  return {fwd, bwd};
}

// R^Sigma_{A,B,P}(f) = f { Pair^{-1} }
template <class M>
typename M::DMor sigma_elim(M& m, typename M::Obj gamma, typename M::DObj A, typename M::DObj B,
                            typename M::DObj /*P*/, typename M::DMor f) {
  return m.reindex_dmor(f, pair_iso(m, gamma, A, B).bwd);
}

// ---- the category of D-objects ------------------------------------------------

// A morphism (Delta, D) -> (Gamma, C): a pair (phi, f) with f : Delta.D -> C{phi o pi1}.
template <class M>
struct DObjMor {
  typename M::Obj dom_base, cod_base;
  typename M::DObj dom_dobj, cod_dobj;
  typename M::Mor phi;
  typename M::DMor f;
};

template <class M>
DObjMor<M> dobj_id(M& m, typename M::Obj gamma, typename M::DObj C) {
  return {gamma, gamma, C, C, m.id(gamma), m.p2(gamma, C)};
}

template <class M>
DObjMor<M> dobj_compose(M& m, const DObjMor<M>& g, const DObjMor<M>& f) {
  // (psi, g) o (phi, f) = (psi o phi, g { <phi o pi1, f> })
  auto pi1 = m.p1(f.dom_base, f.dom_dobj);
  auto mediating = m.extend(m.compose(f.phi, pi1), f.f, g.dom_dobj);
  return {f.dom_base, g.cod_base, f.dom_dobj, g.cod_dobj, m.compose(g.phi, f.phi),
          m.reindex_dmor(g.f, mediating)};
}

template <class M>
bool dobj_eq(M& m, const DObjMor<M>& a, const DObjMor<M>& b) {
  return m.eq_mor(a.phi, b.phi) && m.eq_dmor(a.f, b.f);
}

// Triple : Sigma(Sigma(A,B), C) -> Sigma(A, Sigma(B, C{Pair})) as a morphism of
// D-objects over Gamma (first component the identity).
template <class M>
struct TripleIso {
  DObjMor<M> fwd;
  DObjMor<M> bwd;
};

template <class M>
TripleIso<M> sigma_assoc(M& m, typename M::Obj gamma, typename M::DObj A, typename M::DObj B,
                         typename M::DObj C) {
  using DMor = typename M::DMor;
  auto gA = m.comprehend(gamma, A);
  auto sAB = m.sigma(gamma, A, B);
  auto pair = pair_iso(m, gamma, A, B);
  auto Cpair = m.reindex_dobj(C, pair.fwd);               // over Gamma.A.B
  auto sBC = m.sigma(gA, B, Cpair);                       // over Gamma.A
  auto lhs = m.sigma(gamma, sAB, C);                      // Sigma(Sigma(A,B),C)
  auto rhs = m.sigma(gamma, A, sBC);                      // Sigma(A, Sigma(B, C{Pair}))

  // forward: over Gamma.lhs, build {{ w1{<pi1,w1>}, {{ w2{<pi1,w1>}, w2 }} }}
  auto glhs = m.comprehend(gamma, lhs);
  auto pi1L = m.p1(gamma, lhs);
  auto w1L = m.sigma_p1(gamma, sAB, C);  // Gamma.lhs -> Sigma(A,B){pi1}
  auto w2L = m.sigma_p2(gamma, sAB, C);  // Gamma.lhs -> C{<pi1,w1>}
  auto inner = m.extend(pi1L, w1L, sAB); // Gamma.lhs -> Gamma.Sigma(A,B)
  auto w1AB = m.reindex_dmor(m.sigma_p1(gamma, A, B), inner);  // -> A{pi1}
  auto w2AB = m.reindex_dmor(m.sigma_p2(gamma, A, B), inner);  // -> B{<pi1, w1AB>}
  DMor innerPair =
      m.sigma_pair(gA, B, Cpair, m.extend(pi1L, w1AB, A), w2AB, w2L);
  DMor fwd = m.sigma_pair(gamma, A, sBC, pi1L, w1AB, innerPair);

  // backward: over Gamma.rhs, {{ {{ w1, w1{med} }}, w2{med} }} with
  // med = <<pi1, w1>, w2> : Gamma.rhs -> Gamma.A.Sigma(B, C{Pair})
  auto pi1R = m.p1(gamma, rhs);
  auto w1R = m.sigma_p1(gamma, A, sBC);  // Gamma.rhs -> A{pi1}
  auto w2R = m.sigma_p2(gamma, A, sBC);  // Gamma.rhs -> Sigma(B,C{Pair}){<pi1,w1>}
  auto innerR = m.extend(pi1R, w1R, A);  // Gamma.rhs -> Gamma.A
  auto med = m.extend(innerR, w2R, sBC); // Gamma.rhs -> Gamma.A.Sigma(B,C{Pair})
  auto w1BC = m.reindex_dmor(m.sigma_p1(gA, B, Cpair), med);  // -> B{innerR}
  auto w2BC = m.reindex_dmor(m.sigma_p2(gA, B, Cpair), med);  // -> C{Pair}{...}
  DMor outerPair = m.sigma_pair(gamma, A, B, pi1R, w1R, w1BC);
  DMor bwd = m.sigma_pair(gamma, sAB, C, pi1R, outerPair, w2BC);

  TripleIso<M> iso;
  iso.fwd = DObjMor<M>{gamma, gamma, lhs, rhs, m.id(gamma), fwd};
  iso.bwd = DObjMor<M>{gamma, gamma, rhs, lhs, m.id(gamma), bwd};
  (void)glhs;
  return iso;
}

// Unit laws: Sigma(1{!}, A{pi1}) ~ A ~ Sigma(A, 1{!}) as D-object isomorphisms.
template <class M>
struct UnitLawIsos {
  DObjMor<M> left_fwd, left_bwd;    // Sigma(1{!}, A{pi1}) <-> A
  DObjMor<M> right_fwd, right_bwd;  // Sigma(A, 1{!}) <-> A
};

template <class M>
UnitLawIsos<M> unit_law(M& m, typename M::Obj gamma, typename M::DObj A) {
  auto oneG = m.reindex_dobj(m.unit(), m.bang(gamma));  // 1{!_Gamma}
  auto g1 = m.comprehend(gamma, oneG);
  auto Api1 = m.reindex_dobj(A, m.p1(gamma, oneG));
  auto lhs = m.sigma(gamma, oneG, Api1);

  auto gA = m.comprehend(gamma, A);
  auto one_gA = m.reindex_dobj(m.unit(), m.bang(gA));  // 1{!_{Gamma.A}}
  auto rhs = m.sigma(gamma, A, one_gA);

  UnitLawIsos<M> out;
  // left: forward is the second Sigma projection, backward pairs the bang.
  out.left_fwd = DObjMor<M>{gamma, gamma, lhs, A, m.id(gamma),
                            m.sigma_p2(gamma, oneG, Api1)};
  {
    auto pi1A = m.p1(gamma, A);
    auto bang = m.unit_bang(gA);  // Gamma.A -> 1{!_{Gamma.A}} = oneG{pi1}
    out.left_bwd = DObjMor<M>{gamma, gamma, A, lhs, m.id(gamma),
                              m.sigma_pair(gamma, oneG, Api1, pi1A, bang, m.p2(gamma, A))};
  }
  // right: forward is the first Sigma projection, backward pairs with the bang.
  out.right_fwd = DObjMor<M>{gamma, gamma, rhs, A, m.id(gamma),
                             m.sigma_p1(gamma, A, one_gA)};
  {
    auto pi1A = m.p1(gamma, A);
    auto bang = m.unit_bang(gA);
    out.right_bwd = DObjMor<M>{gamma, gamma, A, rhs, m.id(gamma),
                               m.sigma_pair(gamma, A, one_gA, pi1A, m.p2(gamma, A), bang)};
  }
  (void)g1;
  return out;
}

// ---- law report ----------------------------------------------------------------

struct LawResult {
  std::string name;
  int checked = 0;
  int failed = 0;
  bool conditional = false;  // equality oracle answered Unknown somewhere
  std::string witness;       // first counterexample

  bool passed() const { return failed == 0 && checked > 0; }
};

struct LawReport {
  std::vector<LawResult> laws;

  LawResult& at(const std::string& name) {
    for (auto& l : laws)
      if (l.name == name) return l;
    laws.push_back(LawResult{name});
    return laws.back();
  }
  const LawResult* find(const std::string& name) const {
    for (const auto& l : laws)
      if (l.name == name) return &l;
    return nullptr;
  }
  bool all_passed() const {
    for (const auto& l : laws)
      if (l.failed > 0) return false;
    return true;
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& l : laws)
      if (l.failed > 0) out.push_back(l.name);
    return out;
  }
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& l : laws) {
      os << "LAW " << l.name << " ";
      if (l.failed == 0)
        os << (l.conditional ? "CONDITIONAL" : "PASS") << " (" << l.checked << " instances)";
      else
        os << "FAIL (" << l.failed << "/" << l.checked << ") " << l.witness;
      os << "\n";
    }
    return os.str();
  }
};

// Canonical law order, keyed to the axiom names.
inline const std::vector<std::string>& law_order() {
  static const std::vector<std::string> order = {
      "Ty-Id",     "Ty-Comp",   "Tm-Id",     "Tm-Comp",    "Cons-L",    "Cons-R",
      "Cons-Nat",  "Cons-Id",   "Strict",    "Terminal",   "Unit-Uniq", "Sigma-UP1",
      "Sigma-UP2", "Sigma-Uniq", "Coh0Sigma", "Coh1Sigma",  "Coh2Sigma", "Pi-UP",
      "Pi-Uniq",   "UP2Pi",     "UP3Pi",     "DcompPi1",   "DcompPi2",
      // derived former theorems
      "Pair-InvL", "Pair-InvR", "RSigma-Comp", "RSigma-Uniq", "RSigma-Subst",
      "Pi-Comp",   "Lambda-Uniq", "App-Subst", "Lambda-Subst", "Triple-InvL",
      "Triple-InvR", "UnitLaw-L", "UnitLaw-R", "DObj-Cat"};
  return order;
}

// ---- instance bundles and the harness --------------------------------------------

using Rng = std::mt19937_64;

template <class M>
struct Bundle {
  using Obj = typename M::Obj;
  using Mor = typename M::Mor;
  using DObj = typename M::DObj;
  using DMor = typename M::DMor;

  Obj gamma, delta, theta;
  Mor phi;  // Delta -> Gamma
  Mor psi;  // Theta -> Delta
  DObj A;   // over Gamma
  DObj B;   // over Gamma.A
  DObj C;   // over Gamma
  DObj D;   // over Gamma
  DObj P;   // over Gamma.Sigma(A,B)
  DMor f;   // Gamma -> A
  DMor a;   // Gamma -> A (independent sample)
  DMor g;   // Delta -> A{phi}
  DMor h;   // Delta -> B{<phi,g>}
  DMor k;   // Gamma.A -> B
  DMor q;   // Gamma.A -> Pi(A,B){pi1}
  DMor fP;  // Gamma.A.B -> P{Pair}
  DMor gP;  // Gamma.Sigma(A,B) -> P
  DMor hC;  // Gamma.C.A{pi1} -> B{pi1^{*A}}
  DMor gD;  // Gamma.D -> C{pi1}
  // candidate enumerations for uniqueness laws (may be sampled subsets)
  std::vector<DMor> sigma_candidates;  // Delta -> Sigma(A,B){phi}
  std::vector<DMor> pi_candidates;     // Gamma -> Pi(A,B)
  std::vector<DMor> unit_candidates;   // Gamma -> 1{!}
  std::vector<Mor> terminal_candidates;  // Gamma -> T
};

struct LawOptions {
  int budget = 200;
  std::uint64_t seed = 0;
  bool derived_formers = true;
};

namespace detail {

template <class M>
void tally(LawReport& rep, const std::string& name, bool ok, M& m, const std::string& witness) {
  auto& l = rep.at(name);
  ++l.checked;
  if (!ok) {
    ++l.failed;
    if (l.witness.empty()) l.witness = witness;
  }
  (void)m;
}

}  // namespace detail

// Runs every law on one instance bundle.
template <Model M>
void check_bundle(M& m, const Bundle<M>& b, LawReport& rep) {
  using detail::tally;
  auto W = [&](const std::string& what) { return what; };

  const auto gamma = b.gamma;
  const auto gA = m.comprehend(gamma, b.A);

  // CwF substitution laws
  tally(rep, "Ty-Id", m.eq_dobj(m.reindex_dobj(b.A, m.id(gamma)), b.A), m,
        W("A{id} vs A with A=" + m.show_dobj(b.A)));
  {
    auto lhs = m.reindex_dobj(b.A, m.compose(b.phi, b.psi));
    auto rhs = m.reindex_dobj(m.reindex_dobj(b.A, b.phi), b.psi);
    tally(rep, "Ty-Comp", m.eq_dobj(lhs, rhs), m, W("A{phi o psi} vs A{phi}{psi}"));
  }
  tally(rep, "Tm-Id", m.eq_dmor(m.reindex_dmor(b.f, m.id(gamma)), b.f), m, W("f{id} vs f"));
  {
    auto lhs = m.reindex_dmor(b.f, m.compose(b.phi, b.psi));
    auto rhs = m.reindex_dmor(m.reindex_dmor(b.f, b.phi), b.psi);
    tally(rep, "Tm-Comp", m.eq_dmor(lhs, rhs), m, W("f{phi o psi} vs f{phi}{psi}"));
  }

  // comprehension laws
  {
    auto ext = m.extend(b.phi, b.g, b.A);
    tally(rep, "Cons-L", m.eq_mor(m.compose(m.p1(gamma, b.A), ext), b.phi), m,
          W("pi1 o <phi,g> vs phi"));
    tally(rep, "Cons-R", m.eq_dmor(m.reindex_dmor(m.p2(gamma, b.A), ext), b.g), m,
          W("pi2{<phi,g>} vs g"));
    auto lhs = m.compose(ext, b.psi);
    auto rhs = m.extend(m.compose(b.phi, b.psi), m.reindex_dmor(b.g, b.psi), b.A);
    tally(rep, "Cons-Nat", m.eq_mor(lhs, rhs), m, W("<phi,g> o psi vs <phi o psi, g{psi}>"));
    tally(rep, "Cons-Id",
          m.eq_mor(m.extend(m.p1(gamma, b.A), m.p2(gamma, b.A), b.A), m.id(gA)), m,
          W("<pi1,pi2> vs id on " + m.show_obj(gA)));
  }

  // strictness equation
  {
    auto Api1 = m.reindex_dobj(b.A, m.p1(gamma, b.A));
    auto gAA = m.comprehend(gA, Api1);
    auto lhs = m.reindex_dmor(m.p2(gamma, b.A), m.p1(gA, Api1));
    auto rhs = m.p2(gA, Api1);
    tally(rep, "Strict", m.eq_dmor(lhs, rhs), m, W("pi2{pi1} vs pi2 at " + m.show_obj(gAA)));
  }

  // terminal object and unit D-object uniqueness
  {
    bool ok = true;
    std::string witness;
    for (const auto& cand : b.terminal_candidates)
      if (!m.eq_mor(cand, m.bang(gamma))) {
        ok = false;
        witness = "morphism " + m.show_mor(cand) + " differs from !_Gamma";
        break;
      }
    tally(rep, "Terminal", ok, m, witness);
  }
  {
    bool ok = true;
    std::string witness;
    const auto bang = m.unit_bang(gamma);
    for (const auto& cand : b.unit_candidates)
      if (!m.eq_dmor(cand, bang)) {
        ok = false;
        witness = "global element " + m.show_dmor(cand) + " differs from the bang";
        break;
      }
    tally(rep, "Unit-Uniq", ok, m, witness);
  }

  // Sigma universal property
  {
    auto pairing = m.sigma_pair(gamma, b.A, b.B, b.phi, b.g, b.h);
    auto sAB = m.sigma(gamma, b.A, b.B);
    auto ext = m.extend(b.phi, pairing, sAB);
    auto w1 = m.sigma_p1(gamma, b.A, b.B);
    auto w2 = m.sigma_p2(gamma, b.A, b.B);
    tally(rep, "Sigma-UP1", m.eq_dmor(m.reindex_dmor(w1, ext), b.g), m,
          W("w1{<phi,{{g,h}}>} vs g"));
    tally(rep, "Sigma-UP2", m.eq_dmor(m.reindex_dmor(w2, ext), b.h), m,
          W("w2{<phi,{{g,h}}>} vs h"));
    bool uniq = true;
    std::string witness;
    for (const auto& cand : b.sigma_candidates) {
      auto extc = m.extend(b.phi, cand, sAB);
      if (m.eq_dmor(m.reindex_dmor(w1, extc), b.g) && m.eq_dmor(m.reindex_dmor(w2, extc), b.h) &&
          !m.eq_dmor(cand, pairing)) {
        uniq = false;
        witness = "second pairing " + m.show_dmor(cand);
        break;
      }
    }
    tally(rep, "Sigma-Uniq", uniq, m, witness);
  }

  // Sigma coherence
  {
    auto Aphi = m.reindex_dobj(b.A, b.phi);
    auto phiA = lift(m, b.delta, gamma, b.phi, b.A);
    auto Blift = m.reindex_dobj(b.B, phiA);
    auto lhs = m.reindex_dobj(m.sigma(gamma, b.A, b.B), b.phi);
    auto rhs = m.sigma(b.delta, Aphi, Blift);
    tally(rep, "Coh0Sigma", m.eq_dobj(lhs, rhs), m,
          W("Sigma(A,B){phi}=" + m.show_dobj(lhs) + " vs Sigma(A{phi},B{phi+})=" + m.show_dobj(rhs)));
    auto phiStar = lift(m, b.delta, gamma, b.phi, m.sigma(gamma, b.A, b.B));
    tally(rep, "Coh1Sigma",
          m.eq_dmor(m.reindex_dmor(m.sigma_p1(gamma, b.A, b.B), phiStar),
                    m.sigma_p1(b.delta, Aphi, Blift)),
          m, W("w1{phi*} vs w1'"));
    tally(rep, "Coh2Sigma",
          m.eq_dmor(m.reindex_dmor(m.sigma_p2(gamma, b.A, b.B), phiStar),
                    m.sigma_p2(b.delta, Aphi, Blift)),
          m, W("w2{phi*} vs w2'"));
  }

  // Pi universal property
  {
    auto lamk = m.lam(gamma, b.A, b.B, b.k);
    tally(rep, "Pi-UP", m.eq_dmor(lam_inv(m, gamma, b.A, b.B, lamk), b.k), m,
          W("dev{(lam k)-bar+} vs k"));
    bool uniq = true;
    std::string witness;
    for (const auto& cand : b.pi_candidates) {
      if (m.eq_dmor(lam_inv(m, gamma, b.A, b.B, cand), b.k) && !m.eq_dmor(cand, lamk)) {
        uniq = false;
        witness = "second currying " + m.show_dmor(cand);
        break;
      }
    }
    tally(rep, "Pi-Uniq", uniq, m, witness);
  }

  // the two extra Pi axioms, stated over Gamma.C / Gamma.D
  {
    auto gC = m.comprehend(gamma, b.C);
    auto pi1C = m.p1(gamma, b.C);
    auto Api1 = m.reindex_dobj(b.A, pi1C);
    auto piAB = m.pi(gamma, b.A, b.B);
    auto pi1CA = lift(m, gC, gamma, pi1C, b.A);  // Gamma.C.A{pi1} -> Gamma.A
    auto Blift = m.reindex_dobj(b.B, pi1CA);
    // UP2Pi: dev_{Pi(A,B)} { <pi1, Lam(h)>^{+A{pi1}} } = h
    auto lamh = m.lam(gC, Api1, Blift, b.hC);
    auto extLam = m.extend(pi1C, lamh, piAB);  // Gamma.C -> Gamma.Pi(A,B)
    auto ApiPi = m.reindex_dobj(b.A, m.p1(gamma, piAB));
    auto liftExt = lift(m, gC, m.comprehend(gamma, piAB), extLam, ApiPi);
    tally(rep, "UP2Pi", m.eq_dmor(m.reindex_dmor(m.dev(gamma, b.A, b.B), liftExt), b.hC), m,
          W("dev{<pi1,Lam h>+} vs h"));

    // UP3Pi: Lam(h{<pi1,gD>^{+A{pi1}}}) = Lam(h){<pi1,gD>}
    auto gD = m.comprehend(gamma, b.D);
    auto pi1D = m.p1(gamma, b.D);
    auto extg = m.extend(pi1D, b.gD, b.C);  // Gamma.D -> Gamma.C
    auto ApiD = m.reindex_dobj(b.A, pi1D);
    auto liftg = lift(m, gD, gC, extg, Api1);  // Gamma.D.A{pi1} -> Gamma.C.A{pi1}
    auto pi1DA = lift(m, gD, gamma, pi1D, b.A);
    auto BliftD = m.reindex_dobj(b.B, pi1DA);
    auto lhs = m.lam(gD, ApiD, BliftD, m.reindex_dmor(b.hC, liftg));
    auto rhs = m.reindex_dmor(lamh, extg);
    tally(rep, "UP3Pi", m.eq_dmor(lhs, rhs), m, W("Lam(h{<pi1,g>+}) vs Lam(h){<pi1,g>}"));
  }

  // Pi coherence
  {
    auto Aphi = m.reindex_dobj(b.A, b.phi);
    auto phiA = lift(m, b.delta, gamma, b.phi, b.A);
    auto Blift = m.reindex_dobj(b.B, phiA);
    auto lhs = m.reindex_dobj(m.pi(gamma, b.A, b.B), b.phi);
    auto rhs = m.pi(b.delta, Aphi, Blift);
    tally(rep, "DcompPi1", m.eq_dobj(lhs, rhs), m, W("Pi(A,B){phi} vs Pi(A{phi},B{phi+})"));

    auto piAB = m.pi(gamma, b.A, b.B);
    auto phiPi = lift(m, b.delta, gamma, b.phi, piAB);  // Delta.Pi{phi} -> Gamma.Pi
    auto ApiPi = m.reindex_dobj(b.A, m.p1(gamma, piAB));
    auto phiPiA = lift(m, m.comprehend(b.delta, m.reindex_dobj(piAB, b.phi)),
                       m.comprehend(gamma, piAB), phiPi, ApiPi);
    tally(rep, "DcompPi2",
          m.eq_dmor(m.reindex_dmor(m.dev(gamma, b.A, b.B), phiPiA), m.dev(b.delta, Aphi, Blift)),
          m, W("dev{phi++} vs dev'"));
  }
}

// Derived-former theorems on one bundle.
template <Model M>
void check_derived(M& m, const Bundle<M>& b, LawReport& rep) {
  using detail::tally;
  const auto gamma = b.gamma;
  const auto gA = m.comprehend(gamma, b.A);
  const auto gAB = m.comprehend(gA, b.B);
  const auto sAB = m.sigma(gamma, b.A, b.B);
  const auto gS = m.comprehend(gamma, sAB);
  auto pair = pair_iso(m, gamma, b.A, b.B);

  tally(rep, "Pair-InvL", m.eq_mor(m.compose(pair.bwd, pair.fwd), m.id(gAB)), m,
        "Pair^-1 o Pair vs id on " + m.show_obj(gAB));
  tally(rep, "Pair-InvR", m.eq_mor(m.compose(pair.fwd, pair.bwd), m.id(gS)), m,
        "Pair o Pair^-1 vs id on " + m.show_obj(gS));

  // R^Sigma computation, uniqueness, substitution stability
  {
    auto relim = sigma_elim(m, gamma, b.A, b.B, b.P, b.fP);
    tally(rep, "RSigma-Comp", m.eq_dmor(m.reindex_dmor(relim, pair.fwd), b.fP), m,
          "R(f){Pair} vs f");
    auto gPpair = m.reindex_dmor(b.gP, pair.fwd);
    tally(rep, "RSigma-Uniq", m.eq_dmor(sigma_elim(m, gamma, b.A, b.B, b.P, gPpair), b.gP), m,
          "R(g{Pair}) vs g");

    // substitution: R(f){phi*} = R_{A',B',P'}(f{phi++})
    auto Aphi = m.reindex_dobj(b.A, b.phi);
    auto phiA = lift(m, b.delta, gamma, b.phi, b.A);
    auto Blift = m.reindex_dobj(b.B, phiA);
    auto phiStar = lift(m, b.delta, gamma, b.phi, sAB);
    auto dAphi = m.comprehend(b.delta, Aphi);
    auto phiPlusPlus = lift(m, dAphi, gA, phiA, b.B);
    auto lhs = m.reindex_dmor(relim, phiStar);
    auto rhs = sigma_elim(m, b.delta, Aphi, Blift, m.reindex_dobj(b.P, phiStar),
                          m.reindex_dmor(b.fP, phiPlusPlus));
    tally(rep, "RSigma-Subst", m.eq_dmor(lhs, rhs), m, "R(f){phi*} vs R(f{phi++})");
  }

  // App/lambda: beta, uniqueness, substitution
  {
    auto lamk = m.lam(gamma, b.A, b.B, b.k);
    auto lhs = app(m, gamma, b.A, b.B, lamk, b.a);
    auto rhs = m.reindex_dmor(b.k, section(m, gamma, b.A, b.a));
    tally(rep, "Pi-Comp", m.eq_dmor(lhs, rhs), m, "App(lam k, a) vs k{a-bar}");
  }
  {
    // lambda-Uniq: lam(App(q, pi2)){pi1} = q for q : Gamma.A -> Pi(A,B){pi1}
    auto pi1A = m.p1(gamma, b.A);
    auto Api1 = m.reindex_dobj(b.A, pi1A);
    auto pi1lift = lift(m, gA, gamma, pi1A, b.A);
    auto Blift = m.reindex_dobj(b.B, pi1lift);
    auto applied = app(m, gA, Api1, Blift, b.q, m.p2(gamma, b.A));
    auto lhs = m.reindex_dmor(m.lam(gamma, b.A, b.B, applied), pi1A);
    tally(rep, "Lambda-Uniq", m.eq_dmor(lhs, b.q), m, "lam(App(q,v)){p} vs q");
  }
  {
    // App-Subst
    auto lamk = m.lam(gamma, b.A, b.B, b.k);
    auto Aphi = m.reindex_dobj(b.A, b.phi);
    auto phiA = lift(m, b.delta, gamma, b.phi, b.A);
    auto Blift = m.reindex_dobj(b.B, phiA);
    auto lhs = m.reindex_dmor(app(m, gamma, b.A, b.B, lamk, b.a), b.phi);
    auto rhs = app(m, b.delta, Aphi, Blift, m.reindex_dmor(lamk, b.phi),
                   m.reindex_dmor(b.a, b.phi));
    tally(rep, "App-Subst", m.eq_dmor(lhs, rhs), m, "App(g,a){phi} vs App(g{phi},a{phi})");
    // Lambda-Subst
    auto l1 = m.reindex_dmor(m.lam(gamma, b.A, b.B, b.k), b.phi);
    auto l2 = m.lam(b.delta, Aphi, Blift, m.reindex_dmor(b.k, phiA));
    tally(rep, "Lambda-Subst", m.eq_dmor(l1, l2), m, "lam(k){phi} vs lam(k{phi+})");
  }

  // Sigma associativity (Triple) and unit law isomorphisms
  {
    auto iso = sigma_assoc(m, gamma, b.A, b.B, b.P);
    auto lr = dobj_compose(m, iso.bwd, iso.fwd);
    auto rl = dobj_compose(m, iso.fwd, iso.bwd);
    auto idl = dobj_id(m, gamma, iso.fwd.dom_dobj);
    auto idr = dobj_id(m, gamma, iso.bwd.dom_dobj);
    tally(rep, "Triple-InvL", dobj_eq(m, lr, idl), m, "Triple^-1 o Triple vs id");
    tally(rep, "Triple-InvR", dobj_eq(m, rl, idr), m, "Triple o Triple^-1 vs id");
  }
  {
    auto isos = unit_law(m, gamma, b.A);
    auto l1 = dobj_compose(m, isos.left_bwd, isos.left_fwd);
    auto l2 = dobj_compose(m, isos.left_fwd, isos.left_bwd);
    auto r1 = dobj_compose(m, isos.right_bwd, isos.right_fwd);
    auto r2 = dobj_compose(m, isos.right_fwd, isos.right_bwd);
    bool left = dobj_eq(m, l1, dobj_id(m, gamma, isos.left_fwd.dom_dobj)) &&
                dobj_eq(m, l2, dobj_id(m, gamma, isos.left_bwd.dom_dobj));
    bool right = dobj_eq(m, r1, dobj_id(m, gamma, isos.right_fwd.dom_dobj)) &&
                 dobj_eq(m, r2, dobj_id(m, gamma, isos.right_bwd.dom_dobj));
    tally(rep, "UnitLaw-L", left, m, "Sigma(1,A{pi1}) ~ A is not an isomorphism");
    tally(rep, "UnitLaw-R", right, m, "Sigma(A,1) ~ A is not an isomorphism");
  }

  // the category of D-objects is a category: identity laws on the projection
  // morphism (Gamma.A, B) -> (Gamma, A), plus associativity with a bang leg
  {
    auto idG = dobj_id(m, gamma, b.A);
    DObjMor<M> pr{gA, gamma, b.B, b.A, m.p1(gamma, b.A),
                  m.reindex_dmor(m.p2(gamma, b.A), m.p1(gA, b.B))};
    auto left = dobj_compose(m, idG, pr);
    auto right = dobj_compose(m, pr, dobj_id(m, gA, b.B));
    bool ok = dobj_eq(m, left, pr) && dobj_eq(m, right, pr);

    auto t = m.terminal();
    DObjMor<M> bangmor{gamma, t, b.A, m.unit(), m.bang(gamma),
                       m.unit_bang(m.comprehend(gamma, b.A))};
    auto gAB = m.comprehend(gA, b.B);
    auto Bp = m.reindex_dobj(b.B, m.p1(gA, b.B));  // over Gamma.A.B
    DObjMor<M> pr2{gAB, gA, Bp, b.B, m.p1(gA, b.B),
                   m.reindex_dmor(m.p2(gA, b.B), m.p1(gAB, Bp))};
    auto assoc1 = dobj_compose(m, bangmor, dobj_compose(m, pr, pr2));
    auto assoc2 = dobj_compose(m, dobj_compose(m, bangmor, pr), pr2);
    ok = ok && dobj_eq(m, assoc1, assoc2);
    tally(rep, "DObj-Cat", ok, m, "category laws for D-object morphisms");
  }
}

// A bundle source: next(i, rng) -> optional<Bundle>; nullopt skips the slot.
template <Model M, class Source>
LawReport check_laws(M& m, Source&& next, const LawOptions& opts = {}) {
  LawReport rep;
  for (const auto& name : law_order()) rep.at(name);
  Rng rng(opts.seed);
  for (int i = 0; i < opts.budget; ++i) {
    auto bundle = next(i, rng);
    if (!bundle) continue;
    check_bundle(m, *bundle, rep);
    if (opts.derived_formers) check_derived(m, *bundle, rep);
  }
  return rep;
}

}  // namespace depcat::cwf

#endif
