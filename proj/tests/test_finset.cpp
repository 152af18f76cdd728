#include "depcat/finset.hpp"

#include "doctest.h"

using namespace depcat;

namespace {

FinSet mk(std::initializer_list<const char*> names) {
  std::vector<Atom> atoms;
  for (const char* n : names) atoms.push_back(Atom::leaf(n));
  return FinSet::of(std::move(atoms));
}

}  // namespace

TEST_CASE("comprehension enumerates semi-dependent pairs") {
  FinSetModel m;
  // X = {0,1}, A_0 = {a}, A_1 = {b,c}  =>  X.A = {(0,a),(1,b),(1,c)}
  const FinSet x = mk({"0", "1"});
  const DFinSet a(x, {mk({"a"}), mk({"b", "c"})});
  const FinSet xa = m.comprehend(x, a);
  CHECK(xa.size() == 3);
  CHECK(xa.contains(Atom::pair(Atom::leaf("0"), Atom::leaf("a"))));
  CHECK(xa.contains(Atom::pair(Atom::leaf("1"), Atom::leaf("b"))));
  CHECK(xa.contains(Atom::pair(Atom::leaf("1"), Atom::leaf("c"))));
}

TEST_CASE("pi fibers enumerate dependent functions") {
  FinSetModel m;
  // Gamma singleton, A = {0,1}, B_(.,0) = {x}, B_(.,1) = {y,z}  =>  |Pi| = 2
  const FinSet g = m.terminal();
  const DFinSet a(g, {mk({"0", "1"})});
  const FinSet ga = m.comprehend(g, a);
  const DFinSet b(ga, {mk({"x"}), mk({"y", "z"})});
  const DFinSet p = m.pi(g, a, b);
  CHECK(p.fiber(Atom::point()).size() == 2);
}

TEST_CASE("dmorphism counting") {
  FinSetModel m;
  const FinSet x = mk({"0", "1"});
  const DFinSet a(x, {mk({"a"}), mk({"b", "c"})});
  CHECK(enumerate_dmorphisms(x, a).size() == 2);  // 1 * 2

  // any empty fiber with nonempty base -> no dependent functions
  const DFinSet empt(x, {mk({}), mk({"b"})});
  CHECK(enumerate_dmorphisms(x, empt).empty());

  // empty base -> exactly one (empty) dependent function
  const FinSet none = mk({});
  CHECK(enumerate_dmorphisms(none, DFinSet(none, {})).size() == 1);
}

TEST_CASE("cardinality limit is an error, not truncation") {
  FinSetModel m;
  m.cardinality_bound = 4;
  const FinSet g = m.terminal();
  const DFinSet a(g, {mk({"0", "1", "2"})});
  const FinSet ga = m.comprehend(g, a);
  const DFinSet b(ga, {mk({"x", "y"}), mk({"x", "y"}), mk({"x", "y"})});
  CHECK_THROWS_AS(m.pi(g, a, b), CardinalityLimit);
}

TEST_CASE("reindexing is functorial on the nose") {
  FinSetModel m;
  const FinSet x = mk({"0", "1", "2"});
  const FinSet y = mk({"0", "1"});
  const DFinSet a(x, {mk({"a"}), mk({"b", "c"}), mk({"d"})});
  const FinFun phi(y, x, {Atom::leaf("2"), Atom::leaf("1")});
  CHECK(m.reindex_dobj(a, m.id(x)) == a);
  const FinFun psi(mk({"q"}), y, {Atom::leaf("1")});
  CHECK(m.reindex_dobj(a, m.compose(phi, psi)) ==
        m.reindex_dobj(m.reindex_dobj(a, phi), psi));
}

TEST_CASE("pair iso is elementwise reassociation") {
  FinSetModel m;
  const FinSet g = mk({"0"});
  const DFinSet a(g, {mk({"x", "y"})});
  const FinSet ga = m.comprehend(g, a);
  const DFinSet b(ga, {mk({"u"}), mk({"v"})});
  auto iso = cwf::pair_iso(m, g, a, b);
  // Pair((0,x),u) = (0,(x,u))
  const Atom in = Atom::pair(Atom::pair(Atom::leaf("0"), Atom::leaf("x")), Atom::leaf("u"));
  const Atom out = Atom::pair(Atom::leaf("0"), Atom::pair(Atom::leaf("x"), Atom::leaf("u")));
  CHECK(iso.fwd.apply(in) == out);
  CHECK(iso.bwd.apply(out) == in);
}

TEST_CASE("lambda and its inverse are mutually inverse bijections") {
  FinSetModel m;
  const FinSet g = mk({"0", "1"});
  const DFinSet a(g, {mk({"x"}), mk({"y", "z"})});
  const FinSet ga = m.comprehend(g, a);
  const DFinSet b(ga, {mk({"u", "v"}), mk({"u"}), mk({"u", "v"})});

  const auto dmors = enumerate_dmorphisms(ga, b);
  const auto points = enumerate_dmorphisms(g, m.pi(g, a, b));
  CHECK(dmors.size() == points.size());
  for (const auto& f : dmors) {
    const auto lamf = m.lam(g, a, b, f);
    CHECK(m.eq_dmor(cwf::lam_inv(m, g, a, b, lamf), f));
  }
  for (const auto& p : points) {
    const auto back = m.lam(g, a, b, cwf::lam_inv(m, g, a, b, p));
    CHECK(m.eq_dmor(back, p));
  }
}

TEST_CASE("random law suite passes") {
  FinSetModel m;
  FinSetGen gen{m};
  cwf::LawOptions opts;
  opts.budget = 120;
  opts.seed = 42;
  auto rep = cwf::check_laws(
      m, [&](int, cwf::Rng& rng) { return gen.bundle(rng); }, opts);
  INFO(rep.to_text());
  CHECK(rep.all_passed());
  for (const auto& l : rep.laws) CHECK(l.checked > 0);
}

TEST_CASE("exhaustive small-shape law sweep passes") {
  FinSetModel m;
  FinSetGen gen{m};
  cwf::LawOptions opts;
  opts.budget = static_cast<int>(gen.exhaustive_count());
  auto rep = cwf::check_laws(
      m, [&](int i, cwf::Rng&) { return gen.exhaustive_bundle(static_cast<std::size_t>(i)); },
      opts);
  INFO(rep.to_text());
  CHECK(rep.all_passed());
}

TEST_CASE("pi-space uniqueness: a permuted second structure is isomorphic") {
  // Build a second Pi-structure by relabeling the canonical one through a
  // bijection (tagging each function atom), then derive the iota/jmath
  // comparison maps per the uniqueness proof and check they are mutually
  // inverse.
  FinSetModel m;
  const FinSet g = mk({"0", "1"});
  const DFinSet a(g, {mk({"x"}), mk({"y", "z"})});
  const FinSet ga = m.comprehend(g, a);
  const DFinSet b(ga, {mk({"u", "v"}), mk({"u"}), mk({"v"})});

  const DFinSet piAB = m.pi(g, a, b);
  // primed structure: fibers tagged with (*, f)
  auto tag = [](const Atom& f) { return Atom::pair(Atom::point(), f); };
  std::vector<FinSet> fibers2;
  for (std::size_t i = 0; i < piAB.base().size(); ++i) {
    std::vector<Atom> atoms;
    for (const auto& f : piAB.fibers()[i].atoms()) atoms.push_back(tag(f));
    fibers2.push_back(FinSet::of(std::move(atoms)));
  }
  const DFinSet piAB2(piAB.base(), fibers2);

  // dev' over Gamma.Pi'.A{pi1}: untag then apply
  const FinSet gp2 = m.comprehend(g, piAB2);
  const DFinSet api1_2 = m.reindex_dobj(a, m.p1(g, piAB2));
  const FinSet dom2 = m.comprehend(gp2, api1_2);
  std::vector<Atom> devvals;
  for (const auto& t : dom2.atoms()) devvals.push_back(t.first().second().second().apply(t.second()));
  const FinFun pi1_2 = m.p1(g, piAB2);
  const FinFun lift2 =
      m.extend(m.compose(pi1_2, m.p1(gp2, api1_2)), m.p2(gp2, api1_2), a);
  const DFinFun dev2(dom2, m.reindex_dobj(b, lift2), devvals);

  // iota := Lam'{pi1}(dev) and jmath := Lam{pi1}(dev') realized concretely:
  // iota tags, jmath untags, pointwise over the base.
  // Check the two lemma equations: iota{<pi1,jmath>} = pi2 and conversely.
  const FinSet gPi = m.comprehend(g, piAB);
  std::vector<Atom> iotavals;
  for (const auto& t : gPi.atoms()) iotavals.push_back(tag(t.second()));
  const DFinFun iota(gPi, m.reindex_dobj(piAB2, m.p1(g, piAB)), iotavals);
  std::vector<Atom> jvals;
  for (const auto& t : gp2.atoms()) jvals.push_back(t.second().second());
  const DFinFun jmath(gp2, m.reindex_dobj(piAB, pi1_2), jvals);

  const FinFun up = m.extend(pi1_2, jmath, piAB);    // Gamma.Pi' -> Gamma.Pi
  const FinFun down = m.extend(m.p1(g, piAB), iota, piAB2);  // Gamma.Pi -> Gamma.Pi'
  CHECK(m.eq_dmor(m.reindex_dmor(iota, up), m.p2(g, piAB2)));
  CHECK(m.eq_dmor(m.reindex_dmor(jmath, down), m.p2(g, piAB)));
  // and dev'{<pi1, iota>+} = dev
  const DFinSet api1 = m.reindex_dobj(a, m.p1(g, piAB));
  const FinFun downLift = m.extend(m.compose(down, m.p1(m.comprehend(g, piAB), api1)),
                                   m.p2(m.comprehend(g, piAB), api1), api1_2);
  CHECK(m.eq_dmor(m.reindex_dmor(dev2, downLift), m.dev(g, a, b)));
}
