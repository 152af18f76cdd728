#include "depcat/finset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace depcat {

// ---- Atom -------------------------------------------------------------------

struct Atom::Node {
  Kind kind;
  std::string name;                              // Leaf
  std::shared_ptr<const Node> a, b;              // Pair
  std::vector<std::pair<Atom, Atom>> graph;      // Fun
};

Atom Atom::leaf(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const Node>> interned;
  auto it = interned.find(name);
  if (it == interned.end()) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->name = name;
    it = interned.emplace(name, std::move(n)).first;
  }
  return Atom(it->second);
}

Atom Atom::point() { return leaf("*"); }

Atom Atom::pair(Atom a, Atom b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->a = a.n_;
  n->b = b.n_;
  return Atom(std::move(n));
}

Atom Atom::fun(std::vector<std::pair<Atom, Atom>> graph) {
  std::sort(graph.begin(), graph.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  auto n = std::make_shared<Node>();
  n->kind = Kind::Fun;
  n->graph = std::move(graph);
  return Atom(std::move(n));
}

Atom::Kind Atom::kind() const { return n_->kind; }
const std::string& Atom::name() const { return n_->name; }

Atom Atom::first() const { return Atom(n_->a); }
Atom Atom::second() const { return Atom(n_->b); }

const std::vector<std::pair<Atom, Atom>>& Atom::graph() const { return n_->graph; }

Atom Atom::apply(const Atom& arg) const {
  for (const auto& [k, v] : n_->graph)
    if (k == arg) return v;
  throw KernelError("function atom applied outside its graph: " + str() + " @ " + arg.str());
}

std::strong_ordering Atom::operator<=>(const Atom& o) const {
  if (n_.get() == o.n_.get()) return std::strong_ordering::equal;
  if (auto c = static_cast<int>(n_->kind) <=> static_cast<int>(o.n_->kind); c != 0) return c;
  switch (n_->kind) {
    case Kind::Leaf:
      return n_->name <=> o.n_->name;
    case Kind::Pair: {
      if (auto c = Atom(n_->a) <=> Atom(o.n_->a); c != 0) return c;
      return Atom(n_->b) <=> Atom(o.n_->b);
    }
    case Kind::Fun: {
      if (auto c = n_->graph.size() <=> o.n_->graph.size(); c != 0) return c;
      for (std::size_t i = 0; i < n_->graph.size(); ++i) {
        if (auto c = n_->graph[i].first <=> o.n_->graph[i].first; c != 0) return c;
        if (auto c = n_->graph[i].second <=> o.n_->graph[i].second; c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::string Atom::str() const {
  switch (n_->kind) {
    case Kind::Leaf:
      return n_->name;
    case Kind::Pair:
      return "(" + Atom(n_->a).str() + "," + Atom(n_->b).str() + ")";
    case Kind::Fun: {
      std::string s = "{";
      for (std::size_t i = 0; i < n_->graph.size(); ++i) {
        if (i) s += ",";
        s += n_->graph[i].first.str() + "->" + n_->graph[i].second.str();
      }
      return s + "}";
    }
  }
  return "?";
}

// ---- FinSet -----------------------------------------------------------------

FinSet FinSet::of(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  FinSet s;
  s.atoms_ = std::move(atoms);
  return s;
}

FinSet FinSet::raw(std::vector<Atom> atoms) {
  FinSet s;
  s.atoms_ = std::move(atoms);
  return s;
}

bool FinSet::contains(const Atom& a) const {
  return std::find(atoms_.begin(), atoms_.end(), a) != atoms_.end();
}

std::size_t FinSet::index_of(const Atom& a) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == a) return i;
  throw KernelError("element " + a.str() + " not in carrier " + str());
}

std::string FinSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) s += ",";
    s += atoms_[i].str();
  }
  return s + "}";
}

// ---- DFinSet ------------------------------------------------------------------

DFinSet::DFinSet(FinSet base, std::vector<FinSet> fibers)
    : base_(std::move(base)), fibers_(std::move(fibers)) {
  if (fibers_.size() != base_.size())
    throw KernelError("family has " + std::to_string(fibers_.size()) +
                      " fibers over a base of size " + std::to_string(base_.size()));
}

const FinSet& DFinSet::fiber(const Atom& x) const { return fibers_[base_.index_of(x)]; }

std::string DFinSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < base_.atoms().size(); ++i) {
    if (i) s += ",";
    s += base_.atoms()[i].str() + ":" + fibers_[i].str();
  }
  return s + "}";
}

// ---- FinFun / DFinFun -----------------------------------------------------------

FinFun::FinFun(FinSet dom, FinSet cod, std::vector<Atom> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
  if (values_.size() != dom_.size()) throw KernelError("function graph arity mismatch");
}

const Atom& FinFun::apply(const Atom& x) const { return values_[dom_.index_of(x)]; }

std::string FinFun::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < dom_.atoms().size(); ++i) {
    if (i) s += ",";
    s += dom_.atoms()[i].str() + "->" + values_[i].str();
  }
  return s + "]";
}

DFinFun::DFinFun(FinSet dom, DFinSet cod, std::vector<Atom> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
  if (values_.size() != dom_.size()) throw KernelError("dependent function graph arity mismatch");
}

const Atom& DFinFun::apply(const Atom& x) const { return values_[dom_.index_of(x)]; }

std::string DFinFun::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < dom_.atoms().size(); ++i) {
    if (i) s += ",";
    s += dom_.atoms()[i].str() + "->" + values_[i].str();
  }
  return s + "]";
}

FinFun compose(const FinFun& g, const FinFun& f) {
  std::vector<Atom> values;
  values.reserve(f.dom().size());
  for (const auto& x : f.dom().atoms()) values.push_back(g.apply(f.apply(x)));
  return FinFun(f.dom(), g.cod(), std::move(values));
}

FinFun identity(const FinSet& x) { return FinFun(x, x, x.atoms()); }

std::vector<FinFun> enumerate_functions(const FinSet& dom, const FinSet& cod, std::size_t bound) {
  if (cod.empty() && !dom.empty()) return {};
  std::size_t count = 1;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    count *= std::max<std::size_t>(cod.size(), 1);
    if (count > bound) throw CardinalityLimit("function space exceeds the cardinality bound");
  }
  std::vector<FinFun> out;
  std::vector<std::size_t> idx(dom.size(), 0);
  for (;;) {
    std::vector<Atom> values;
    values.reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) values.push_back(cod.atoms()[idx[i]]);
    out.push_back(FinFun(dom, cod, std::move(values)));
    if (dom.empty()) break;
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < cod.size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return out;
}

std::vector<DFinFun> enumerate_dmorphisms(const FinSet& dom, const DFinSet& cod, std::size_t bound) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const auto& fib = cod.fiber(dom.atoms()[i]);
    if (fib.empty()) return {};
    count *= fib.size();
    if (count > bound)
      throw CardinalityLimit("dependent function space exceeds the cardinality bound");
  }
  std::vector<DFinFun> out;
  std::vector<std::size_t> idx(dom.size(), 0);
  for (;;) {
    std::vector<Atom> values;
    values.reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i)
      values.push_back(cod.fiber(dom.atoms()[i]).atoms()[idx[i]]);
    out.push_back(DFinFun(dom, cod, std::move(values)));
    if (dom.empty()) break;
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < cod.fiber(dom.atoms()[i]).size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return out;
}

// ---- the model -------------------------------------------------------------------

FinSetModel::Obj FinSetModel::terminal() const { return FinSet::of({Atom::point()}); }

FinSetModel::Mor FinSetModel::bang(const Obj& g) const {
  return FinFun(g, terminal(), std::vector<Atom>(g.size(), Atom::point()));
}

FinSetModel::DObj FinSetModel::reindex_dobj(const DObj& a, const Mor& phi) const {
  std::vector<FinSet> fibers;
  fibers.reserve(phi.dom().size());
  for (const auto& y : phi.dom().atoms()) fibers.push_back(a.fiber(phi.apply(y)));
  return DFinSet(phi.dom(), std::move(fibers));
}

FinSetModel::DMor FinSetModel::reindex_dmor(const DMor& f, const Mor& phi) const {
  std::vector<Atom> values;
  values.reserve(phi.dom().size());
  for (const auto& y : phi.dom().atoms()) values.push_back(f.apply(phi.apply(y)));
  return DFinFun(phi.dom(), reindex_dobj(f.cod(), phi), std::move(values));
}

FinSetModel::Obj FinSetModel::comprehend(const Obj& g, const DObj& a) const {
  std::vector<Atom> atoms;
  for (const auto& x : g.atoms())
    for (const auto& v : a.fiber(x).atoms()) atoms.push_back(Atom::pair(x, v));
  return FinSet::of(std::move(atoms));
}

FinSetModel::Mor FinSetModel::p1(const Obj& g, const DObj& a) const {
  const Obj ga = comprehend(g, a);
  std::vector<Atom> values;
  values.reserve(ga.size());
  for (const auto& p : ga.atoms()) values.push_back(p.first());
  return FinFun(ga, g, std::move(values));
}

FinSetModel::DMor FinSetModel::p2(const Obj& g, const DObj& a) const {
  const Obj ga = comprehend(g, a);
  std::vector<Atom> values;
  values.reserve(ga.size());
  for (const auto& p : ga.atoms()) values.push_back(p.second());
  return DFinFun(ga, reindex_dobj(a, p1(g, a)), std::move(values));
}

FinSetModel::Mor FinSetModel::extend(const Mor& phi, const DMor& gg, const DObj& a) const {
  std::vector<Atom> values;
  values.reserve(phi.dom().size());
  for (const auto& y : phi.dom().atoms()) values.push_back(Atom::pair(phi.apply(y), gg.apply(y)));
  return FinFun(phi.dom(), comprehend(phi.cod(), a), std::move(values));
}

FinSetModel::DObj FinSetModel::unit() const { return DFinSet(terminal(), {terminal()}); }

FinSetModel::DMor FinSetModel::unit_bang(const Obj& g) const {
  return DFinFun(g, reindex_dobj(unit(), bang(g)), std::vector<Atom>(g.size(), Atom::point()));
}

FinSetModel::DObj FinSetModel::sigma(const Obj& g, const DObj& a, const DObj& b) const {
  std::vector<FinSet> fibers;
  fibers.reserve(g.size());
  for (const auto& x : g.atoms()) {
    std::vector<Atom> pairs;
    for (const auto& av : a.fiber(x).atoms())
      for (const auto& bv : b.fiber(Atom::pair(x, av)).atoms())
        pairs.push_back(Atom::pair(av, bv));
    fibers.push_back(FinSet::of(std::move(pairs)));
  }
  return DFinSet(g, std::move(fibers));
}

FinSetModel::DMor FinSetModel::sigma_p1(const Obj& g, const DObj& a, const DObj& b) const {
  const DObj s = sigma(g, a, b);
  const Obj gs = comprehend(g, s);
  std::vector<Atom> values;
  values.reserve(gs.size());
  for (const auto& p : gs.atoms()) values.push_back(p.second().first());
  return DFinFun(gs, reindex_dobj(a, p1(g, s)), std::move(values));
}

FinSetModel::DMor FinSetModel::sigma_p2(const Obj& g, const DObj& a, const DObj& b) const {
  const DObj s = sigma(g, a, b);
  const Obj gs = comprehend(g, s);
  std::vector<Atom> values;
  values.reserve(gs.size());
  for (const auto& p : gs.atoms()) values.push_back(p.second().second());
  const Mor mediating = extend(p1(g, s), sigma_p1(g, a, b), a);
  return DFinFun(gs, reindex_dobj(b, mediating), std::move(values));
}

FinSetModel::DMor FinSetModel::sigma_pair(const Obj& g, const DObj& a, const DObj& b,
                                          const Mor& phi, const DMor& gg, const DMor& hh) const {
  std::vector<Atom> values;
  values.reserve(phi.dom().size());
  for (const auto& y : phi.dom().atoms()) values.push_back(Atom::pair(gg.apply(y), hh.apply(y)));
  return DFinFun(phi.dom(), reindex_dobj(sigma(g, a, b), phi), std::move(values));
}

FinSetModel::DObj FinSetModel::pi(const Obj& g, const DObj& a, const DObj& b) const {
  std::vector<FinSet> fibers;
  fibers.reserve(g.size());
  for (const auto& x : g.atoms()) {
    const FinSet& ax = a.fiber(x);
    std::size_t count = 1;
    bool empty = false;
    for (const auto& av : ax.atoms()) {
      const std::size_t fs = b.fiber(Atom::pair(x, av)).size();
      if (fs == 0) empty = true;
      count *= std::max<std::size_t>(fs, 1);
      if (count > cardinality_bound)
        throw CardinalityLimit("Pi fiber exceeds the cardinality bound at " + x.str());
    }
    std::vector<Atom> funs;
    if (!empty) {
      std::vector<std::size_t> idx(ax.size(), 0);
      for (;;) {
        std::vector<std::pair<Atom, Atom>> graph;
        graph.reserve(ax.size());
        for (std::size_t i = 0; i < ax.size(); ++i) {
          const FinSet& fib = b.fiber(Atom::pair(x, ax.atoms()[i]));
          graph.emplace_back(ax.atoms()[i], fib.atoms()[idx[i]]);
        }
        funs.push_back(Atom::fun(std::move(graph)));
        if (ax.empty()) break;
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
          if (++idx[i] < b.fiber(Atom::pair(x, ax.atoms()[i])).size()) break;
          idx[i] = 0;
        }
        if (i == idx.size()) break;
      }
    }
    fibers.push_back(FinSet::of(std::move(funs)));
  }
  return DFinSet(g, std::move(fibers));
}

FinSetModel::DMor FinSetModel::dev(const Obj& g, const DObj& a, const DObj& b) const {
  const DObj piAB = pi(g, a, b);
  const Obj gp = comprehend(g, piAB);
  const Mor pi1 = p1(g, piAB);
  const DObj api1 = reindex_dobj(a, pi1);
  const Obj dom = comprehend(gp, api1);
  std::vector<Atom> values;
  values.reserve(dom.size());
  for (const auto& t : dom.atoms()) values.push_back(t.first().second().apply(t.second()));
  const Mor lift = extend(compose(pi1, p1(gp, api1)), p2(gp, api1), a);
  return DFinFun(dom, reindex_dobj(b, lift), std::move(values));
}

FinSetModel::DMor FinSetModel::lam(const Obj& g, const DObj& a, const DObj& b, const DMor& f) const {
  std::vector<Atom> values;
  values.reserve(g.size());
  for (const auto& x : g.atoms()) {
    std::vector<std::pair<Atom, Atom>> graph;
    graph.reserve(a.fiber(x).size());
    for (const auto& av : a.fiber(x).atoms()) graph.emplace_back(av, f.apply(Atom::pair(x, av)));
    values.push_back(Atom::fun(std::move(graph)));
  }
  return DFinFun(g, pi(g, a, b), std::move(values));
}

// ---- generators -----------------------------------------------------------------

namespace {

int gpick(cwf::Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const std::vector<Atom>& atom_pool() {
  static const std::vector<Atom> pool = {Atom::leaf("a"), Atom::leaf("b"), Atom::leaf("c"),
                                         Atom::leaf("d"), Atom::leaf("e"), Atom::leaf("f")};
  return pool;
}

// Fiber-size templates used by the deterministic exhaustive sweep.
std::vector<FinSet> templated_fibers(const FinSet& base, int pattern) {
  std::vector<FinSet> fibers;
  fibers.reserve(base.size());
  const auto& pool = atom_pool();
  for (std::size_t i = 0; i < base.size(); ++i) {
    int size = 1;
    switch (pattern) {
      case 0: size = 1; break;
      case 1: size = 2; break;
      case 2: size = static_cast<int>(i % 3) + 1; break;
      default: size = (i % 2 == 0) ? 3 : 1; break;
    }
    std::vector<Atom> atoms;
    for (int k = 0; k < size; ++k) atoms.push_back(pool[static_cast<std::size_t>(k)]);
    fibers.push_back(FinSet::of(std::move(atoms)));
  }
  return fibers;
}

}  // namespace

FinSet FinSetGen::random_set(cwf::Rng& rng, int max_size, int min_size) const {
  const int n = gpick(rng, min_size, max_size);
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back(atom_pool()[static_cast<std::size_t>(i)]);
  return FinSet::of(std::move(atoms));
}

DFinSet FinSetGen::random_family(cwf::Rng& rng, const FinSet& base, int min_fiber) const {
  std::vector<FinSet> fibers;
  fibers.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    fibers.push_back(random_set(rng, max_fiber, min_fiber));
  return DFinSet(base, std::move(fibers));
}

FinFun FinSetGen::random_fun(cwf::Rng& rng, const FinSet& dom, const FinSet& cod) const {
  if (cod.empty() && !dom.empty()) throw KernelError("no function into the empty set");
  std::vector<Atom> values;
  values.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i)
    values.push_back(
        cod.atoms()[static_cast<std::size_t>(gpick(rng, 0, static_cast<int>(cod.size()) - 1))]);
  return FinFun(dom, cod, std::move(values));
}

std::optional<DFinFun> FinSetGen::random_dfun(cwf::Rng& rng, const FinSet& dom,
                                              const DFinSet& cod) const {
  std::vector<Atom> values;
  values.reserve(dom.size());
  for (const auto& x : dom.atoms()) {
    const FinSet& fib = cod.fiber(x);
    if (fib.empty()) return std::nullopt;
    values.push_back(
        fib.atoms()[static_cast<std::size_t>(gpick(rng, 0, static_cast<int>(fib.size()) - 1))]);
  }
  return DFinFun(dom, cod, std::move(values));
}

std::optional<cwf::Bundle<FinSetModel>> FinSetGen::bundle(cwf::Rng& rng) const {
  using B = cwf::Bundle<FinSetModel>;
  FinSetModel& m = model;
  for (int attempt = 0; attempt < 24; ++attempt) {
    B b;
    const int min_fiber = allow_empty_fibers && gpick(rng, 0, 4) == 0 ? 0 : 1;
    b.gamma = random_set(rng, max_base);
    b.delta = random_set(rng, max_base);
    b.theta = random_set(rng, max_base);
    if (b.gamma.empty() && (!b.delta.empty() || !b.theta.empty())) continue;  // no maps into {}
    b.phi = random_fun(rng, b.delta, b.gamma);
    b.psi = random_fun(rng, b.theta, b.delta);
    b.A = random_family(rng, b.gamma, min_fiber);
    const FinSet gA = m.comprehend(b.gamma, b.A);
    b.B = random_family(rng, gA, min_fiber);
    b.C = random_family(rng, b.gamma, 1);
    b.D = random_family(rng, b.gamma, 1);
    const DFinSet sAB = m.sigma(b.gamma, b.A, b.B);
    b.P = random_family(rng, m.comprehend(b.gamma, sAB), 1);

    auto f = random_dfun(rng, b.gamma, b.A);
    auto a = random_dfun(rng, b.gamma, b.A);
    auto g = random_dfun(rng, b.delta, m.reindex_dobj(b.A, b.phi));
    if (!f || !a || !g) continue;
    auto h = random_dfun(rng, b.delta, m.reindex_dobj(b.B, m.extend(b.phi, *g, b.A)));
    auto k = random_dfun(rng, gA, b.B);
    if (!h || !k) continue;
    b.f = *f;
    b.a = *a;
    b.g = *g;
    b.h = *h;
    b.k = *k;

    const DFinSet piAB = m.pi(b.gamma, b.A, b.B);
    auto q = random_dfun(rng, gA, m.reindex_dobj(piAB, m.p1(b.gamma, b.A)));
    if (!q) continue;
    b.q = *q;

    auto pair = cwf::pair_iso(m, b.gamma, b.A, b.B);
    auto fP = random_dfun(rng, m.comprehend(gA, b.B), m.reindex_dobj(b.P, pair.fwd));
    auto gP = random_dfun(rng, m.comprehend(b.gamma, sAB), b.P);
    if (!fP || !gP) continue;
    b.fP = *fP;
    b.gP = *gP;

    const FinSet gC = m.comprehend(b.gamma, b.C);
    const FinFun pi1C = m.p1(b.gamma, b.C);
    const DFinSet Api1 = m.reindex_dobj(b.A, pi1C);
    const FinFun pi1CA = cwf::lift(m, gC, b.gamma, pi1C, b.A);
    auto hC = random_dfun(rng, m.comprehend(gC, Api1), m.reindex_dobj(b.B, pi1CA));
    if (!hC) continue;
    b.hC = *hC;
    auto gD =
        random_dfun(rng, m.comprehend(b.gamma, b.D), m.reindex_dobj(b.C, m.p1(b.gamma, b.D)));
    if (!gD) continue;
    b.gD = *gD;

    try {
      b.sigma_candidates =
          enumerate_dmorphisms(b.delta, m.reindex_dobj(sAB, b.phi), uniqueness_cap);
      b.pi_candidates = enumerate_dmorphisms(b.gamma, piAB, uniqueness_cap);
      b.unit_candidates = enumerate_dmorphisms(
          b.gamma, m.reindex_dobj(m.unit(), m.bang(b.gamma)), uniqueness_cap);
      b.terminal_candidates = enumerate_functions(b.gamma, m.terminal(), uniqueness_cap);
    } catch (const CardinalityLimit&) {
      b.sigma_candidates.clear();
      b.pi_candidates.clear();
    }
    return b;
  }
  return std::nullopt;
}

std::size_t FinSetGen::exhaustive_count() const {
  std::size_t total = 0;
  for (int gs = 0; gs <= 3; ++gs) {
    std::size_t ap = 1;
    for (int i = 0; i < gs; ++i) ap *= 3;
    total += ap * 4 * 3 * 2;
  }
  return total;
}

std::optional<cwf::Bundle<FinSetModel>> FinSetGen::exhaustive_bundle(std::size_t index) const {
  using B = cwf::Bundle<FinSetModel>;
  FinSetModel& m = model;
  // decode index -> (gamma size, A pattern, B pattern, delta mode, CD pattern)
  int gs = 0;
  std::size_t ap = 1;
  std::size_t rest = index;
  for (;; ++gs) {
    if (gs > 3) return std::nullopt;
    ap = 1;
    for (int i = 0; i < gs; ++i) ap *= 3;
    const std::size_t block = ap * 4 * 3 * 2;
    if (rest < block) break;
    rest -= block;
  }
  const std::size_t apat = rest % ap;
  rest /= ap;
  const int bpat = static_cast<int>(rest % 4);
  rest /= 4;
  const int dmode = static_cast<int>(rest % 3);
  rest /= 3;
  const int cdpat = static_cast<int>(rest % 2);

  B b;
  const auto& pool = atom_pool();
  {
    std::vector<Atom> atoms;
    for (int i = 0; i < gs; ++i) atoms.push_back(pool[static_cast<std::size_t>(i)]);
    b.gamma = FinSet::of(std::move(atoms));
  }
  {
    std::vector<FinSet> fibers;
    std::size_t code = apat;
    for (int i = 0; i < gs; ++i) {
      const int size = static_cast<int>(code % 3) + 1;
      code /= 3;
      std::vector<Atom> atoms;
      for (int k = 0; k < size; ++k) atoms.push_back(pool[static_cast<std::size_t>(k)]);
      fibers.push_back(FinSet::of(std::move(atoms)));
    }
    b.A = DFinSet(b.gamma, std::move(fibers));
  }
  const FinSet gA = m.comprehend(b.gamma, b.A);
  b.B = DFinSet(gA, templated_fibers(gA, bpat));
  b.C = DFinSet(b.gamma, templated_fibers(b.gamma, cdpat == 0 ? 1 : 2));
  b.D = DFinSet(b.gamma, templated_fibers(b.gamma, cdpat == 0 ? 2 : 0));
  const DFinSet sAB = m.sigma(b.gamma, b.A, b.B);
  b.P = DFinSet(m.comprehend(b.gamma, sAB),
                templated_fibers(m.comprehend(b.gamma, sAB), (bpat + 1) % 4));

  switch (dmode) {
    case 0:
      b.delta = b.gamma;
      b.phi = m.id(b.gamma);
      b.theta = b.gamma;
      b.psi = m.id(b.gamma);
      break;
    case 1: {
      if (b.gamma.empty()) {
        b.delta = b.gamma;
        b.phi = m.id(b.gamma);
      } else {
        b.delta = FinSet::of({Atom::leaf("d")});
        b.phi = FinFun(b.delta, b.gamma, {b.gamma.atoms().front()});
      }
      b.theta = b.delta;
      b.psi = m.id(b.delta);
      break;
    }
    default: {
      b.delta = b.gamma;
      b.phi = b.gamma.empty() ? m.id(b.gamma)
                              : FinFun(b.gamma, b.gamma,
                                       std::vector<Atom>(b.gamma.size(), b.gamma.atoms().back()));
      b.theta = b.gamma;
      b.psi = m.id(b.gamma);
      break;
    }
  }

  cwf::Rng rng(0x5eed0000u + static_cast<std::uint64_t>(index));
  auto pick_dfun = [&](const FinSet& dom, const DFinSet& cod) { return random_dfun(rng, dom, cod); };
  auto f = pick_dfun(b.gamma, b.A);
  auto a = pick_dfun(b.gamma, b.A);
  auto g = pick_dfun(b.delta, m.reindex_dobj(b.A, b.phi));
  if (!f || !a || !g) return std::nullopt;
  b.f = *f;
  b.a = *a;
  b.g = *g;
  auto h = pick_dfun(b.delta, m.reindex_dobj(b.B, m.extend(b.phi, b.g, b.A)));
  auto k = pick_dfun(gA, b.B);
  if (!h || !k) return std::nullopt;
  b.h = *h;
  b.k = *k;
  const DFinSet piAB = m.pi(b.gamma, b.A, b.B);
  auto q = pick_dfun(gA, m.reindex_dobj(piAB, m.p1(b.gamma, b.A)));
  if (!q) return std::nullopt;
  b.q = *q;
  auto pair = cwf::pair_iso(m, b.gamma, b.A, b.B);
  auto fP = pick_dfun(m.comprehend(gA, b.B), m.reindex_dobj(b.P, pair.fwd));
  auto gP = pick_dfun(m.comprehend(b.gamma, sAB), b.P);
  if (!fP || !gP) return std::nullopt;
  b.fP = *fP;
  b.gP = *gP;
  const FinSet gC = m.comprehend(b.gamma, b.C);
  const FinFun pi1C = m.p1(b.gamma, b.C);
  const DFinSet Api1 = m.reindex_dobj(b.A, pi1C);
  const FinFun pi1CA = cwf::lift(m, gC, b.gamma, pi1C, b.A);
  auto hC = pick_dfun(m.comprehend(gC, Api1), m.reindex_dobj(b.B, pi1CA));
  auto gD = pick_dfun(m.comprehend(b.gamma, b.D), m.reindex_dobj(b.C, m.p1(b.gamma, b.D)));
  if (!hC || !gD) return std::nullopt;
  b.hC = *hC;
  b.gD = *gD;

  try {
    b.sigma_candidates = enumerate_dmorphisms(b.delta, m.reindex_dobj(sAB, b.phi), uniqueness_cap);
    b.pi_candidates = enumerate_dmorphisms(b.gamma, piAB, uniqueness_cap);
    b.unit_candidates =
        enumerate_dmorphisms(b.gamma, m.reindex_dobj(m.unit(), m.bang(b.gamma)), uniqueness_cap);
    b.terminal_candidates = enumerate_functions(b.gamma, m.terminal(), uniqueness_cap);
  } catch (const CardinalityLimit&) {
    b.sigma_candidates.clear();
    b.pi_candidates.clear();
  }
  return b;
}

}  // namespace depcat
