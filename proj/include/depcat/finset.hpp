#ifndef DEPCAT_FINSET_HPP
#define DEPCAT_FINSET_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "depcat/cwf.hpp"
#include "depcat/syntax.hpp"

// The Sets model restricted to finite carriers, implemented by explicit
// enumeration.  Carriers are canonically ordered so the strict equations hold
// as structural equalities.

namespace depcat {

struct CardinalityLimit : KernelError {
  using KernelError::KernelError;
};

// An element: an interned leaf, a canonical pair, or a finite function graph.
class Atom {
 public:
  enum class Kind { Leaf, Pair, Fun };

  static Atom leaf(const std::string& name);
  static Atom point();  // the terminal element "*"
  static Atom pair(Atom a, Atom b);
  static Atom fun(std::vector<std::pair<Atom, Atom>> graph);  // sorted by input

  Kind kind() const;
  const std::string& name() const;          // Leaf
  Atom first() const;                       // Pair
  Atom second() const;                      // Pair
  const std::vector<std::pair<Atom, Atom>>& graph() const;  // Fun
  Atom apply(const Atom& arg) const;        // Fun lookup

  std::strong_ordering operator<=>(const Atom& o) const;
  bool operator==(const Atom& o) const { return (*this <=> o) == std::strong_ordering::equal; }

  std::string str() const;

 private:
  struct Node;
  explicit Atom(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Finite set with a canonical (sorted, duplicate-free) carrier.
class FinSet {
 public:
  FinSet() = default;
  static FinSet of(std::vector<Atom> atoms);            // canonicalizes
  static FinSet raw(std::vector<Atom> atoms);           // keeps order (mutants only)

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool contains(const Atom& a) const;
  std::size_t index_of(const Atom& a) const;  // throws when absent

  bool operator==(const FinSet& o) const { return atoms_ == o.atoms_; }
  std::string str() const;

 private:
  std::vector<Atom> atoms_;
};

// Indexed family of finite sets, total on its base.
class DFinSet {
 public:
  DFinSet() = default;
  DFinSet(FinSet base, std::vector<FinSet> fibers);

  const FinSet& base() const { return base_; }
  const FinSet& fiber(const Atom& x) const;
  const std::vector<FinSet>& fibers() const { return fibers_; }

  bool operator==(const DFinSet& o) const { return base_ == o.base_ && fibers_ == o.fibers_; }
  std::string str() const;

 private:
  FinSet base_;
  std::vector<FinSet> fibers_;
};

// Function as an explicit graph, entries aligned with the domain carrier.
class FinFun {
 public:
  FinFun() = default;
  FinFun(FinSet dom, FinSet cod, std::vector<Atom> values);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const Atom& apply(const Atom& x) const;
  const std::vector<Atom>& values() const { return values_; }

  bool operator==(const FinFun& o) const { return dom_ == o.dom_ && values_ == o.values_; }
  std::string str() const;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Atom> values_;
};

// Dependent function: f(x) in A_x for all x.
class DFinFun {
 public:
  DFinFun() = default;
  DFinFun(FinSet dom, DFinSet cod, std::vector<Atom> values);

  const FinSet& dom() const { return dom_; }
  const DFinSet& cod() const { return cod_; }
  const Atom& apply(const Atom& x) const;
  const std::vector<Atom>& values() const { return values_; }

  bool operator==(const DFinFun& o) const { return dom_ == o.dom_ && values_ == o.values_; }
  std::string str() const;

 private:
  FinSet dom_;
  DFinSet cod_;
  std::vector<Atom> values_;
};

FinFun compose(const FinFun& g, const FinFun& f);
FinFun identity(const FinSet& x);

// Exhaustive, duplicate-free enumerations (throw CardinalityLimit past the bound).
std::vector<FinFun> enumerate_functions(const FinSet& dom, const FinSet& cod,
                                        std::size_t bound = 1'000'000);
std::vector<DFinFun> enumerate_dmorphisms(const FinSet& dom, const DFinSet& cod,
                                          std::size_t bound = 1'000'000);

// The model itself: the strict-CwD interface over finite sets.
class FinSetModel {
 public:
  using Obj = FinSet;
  using Mor = FinFun;
  using DObj = DFinSet;
  using DMor = DFinFun;

  std::size_t cardinality_bound = 1'000'000;

  Obj terminal() const;
  Mor id(const Obj& g) const { return identity(g); }
  Mor compose(const Mor& g, const Mor& f) const { return depcat::compose(g, f); }
  Mor bang(const Obj& g) const;

  DObj reindex_dobj(const DObj& a, const Mor& phi) const;
  DMor reindex_dmor(const DMor& f, const Mor& phi) const;

  Obj comprehend(const Obj& g, const DObj& a) const;
  Mor p1(const Obj& g, const DObj& a) const;
  DMor p2(const Obj& g, const DObj& a) const;
  Mor extend(const Mor& phi, const DMor& g, const DObj& a) const;

  DObj unit() const;
  DMor unit_bang(const Obj& g) const;

  DObj sigma(const Obj& g, const DObj& a, const DObj& b) const;
  DMor sigma_p1(const Obj& g, const DObj& a, const DObj& b) const;
  DMor sigma_p2(const Obj& g, const DObj& a, const DObj& b) const;
  DMor sigma_pair(const Obj& g, const DObj& a, const DObj& b, const Mor& phi, const DMor& gg,
                  const DMor& hh) const;

  DObj pi(const Obj& g, const DObj& a, const DObj& b) const;
  DMor dev(const Obj& g, const DObj& a, const DObj& b) const;
  DMor lam(const Obj& g, const DObj& a, const DObj& b, const DMor& f) const;

  bool eq_obj(const Obj& x, const Obj& y) const { return x == y; }
  bool eq_mor(const Mor& x, const Mor& y) const { return x == y; }
  bool eq_dobj(const DObj& x, const DObj& y) const { return x == y; }
  bool eq_dmor(const DMor& x, const DMor& y) const { return x == y; }

  std::string show_obj(const Obj& x) const { return x.str(); }
  std::string show_mor(const Mor& x) const { return x.str(); }
  std::string show_dobj(const DObj& x) const { return x.str(); }
  std::string show_dmor(const DMor& x) const { return x.str(); }
};

static_assert(cwf::Model<FinSetModel>);

// ---- instance generation for the law harness -------------------------------------

struct FinSetGen {
  FinSetModel& model;
  int max_base = 3;
  int max_fiber = 3;
  bool allow_empty_fibers = false;
  std::size_t uniqueness_cap = 512;  // enumerate candidate sets up to this size

  FinSet random_set(cwf::Rng& rng, int max_size, int min_size = 0) const;
  DFinSet random_family(cwf::Rng& rng, const FinSet& base, int min_fiber) const;
  FinFun random_fun(cwf::Rng& rng, const FinSet& dom, const FinSet& cod) const;
  std::optional<DFinFun> random_dfun(cwf::Rng& rng, const FinSet& dom, const DFinSet& cod) const;

  // Builds a full law-instance bundle; nullopt when sampling hit a dead end.
  std::optional<cwf::Bundle<FinSetModel>> bundle(cwf::Rng& rng) const;

  // Deterministic small-shape bundle for the exhaustive sweep; index selects
  // the shape, morphism data is derived deterministically from it.
  std::optional<cwf::Bundle<FinSetModel>> exhaustive_bundle(std::size_t index) const;
  std::size_t exhaustive_count() const;
};

}  // namespace depcat

#endif
