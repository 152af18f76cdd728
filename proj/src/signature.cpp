#include "depcat/signature.hpp"

#include <algorithm>
#include <set>

#include "depcat/checker.hpp"
#include "depcat/parser.hpp"

namespace depcat {

void Signature::add_type_constant(const std::string& name, Ctx telescope) {
  if (type_consts_.count(name) || term_consts_.count(name))
    throw KernelError("duplicate constant '" + name + "'");
  type_consts_[name] = Format{std::move(telescope), std::nullopt};
  events_.push_back(Event{Event::Kind::TypeConst, name, 0});
}

void Signature::add_term_constant(const std::string& name, Ctx telescope, TyRef codomain) {
  if (type_consts_.count(name) || term_consts_.count(name))
    throw KernelError("duplicate constant '" + name + "'");
  term_consts_[name] = Format{std::move(telescope), std::move(codomain)};
  events_.push_back(Event{Event::Kind::TermConst, name, 0});
}

void Signature::add_axiom(Axiom ax) {
  axioms_.push_back(std::move(ax));
  events_.push_back(Event{Event::Kind::Axiom, "", axioms_.size() - 1});
}

const Format* Signature::find_type_constant(const std::string& name) const {
  auto it = type_consts_.find(name);
  return it == type_consts_.end() ? nullptr : &it->second;
}

const Format* Signature::find_term_constant(const std::string& name) const {
  auto it = term_consts_.find(name);
  return it == term_consts_.end() ? nullptr : &it->second;
}

bool Signature::has_unguarded_axioms() const {
  return std::any_of(axioms_.begin(), axioms_.end(), [](const Axiom& a) { return !a.guarded; });
}

namespace {

std::set<int> free_index_set(const TmRef& t) {
  std::vector<int> v;
  free_indices(t, v);
  return std::set<int>(v.begin(), v.end());
}
std::set<int> free_index_set(const TyRef& t) {
  std::vector<int> v;
  free_indices(t, v);
  return std::set<int>(v.begin(), v.end());
}

template <class Node>
bool guard_holds(const Node& lhs, const Node& rhs, std::string* why) {
  const auto fl = free_index_set(lhs);
  const auto fr = free_index_set(rhs);
  if (!std::includes(fl.begin(), fl.end(), fr.begin(), fr.end())) {
    *why = "right-hand side mentions variables absent from the left-hand side";
    return false;
  }
  if (tree_size(rhs) > tree_size(lhs)) {
    *why = "right-hand side is structurally larger than the left-hand side";
    return false;
  }
  return true;
}

template <class Node>
bool orientable(const Node& lhs, const Node& rhs, std::string* why) {
  const auto fl = free_index_set(lhs);
  const auto fr = free_index_set(rhs);
  if (!std::includes(fl.begin(), fl.end(), fr.begin(), fr.end())) {
    *why = "right-hand side mentions variables absent from the left-hand side; "
           "the axiom cannot be used as a left-to-right rewrite";
    return false;
  }
  return true;
}

}  // namespace

ValidatedSignature validate_signature(const Signature& sig, const ValidationOptions& opts) {
  auto acc = std::make_shared<Signature>();
  std::size_t axiom_count = 0;
  for (const auto& ev : sig.events()) {
    // Check against the prefix declared so far.
    ValidatedSignature prefix(acc, opts);
    Checker chk(prefix);
    switch (ev.kind) {
      case Signature::Event::Kind::TypeConst: {
        const Format* fmt = sig.find_type_constant(ev.name);
        Verdict v = chk.check_ctx(fmt->telescope);
        if (!v.ok()) throw IllFormedFormat(ev.name, "telescope: " + v.reason);
        acc->add_type_constant(ev.name, fmt->telescope);
        break;
      }
      case Signature::Event::Kind::TermConst: {
        const Format* fmt = sig.find_term_constant(ev.name);
        Verdict v = chk.check_ctx(fmt->telescope);
        if (!v.ok()) throw IllFormedFormat(ev.name, "telescope: " + v.reason);
        Verdict vc = chk.check_type(fmt->telescope, *fmt->codomain);
        if (!vc.ok()) throw IllFormedFormat(ev.name, "codomain: " + vc.reason);
        acc->add_term_constant(ev.name, fmt->telescope, *fmt->codomain);
        break;
      }
      case Signature::Event::Kind::Axiom: {
        Axiom ax = sig.axioms()[ev.axiom_idx];
        const std::size_t index = axiom_count++;
        Verdict v = chk.check_ctx(ax.telescope);
        if (!v.ok()) throw IllTypedAxiom(index, "telescope: " + v.reason);
        std::string why;
        if (ax.is_type_eq) {
          Verdict vl = chk.check_type(ax.telescope, ax.lhs_ty);
          if (!vl.ok()) throw IllTypedAxiom(index, "left-hand side: " + vl.reason);
          Verdict vr = chk.check_type(ax.telescope, ax.rhs_ty);
          if (!vr.ok()) throw IllTypedAxiom(index, "right-hand side: " + vr.reason);
          if (!orientable(ax.lhs_ty, ax.rhs_ty, &why)) throw IllTypedAxiom(index, why);
          ax.guarded = guard_holds(ax.lhs_ty, ax.rhs_ty, &why);
          if (!ax.guarded && !opts.trust_axioms)
            throw IllTypedAxiom(index, why + " (pass --trust-axioms to accept with fuel-bounded rewriting)");
          if (!std::holds_alternative<TyConst>(ax.lhs_ty->node)) {
            // Rewriting at non-constant type heads makes conversion fuel-bounded.
            ax.guarded = false;
            if (!opts.trust_axioms)
              throw IllTypedAxiom(index,
                                  "type axiom left-hand side is not constant-headed "
                                  "(pass --trust-axioms to accept with fuel-bounded rewriting)");
          }
        } else {
          Verdict vt = chk.check_type(ax.telescope, ax.at);
          if (!vt.ok()) throw IllTypedAxiom(index, "classifier: " + vt.reason);
          Verdict vl = chk.check_term(ax.telescope, ax.lhs_tm, ax.at);
          if (!vl.ok()) throw IllTypedAxiom(index, "left-hand side: " + vl.reason);
          Verdict vr = chk.check_term(ax.telescope, ax.rhs_tm, ax.at);
          if (!vr.ok()) throw IllTypedAxiom(index, "right-hand side: " + vr.reason);
          if (!orientable(ax.lhs_tm, ax.rhs_tm, &why)) throw IllTypedAxiom(index, why);
          ax.guarded = guard_holds(ax.lhs_tm, ax.rhs_tm, &why);
          if (!ax.guarded && !opts.trust_axioms)
            throw IllTypedAxiom(index, why + " (pass --trust-axioms to accept with fuel-bounded rewriting)");
        }
        acc->add_axiom(std::move(ax));
        break;
      }
    }
  }
  return ValidatedSignature(std::move(acc), opts);
}

}  // namespace depcat
