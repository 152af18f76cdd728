#ifndef DEPCAT_SIGNATURE_HPP
#define DEPCAT_SIGNATURE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "depcat/syntax.hpp"

namespace depcat {

// Telescopic format of a constant: domain sorts over a telescope, plus a
// codomain sort for term-constants.
struct Format {
  Ctx telescope;
  std::optional<TyRef> codomain;  // present iff term-constant

  bool is_term_constant() const { return codomain.has_value(); }
};

struct Axiom {
  Ctx telescope;
  bool is_type_eq = false;
  TyRef lhs_ty, rhs_ty;
  TmRef lhs_tm, rhs_tm;
  TyRef at;      // classifier of a term axiom
  bool guarded = true;  // passes the termination guard (fv and size checks)
};

// A generalized-MLTT signature: constants with formats plus equational axioms.
class Signature {
 public:
  void add_type_constant(const std::string& name, Ctx telescope);
  void add_term_constant(const std::string& name, Ctx telescope, TyRef codomain);
  void add_axiom(Axiom ax);

  const Format* find_type_constant(const std::string& name) const;
  const Format* find_term_constant(const std::string& name) const;
  const std::vector<Axiom>& axioms() const { return axioms_; }

  // Declaration events in insertion order, for prefix-wise validation.
  struct Event {
    enum class Kind { TypeConst, TermConst, Axiom } kind;
    std::string name;       // constant events
    std::size_t axiom_idx;  // axiom events
  };
  const std::vector<Event>& events() const { return events_; }

  bool has_unguarded_axioms() const;
  bool empty() const { return events_.empty(); }

 private:
  std::map<std::string, Format> type_consts_;
  std::map<std::string, Format> term_consts_;
  std::vector<Axiom> axioms_;
  std::vector<Event> events_;
};

struct ValidationOptions {
  bool trust_axioms = false;
  int fuel = 1000;  // rewrite steps per normalization
};

struct IllFormedFormat : KernelError {
  IllFormedFormat(const std::string& constant, const std::string& reason)
      : KernelError("ill-formed format for '" + constant + "': " + reason) {}
};
struct IllTypedAxiom : KernelError {
  IllTypedAxiom(std::size_t index, const std::string& reason)
      : KernelError("ill-typed axiom #" + std::to_string(index) + ": " + reason) {}
};

// Sealed handle: can only be produced by validate_signature.
class ValidatedSignature {
 public:
  const Signature& sig() const { return *sig_; }
  const ValidationOptions& options() const { return opts_; }
  bool trusted() const { return opts_.trust_axioms; }
  int fuel() const { return opts_.fuel; }

 private:
  friend ValidatedSignature validate_signature(const Signature&, const ValidationOptions&);
  ValidatedSignature(std::shared_ptr<const Signature> sig, ValidationOptions opts)
      : sig_(std::move(sig)), opts_(opts) {}

  std::shared_ptr<const Signature> sig_;
  ValidationOptions opts_;
};

// Checks every format telescope, every codomain and both sides of every axiom
// against the prefix of the signature declared so far; applies the
// termination guard to axioms unless trusted.
ValidatedSignature validate_signature(const Signature& sig, const ValidationOptions& opts = {});

}  // namespace depcat

#endif
