#ifndef DEPCAT_SYNTAX_HPP
#define DEPCAT_SYNTAX_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Untyped kernel trees for MLTT(1,Pi,Sigma) over a constant alphabet.
// Representation is locally nameless: binders carry display hints only,
// occurrences are de Bruijn indices, so alpha-equality is structural and
// substitution never captures.

namespace depcat {

struct Ty;
struct Tm;
using TyRef = std::shared_ptr<const Ty>;
using TmRef = std::shared_ptr<const Tm>;

// ---- pre-types ------------------------------------------------------------

struct TyUnit {};
struct TyPi {
  TyRef dom;
  TyRef cod;  // scoped under one extra binder
  std::string binder;
};
struct TySigma {
  TyRef dom;
  TyRef cod;
  std::string binder;
};
struct TyConst {
  std::string name;
  std::vector<TmRef> args;  // context-morphism components, outermost first
};

struct Ty {
  std::variant<TyUnit, TyPi, TySigma, TyConst> node;
};

// ---- pre-terms ------------------------------------------------------------

struct TmVar {
  int index = 0;  // de Bruijn, 0 = innermost
  std::string hint;
};
struct TmStar {};
struct TmLam {
  TmRef body;  // one binder
  std::string binder;
};
struct TmApp {
  TmRef fn;
  TmRef arg;
};
struct TmPair {
  TmRef fst;
  TmRef snd;
};
// R^Sigma_{[z : sigma] motive}([x, y] branch, scrut).  The eliminated Sigma
// type is kept on the node; the checker needs it and the pre-syntax carries it.
struct TmSigElim {
  TyRef sigma;   // a Sigma pre-type
  TyRef motive;  // scoped under z : sigma
  TmRef branch;  // scoped under x : A, y : B
  TmRef scrut;
  std::string zname, xname, yname;
};
struct TmConst {
  std::string name;
  std::vector<TmRef> args;
};

struct Tm {
  std::variant<TmVar, TmStar, TmLam, TmApp, TmPair, TmSigElim, TmConst> node;
};

// ---- constructors ----------------------------------------------------------

TyRef ty_unit();
TyRef ty_pi(TyRef dom, TyRef cod, std::string binder = "x");
TyRef ty_sigma(TyRef dom, TyRef cod, std::string binder = "x");
TyRef ty_const(std::string name, std::vector<TmRef> args);

TmRef tm_var(int index, std::string hint = "");
TmRef tm_star();
TmRef tm_lam(TmRef body, std::string binder = "x");
TmRef tm_app(TmRef fn, TmRef arg);
TmRef tm_pair(TmRef fst, TmRef snd);
TmRef tm_sig_elim(TyRef sigma, TyRef motive, TmRef branch, TmRef scrut,
                  std::string zname = "z", std::string xname = "x",
                  std::string yname = "y");
TmRef tm_const(std::string name, std::vector<TmRef> args);

// ---- kernel errors ---------------------------------------------------------

struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundVariable : KernelError {
  using KernelError::KernelError;
};
struct DomainMismatch : KernelError {
  using KernelError::KernelError;
};

// ---- shifting and single substitution --------------------------------------

TmRef shift_tm(const TmRef& t, int by, int cutoff = 0);
TyRef shift_ty(const TyRef& t, int by, int cutoff = 0);

// Capture-free substitution of `what` for index `j`; indices above j drop by
// one.  subst_top substitutes under one binder that is being removed.
TmRef subst_tm(const TmRef& t, int j, const TmRef& what);
TyRef subst_ty(const TyRef& t, int j, const TmRef& what);
inline TmRef subst_top(const TmRef& t, const TmRef& what) { return subst_tm(t, 0, what); }
inline TyRef subst_top_ty(const TyRef& t, const TmRef& what) { return subst_ty(t, 0, what); }

// ---- alpha equality, sizes, free variables ---------------------------------

bool alpha_eq(const TyRef& a, const TyRef& b);
bool alpha_eq(const TmRef& a, const TmRef& b);

std::size_t tree_size(const TyRef& t);
std::size_t tree_size(const TmRef& t);

std::size_t tree_hash(const TyRef& t);
std::size_t tree_hash(const TmRef& t);

// Collects free de Bruijn indices (relative to the outermost scope).
void free_indices(const TmRef& t, std::vector<int>& out, int depth = 0);
void free_indices(const TyRef& t, std::vector<int>& out, int depth = 0);
int max_free_index(const TmRef& t);  // -1 when closed
int max_free_index(const TyRef& t);

// ---- pre-contexts ----------------------------------------------------------

struct CtxEntry {
  std::string name;
  TyRef type;  // scoped over the preceding entries
};

class Ctx {
 public:
  Ctx() = default;
  explicit Ctx(std::vector<CtxEntry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const CtxEntry& entry(std::size_t i) const { return entries_[i]; }
  const std::vector<CtxEntry>& entries() const { return entries_; }

  // Extends by one entry, freshening the display name against the current ones.
  Ctx extended(const std::string& name, const TyRef& type) const;

  // Type of the variable with de Bruijn index k, shifted into the full context.
  TyRef lookup(int k) const;

  // Display name for index k (may be freshened for printing elsewhere).
  const std::string& name_of(int k) const;

  bool names_distinct() const;
  Ctx prefix(std::size_t n) const;

  friend bool alpha_eq(const Ctx& a, const Ctx& b);

 private:
  std::vector<CtxEntry> entries_;
};

std::string fresh_name(const std::string& hint, const std::vector<std::string>& taken);

// ---- context morphisms -----------------------------------------------------

// A tuple of pre-terms g_1..g_n over `dom`, targeting `cod` componentwise.
// Typedness is the checker's business; the kernel only tracks arities.
struct CtxMor {
  Ctx dom;
  Ctx cod;
  std::vector<TmRef> comps;  // comps[i] corresponds to cod.entry(i)

  CtxMor() = default;
  CtxMor(Ctx d, Ctx c, std::vector<TmRef> comps_);
};

CtxMor id_cm(const Ctx& ctx);
CtxMor compose_cm(const CtxMor& g, const CtxMor& f);  // g after f
bool alpha_eq(const CtxMor& a, const CtxMor& b);

// Generalized (simultaneous) substitution E[g_1/x_1, ..., g_n/x_n].
TmRef gen_subst(const TmRef& t, const CtxMor& f);
TyRef gen_subst(const TyRef& t, const CtxMor& f);

// Substitutes through a context tail: given |- cod, tail ctx and f : dom -> cod,
// yields tail[f] scoped over dom.
std::vector<CtxEntry> gen_subst_tail(const std::vector<CtxEntry>& tail, const CtxMor& f);

// f extended to dom.entry -> cod.entry with the new variable mapped to itself.
CtxMor lift_cm(const CtxMor& f, const std::string& name, const TyRef& cod_entry_type);

}  // namespace depcat

#endif
