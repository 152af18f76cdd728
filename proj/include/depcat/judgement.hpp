#ifndef DEPCAT_JUDGEMENT_HPP
#define DEPCAT_JUDGEMENT_HPP

#include <string>

#include "depcat/syntax.hpp"

namespace depcat {

// The six judgement forms of the theory.
struct Judgement {
  enum class Form { CtxWf, CtxEq, TyWf, TyEq, TmOf, TmEq };

  Form form = Form::CtxWf;
  Ctx ctx;        // ambient context (subject for CtxWf/CtxEq)
  Ctx ctx2;       // CtxEq right-hand side
  TyRef ty;       // TyWf/TyEq lhs, classifier for TmOf/TmEq
  TyRef ty2;      // TyEq rhs
  TmRef tm;       // TmOf/TmEq lhs
  TmRef tm2;      // TmEq rhs

  static Judgement ctx_wf(Ctx c);
  static Judgement ctx_eq(Ctx c, Ctx d);
  static Judgement ty_wf(Ctx c, TyRef a);
  static Judgement ty_eq(Ctx c, TyRef a, TyRef b);
  static Judgement tm_of(Ctx c, TmRef a, TyRef t);
  static Judgement tm_eq(Ctx c, TmRef a, TmRef b, TyRef t);
};

inline Judgement Judgement::ctx_wf(Ctx c) {
  Judgement j;
  j.form = Form::CtxWf;
  j.ctx = std::move(c);
  return j;
}
inline Judgement Judgement::ctx_eq(Ctx c, Ctx d) {
  Judgement j;
  j.form = Form::CtxEq;
  j.ctx = std::move(c);
  j.ctx2 = std::move(d);
  return j;
}
inline Judgement Judgement::ty_wf(Ctx c, TyRef a) {
  Judgement j;
  j.form = Form::TyWf;
  j.ctx = std::move(c);
  j.ty = std::move(a);
  return j;
}
inline Judgement Judgement::ty_eq(Ctx c, TyRef a, TyRef b) {
  Judgement j;
  j.form = Form::TyEq;
  j.ctx = std::move(c);
  j.ty = std::move(a);
  j.ty2 = std::move(b);
  return j;
}
inline Judgement Judgement::tm_of(Ctx c, TmRef a, TyRef t) {
  Judgement j;
  j.form = Form::TmOf;
  j.ctx = std::move(c);
  j.tm = std::move(a);
  j.ty = std::move(t);
  return j;
}
inline Judgement Judgement::tm_eq(Ctx c, TmRef a, TmRef b, TyRef t) {
  Judgement j;
  j.form = Form::TmEq;
  j.ctx = std::move(c);
  j.tm = std::move(a);
  j.tm2 = std::move(b);
  j.ty = std::move(t);
  return j;
}

}  // namespace depcat

#endif
