#include "hfkit/classify.hpp"

namespace hfkit::folang {

const char* to_string(FormulaClass c) {
  switch (c) {
    case FormulaClass::Delta0SetPV: return "Delta0setPV";
    case FormulaClass::Delta0SetV: return "Delta0setV";
    case FormulaClass::Pi1Set: return "Pi1set";
    case FormulaClass::Delta0Pred: return "Delta0pred";
    case FormulaClass::Pi1Pred: return "Pi1pred";
    case FormulaClass::Sigma1: return "Sigma1";
    case FormulaClass::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

namespace {

bool set_term_ok(const TermPtr& t, bool allow_pow) {
  switch (t->kind) {
    case Term::Kind::Variable:
    case Term::Kind::CodeLit:
      return true;
    case Term::Kind::Numeral:
      return false;
    case Term::Kind::Apply:
      if (t->fn == Fn::Vbar || (allow_pow && t->fn == Fn::Pow))
        return set_term_ok(t->args[0], allow_pow);
      return false;
  }
  return false;
}

bool set_atom_ok(const Formula& f, bool allow_pow) {
  if (f.pred != Pred::Eq && f.pred != Pred::In && f.pred != Pred::Eps) return false;
  for (auto& t : f.args)
    if (!set_term_ok(t, allow_pow)) return false;
  return true;
}

bool delta0_set(const FormulaPtr& f, bool allow_pow) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return set_atom_ok(*f, allow_pow);
    case Formula::Kind::Connective:
      for (auto& s : f->sub)
        if (!delta0_set(s, allow_pow)) return false;
      return true;
    case Formula::Kind::Quant:
      return false;
    case Formula::Kind::BoundedQuant:
      if (f->bk != BoundKind::In) return false;
      if (!set_term_ok(f->bound, allow_pow)) return false;
      if (term_vars(f->bound).count(f->qvar)) return false;
      return delta0_set(f->body, allow_pow);
  }
  return false;
}

bool arith_term_flat(const TermPtr& t) {
  return t->kind == Term::Kind::Variable || t->kind == Term::Kind::Numeral;
}

bool arith_term_ok(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Variable:
    case Term::Kind::Numeral:
      return true;
    case Term::Kind::CodeLit:
      return false;
    case Term::Kind::Apply:
      if (t->fn == Fn::Vbar || t->fn == Fn::Pow) return false;
      for (auto& a : t->args)
        if (!arith_term_ok(a)) return false;
      return true;
  }
  return false;
}

bool arith_atom(const Formula& f, bool pred_only) {
  switch (f.pred) {
    case Pred::Eq:
    case Pred::Le:
      for (auto& t : f.args)
        if (!(pred_only ? arith_term_flat(t) : arith_term_ok(t))) return false;
      return true;
    case Pred::ZeroG:
    case Pred::SuccG:
    case Pred::AddG:
    case Pred::MulG:
    case Pred::Exp2G:
      for (auto& t : f.args)
        if (!arith_term_flat(t)) return false;
      return true;
    default:
      return false;
  }
}

bool delta0_arith(const FormulaPtr& f, bool pred_only) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return arith_atom(*f, pred_only);
    case Formula::Kind::Connective:
      for (auto& s : f->sub)
        if (!delta0_arith(s, pred_only)) return false;
      return true;
    case Formula::Kind::Quant:
      return false;
    case Formula::Kind::BoundedQuant: {
      if (f->bk != BoundKind::Le) return false;
      if (!arith_term_flat(f->bound)) return false;
      if (term_vars(f->bound).count(f->qvar)) return false;
      return delta0_arith(f->body, pred_only);
    }
  }
  return false;
}

}  // namespace

bool is_delta0_arith(const FormulaPtr& f) { return delta0_arith(f, false); }

bool is_pred_only(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return arith_atom(*f, true);
    case Formula::Kind::Connective:
      for (auto& s : f->sub)
        if (!is_pred_only(s)) return false;
      return true;
    case Formula::Kind::Quant:
      return is_pred_only(f->body);
    case Formula::Kind::BoundedQuant:
      return f->bk == BoundKind::Le && arith_term_flat(f->bound) &&
             !term_vars(f->bound).count(f->qvar) && is_pred_only(f->body);
  }
  return false;
}

FormulaClass classify(const FormulaPtr& f) {
  if (!sort_check(f).empty()) return FormulaClass::Unclassified;

  if (delta0_set(f, false)) return FormulaClass::Delta0SetV;
  if (delta0_set(f, true)) return FormulaClass::Delta0SetPV;

  // universal prefix over a Delta0 set body
  {
    FormulaPtr g = f;
    std::size_t prefix = 0;
    while (g->kind == Formula::Kind::Quant && g->q == QuantKind::ForAll) {
      ++prefix;
      g = g->body;
    }
    if (prefix > 0 && (delta0_set(g, true) || delta0_set(g, false))) return FormulaClass::Pi1Set;
  }

  if (delta0_arith(f, true)) return FormulaClass::Delta0Pred;

  {
    FormulaPtr g = f;
    std::size_t prefix = 0;
    while (g->kind == Formula::Kind::Quant && g->q == QuantKind::ForAll) {
      ++prefix;
      g = g->body;
    }
    if (prefix > 0 && delta0_arith(g, true)) return FormulaClass::Pi1Pred;
  }
  {
    FormulaPtr g = f;
    std::size_t prefix = 0;
    while (g->kind == Formula::Kind::Quant && g->q == QuantKind::Exists) {
      ++prefix;
      g = g->body;
    }
    if (prefix > 0 && (delta0_arith(g, true) || delta0_arith(g, false)))
      return FormulaClass::Sigma1;
  }
  return FormulaClass::Unclassified;
}

}  // namespace hfkit::folang
