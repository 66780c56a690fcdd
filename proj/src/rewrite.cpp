#include "hfkit/rewrite.hpp"

namespace hfkit::folang {

namespace {

bool flat(const TermPtr& t) {
  return t->kind == Term::Kind::Variable || t->kind == Term::Kind::Numeral ||
         t->kind == Term::Kind::CodeLit;
}

struct Def {
  Var v;
  FormulaPtr constraint;
};

FormulaPtr graph_atom(const TermPtr& out, Fn f, const std::vector<TermPtr>& args) {
  switch (f) {
    case Fn::Succ:
      return mk_atom(Pred::SuccG, {out, args[0]});
    case Fn::Add:
      return mk_atom(Pred::AddG, {out, args[0], args[1]});
    case Fn::Mul:
      return mk_atom(Pred::MulG, {out, args[0], args[1]});
    case Fn::Exp2:
      return mk_atom(Pred::Exp2G, {out, args[0]});
    default:
      throw std::invalid_argument("fun_to_pred: set function in arithmetic context");
  }
}

// Flatten a term to a variable or literal, appending definitions.
TermPtr flatten(const TermPtr& t, std::vector<Def>& defs, std::set<Var>& used,
                bool as_fn_arg) {
  if (t->kind == Term::Kind::Variable) return t;
  if (t->kind == Term::Kind::Numeral || t->kind == Term::Kind::CodeLit) {
    if (!as_fn_arg) return t;
    // arguments of function symbols become constrained intermediates
    Var v = fresh_var("w", 0, used);
    FormulaPtr c = (t->kind == Term::Kind::Numeral && t->lit == 0)
                       ? mk_atom(Pred::ZeroG, {mk_var(v)})
                       : mk_atom(Pred::Eq, {mk_var(v), t});
    defs.push_back({v, c});
    return mk_var(v);
  }
  // Apply
  std::vector<TermPtr> fargs;
  for (auto& a : t->args) fargs.push_back(flatten(a, defs, used, true));
  Var v = fresh_var("w", 0, used);
  defs.push_back({v, graph_atom(mk_var(v), t->fn, fargs)});
  return mk_var(v);
}

FormulaPtr wrap(const std::vector<Def>& defs, FormulaPtr core, bool positive) {
  for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
    if (positive)
      core = mk_exists(it->v, mk_and(it->constraint, core));
    else
      core = mk_forall(it->v, mk_implies(it->constraint, core));
  }
  return core;
}

FormulaPtr rewrite_atom(const Formula& f, std::set<Var>& used, bool positive) {
  std::vector<Def> defs;
  FormulaPtr core;
  if (f.pred == Pred::Eq) {
    TermPtr l = f.args[0], r = f.args[1];
    // orient an application to one side so the last definition folds into a
    // graph atom
    if (l->kind == Term::Kind::Apply && r->kind != Term::Kind::Apply) std::swap(l, r);
    if (r->kind == Term::Kind::Apply) {
      std::vector<TermPtr> fargs;
      for (auto& a : r->args) fargs.push_back(flatten(a, defs, used, true));
      TermPtr lf = flatten(l, defs, used, false);
      if (lf->kind == Term::Kind::Numeral) {
        // keep the output slot a variable
        Var v = fresh_var("w", 0, used);
        defs.push_back({v, lf->lit == 0 ? mk_atom(Pred::ZeroG, {mk_var(v)})
                                        : mk_atom(Pred::Eq, {mk_var(v), lf})});
        lf = mk_var(v);
      }
      core = graph_atom(lf, r->fn, fargs);
    } else {
      TermPtr lf = flatten(l, defs, used, false);
      TermPtr rf = flatten(r, defs, used, false);
      if (rf->kind == Term::Kind::Numeral && rf->lit == 0)
        core = mk_atom(Pred::ZeroG, {lf});
      else if (lf->kind == Term::Kind::Numeral && lf->lit == 0)
        core = mk_atom(Pred::ZeroG, {rf});
      else
        core = mk_atom(Pred::Eq, {lf, rf});
    }
  } else {
    std::vector<TermPtr> fargs;
    for (auto& a : f.args) fargs.push_back(flatten(a, defs, used, false));
    auto r = std::make_shared<Formula>(f);
    r->args = std::move(fargs);
    core = r;
  }
  return wrap(defs, core, positive);
}

FormulaPtr rewrite(const FormulaPtr& f, std::set<Var>& used, bool positive) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return rewrite_atom(*f, used, positive);
    case Formula::Kind::Connective: {
      switch (f->conn) {
        case Conn::Not:
          return mk_not(rewrite(f->sub[0], used, !positive));
        case Conn::And:
          return mk_and(rewrite(f->sub[0], used, positive), rewrite(f->sub[1], used, positive));
        case Conn::Or:
          return mk_or(rewrite(f->sub[0], used, positive), rewrite(f->sub[1], used, positive));
        case Conn::Implies:
          return mk_implies(rewrite(f->sub[0], used, !positive),
                            rewrite(f->sub[1], used, positive));
        case Conn::Iff:
          // both polarities occur; the existential form is equivalent over
          // total functions
          return mk_iff(rewrite(f->sub[0], used, true), rewrite(f->sub[1], used, true));
      }
      return f;
    }
    case Formula::Kind::Quant: {
      auto body = rewrite(f->body, used, positive);
      if (body == f->body) return f;
      auto r = std::make_shared<Formula>(*f);
      r->body = body;
      return r;
    }
    case Formula::Kind::BoundedQuant: {
      if (flat(f->bound)) {
        auto body = rewrite(f->body, used, positive);
        if (body == f->body) return f;
        auto r = std::make_shared<Formula>(*f);
        r->body = body;
        return r;
      }
      // flatten the bound outside the binder
      std::vector<Def> defs;
      TermPtr b = flatten(f->bound, defs, used, false);
      auto body = rewrite(f->body, used, positive);
      auto r = std::make_shared<Formula>(*f);
      r->bound = b;
      r->body = body;
      return wrap(defs, r, positive);
    }
  }
  return f;
}

void collect_all_vars(const FormulaPtr& f, std::set<Var>& out) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      for (auto& t : f->args)
        for (auto& v : term_vars(t)) out.insert(v);
      return;
    case Formula::Kind::Connective:
      for (auto& s : f->sub) collect_all_vars(s, out);
      return;
    case Formula::Kind::Quant:
    case Formula::Kind::BoundedQuant:
      out.insert(f->qvar);
      if (f->bound)
        for (auto& v : term_vars(f->bound)) out.insert(v);
      collect_all_vars(f->body, out);
      return;
  }
}

}  // namespace

FormulaPtr fun_to_pred(const FormulaPtr& f) {
  std::set<Var> used;
  collect_all_vars(f, used);
  return rewrite(f, used, true);
}

}  // namespace hfkit::folang
