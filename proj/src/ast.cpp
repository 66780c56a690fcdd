#include "hfkit/ast.hpp"

#include <map>
#include <stdexcept>

namespace hfkit::folang {

unsigned fn_arity(Fn f) {
  switch (f) {
    case Fn::Add:
    case Fn::Mul:
      return 2;
    default:
      return 1;
  }
}

unsigned pred_arity(Pred p) {
  switch (p) {
    case Pred::ZeroG:
    case Pred::InCut:
    case Pred::IsCardP:
    case Pred::CardZeroG:
      return 1;
    case Pred::AddG:
    case Pred::MulG:
    case Pred::CardAddG:
    case Pred::CardMulG:
    case Pred::OrdAddG:
    case Pred::OrdMulG:
      return 3;
    default:
      return 2;
  }
}

TermPtr mk_var(std::string name, int sort) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Variable;
  t->var = Var{std::move(name), sort};
  return t;
}
TermPtr mk_var(const Var& v) { return mk_var(v.name, v.sort); }

TermPtr mk_apply(Fn f, std::vector<TermPtr> args) {
  if (args.size() != fn_arity(f)) throw std::invalid_argument("mk_apply: arity");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Apply;
  t->fn = f;
  t->args = std::move(args);
  return t;
}

TermPtr mk_num(Nat n) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Numeral;
  t->lit = std::move(n);
  return t;
}

TermPtr mk_codelit(Nat n) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::CodeLit;
  t->lit = std::move(n);
  return t;
}

FormulaPtr mk_atom(Pred p, std::vector<TermPtr> args) {
  if (args.size() != pred_arity(p)) throw std::invalid_argument("mk_atom: arity");
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->pred = p;
  f->args = std::move(args);
  return f;
}

FormulaPtr mk_incut(TermPtr t, Rational scale) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->pred = Pred::InCut;
  f->args = {std::move(t)};
  f->scale = scale;
  return f;
}

namespace {
FormulaPtr mk_conn(Conn c, std::vector<FormulaPtr> sub) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Connective;
  f->conn = c;
  f->sub = std::move(sub);
  return f;
}
}  // namespace

FormulaPtr mk_not(FormulaPtr f) { return mk_conn(Conn::Not, {std::move(f)}); }
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return mk_conn(Conn::And, {std::move(a), std::move(b)}); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return mk_conn(Conn::Or, {std::move(a), std::move(b)}); }
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return mk_conn(Conn::Implies, {std::move(a), std::move(b)});
}
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) { return mk_conn(Conn::Iff, {std::move(a), std::move(b)}); }

namespace {
FormulaPtr mk_quant(Formula::Kind k, QuantKind q, Var v, BoundKind bk, TermPtr bound,
                    FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->q = q;
  f->qvar = std::move(v);
  f->bk = bk;
  f->bound = std::move(bound);
  f->body = std::move(body);
  return f;
}
}  // namespace

FormulaPtr mk_forall(Var v, FormulaPtr body) {
  return mk_quant(Formula::Kind::Quant, QuantKind::ForAll, std::move(v), BoundKind::In, nullptr,
                  std::move(body));
}
FormulaPtr mk_exists(Var v, FormulaPtr body) {
  return mk_quant(Formula::Kind::Quant, QuantKind::Exists, std::move(v), BoundKind::In, nullptr,
                  std::move(body));
}
FormulaPtr mk_bforall(Var v, BoundKind bk, TermPtr bound, FormulaPtr body) {
  if (!bound) throw std::invalid_argument("mk_bforall: null bound");
  return mk_quant(Formula::Kind::BoundedQuant, QuantKind::ForAll, std::move(v), bk,
                  std::move(bound), std::move(body));
}
FormulaPtr mk_bexists(Var v, BoundKind bk, TermPtr bound, FormulaPtr body) {
  if (!bound) throw std::invalid_argument("mk_bexists: null bound");
  return mk_quant(Formula::Kind::BoundedQuant, QuantKind::Exists, std::move(v), bk,
                  std::move(bound), std::move(body));
}

FormulaPtr mk_conj(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw std::invalid_argument("mk_conj: empty");
  FormulaPtr r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = mk_and(r, fs[i]);
  return r;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Variable:
      return a->var == b->var;
    case Term::Kind::Numeral:
    case Term::Kind::CodeLit:
      return a->lit == b->lit;
    case Term::Kind::Apply: {
      if (a->fn != b->fn || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    }
  }
  return false;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Atom: {
      if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
      if (a->pred == Pred::InCut && !(a->scale == b->scale)) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    }
    case Formula::Kind::Connective: {
      if (a->conn != b->conn || a->sub.size() != b->sub.size()) return false;
      for (std::size_t i = 0; i < a->sub.size(); ++i)
        if (!equal(a->sub[i], b->sub[i])) return false;
      return true;
    }
    case Formula::Kind::Quant:
      return a->q == b->q && a->qvar == b->qvar && equal(a->body, b->body);
    case Formula::Kind::BoundedQuant:
      return a->q == b->q && a->qvar == b->qvar && a->bk == b->bk &&
             term_equal(a->bound, b->bound) && equal(a->body, b->body);
  }
  return false;
}

namespace {

using Renaming = std::map<Var, Var>;

bool term_alpha(const TermPtr& a, const TermPtr& b, const Renaming& ra, const Renaming& rb) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Variable: {
      auto ia = ra.find(a->var), ib = rb.find(b->var);
      bool ba = ia != ra.end(), bb = ib != rb.end();
      if (ba != bb) return false;
      if (ba) return ia->second == ib->second;
      return a->var == b->var;
    }
    case Term::Kind::Numeral:
    case Term::Kind::CodeLit:
      return a->lit == b->lit;
    case Term::Kind::Apply: {
      if (a->fn != b->fn) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_alpha(a->args[i], b->args[i], ra, rb)) return false;
      return true;
    }
  }
  return false;
}

bool alpha_rec(const FormulaPtr& a, const FormulaPtr& b, Renaming& ra, Renaming& rb, int& next) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Atom: {
      if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
      if (a->pred == Pred::InCut && !(a->scale == b->scale)) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!term_alpha(a->args[i], b->args[i], ra, rb)) return false;
      return true;
    }
    case Formula::Kind::Connective: {
      if (a->conn != b->conn || a->sub.size() != b->sub.size()) return false;
      for (std::size_t i = 0; i < a->sub.size(); ++i)
        if (!alpha_rec(a->sub[i], b->sub[i], ra, rb, next)) return false;
      return true;
    }
    case Formula::Kind::Quant:
    case Formula::Kind::BoundedQuant: {
      if (a->q != b->q || a->qvar.sort != b->qvar.sort) return false;
      if (a->kind == Formula::Kind::BoundedQuant) {
        if (a->bk != b->bk || !term_alpha(a->bound, b->bound, ra, rb)) return false;
      }
      Var canon{"#" + std::to_string(next++), a->qvar.sort};
      auto sa = ra.find(a->qvar), sb = rb.find(b->qvar);
      std::optional<Var> olda, oldb;
      if (sa != ra.end()) olda = sa->second;
      if (sb != rb.end()) oldb = sb->second;
      ra[a->qvar] = canon;
      rb[b->qvar] = canon;
      bool ok = alpha_rec(a->body, b->body, ra, rb, next);
      if (olda)
        ra[a->qvar] = *olda;
      else
        ra.erase(a->qvar);
      if (oldb)
        rb[b->qvar] = *oldb;
      else
        rb.erase(b->qvar);
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) return a == b;
  Renaming ra, rb;
  int next = 0;
  return alpha_rec(a, b, ra, rb, next);
}

std::set<Var> term_vars(const TermPtr& t) {
  std::set<Var> out;
  if (!t) return out;
  switch (t->kind) {
    case Term::Kind::Variable:
      out.insert(t->var);
      break;
    case Term::Kind::Apply:
      for (auto& a : t->args) {
        auto s = term_vars(a);
        out.insert(s.begin(), s.end());
      }
      break;
    default:
      break;
  }
  return out;
}

namespace {
void free_rec(const FormulaPtr& f, std::set<Var>& bound, std::set<Var>& out) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      for (auto& t : f->args)
        for (auto& v : term_vars(t))
          if (!bound.count(v)) out.insert(v);
      return;
    case Formula::Kind::Connective:
      for (auto& s : f->sub) free_rec(s, bound, out);
      return;
    case Formula::Kind::Quant:
    case Formula::Kind::BoundedQuant: {
      if (f->bound)
        for (auto& v : term_vars(f->bound))
          if (!bound.count(v)) out.insert(v);
      bool inserted = bound.insert(f->qvar).second;
      free_rec(f->body, bound, out);
      if (inserted) bound.erase(f->qvar);
      return;
    }
  }
}
}  // namespace

std::set<Var> free_vars(const FormulaPtr& f) {
  std::set<Var> bound, out;
  free_rec(f, bound, out);
  return out;
}

Var fresh_var(std::string stem, int sort, std::set<Var>& used) {
  Var v{stem, sort};
  while (used.count(v)) v.name += "'";
  used.insert(v);
  return v;
}

TermPtr term_substitute(const TermPtr& s, const Var& v, const TermPtr& t) {
  switch (s->kind) {
    case Term::Kind::Variable:
      if (s->var == v) {
        if (term_sort(t) != v.sort) throw std::invalid_argument("substitute: sort mismatch");
        return t;
      }
      return s;
    case Term::Kind::Apply: {
      std::vector<TermPtr> args;
      args.reserve(s->args.size());
      bool changed = false;
      for (auto& a : s->args) {
        auto na = term_substitute(a, v, t);
        changed = changed || na != a;
        args.push_back(na);
      }
      if (!changed) return s;
      return mk_apply(s->fn, std::move(args));
    }
    default:
      return s;
  }
}

FormulaPtr substitute(const FormulaPtr& f, const Var& v, const TermPtr& t) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      std::vector<TermPtr> args;
      bool changed = false;
      for (auto& a : f->args) {
        auto na = term_substitute(a, v, t);
        changed = changed || na != a;
        args.push_back(na);
      }
      if (!changed) return f;
      auto r = std::make_shared<Formula>(*f);
      r->args = std::move(args);
      return r;
    }
    case Formula::Kind::Connective: {
      std::vector<FormulaPtr> sub;
      bool changed = false;
      for (auto& s : f->sub) {
        auto ns = substitute(s, v, t);
        changed = changed || ns != s;
        sub.push_back(ns);
      }
      if (!changed) return f;
      auto r = std::make_shared<Formula>(*f);
      r->sub = std::move(sub);
      return r;
    }
    case Formula::Kind::Quant:
    case Formula::Kind::BoundedQuant: {
      TermPtr nb = f->bound ? term_substitute(f->bound, v, t) : nullptr;
      if (f->qvar == v) {
        if (nb == f->bound) return f;
        auto r = std::make_shared<Formula>(*f);
        r->bound = nb;
        return r;
      }
      auto tv = term_vars(t);
      FormulaPtr body = f->body;
      Var qv = f->qvar;
      if (tv.count(qv) && free_vars(f->body).count(v)) {
        // capture: rename the binder first
        std::set<Var> used = free_vars(f->body);
        used.insert(tv.begin(), tv.end());
        used.insert(v);
        Var nv = fresh_var(qv.name, qv.sort, used);
        body = substitute(body, qv, mk_var(nv));
        qv = nv;
      }
      auto nbody = substitute(body, v, t);
      if (nbody == f->body && nb == f->bound && qv == f->qvar) return f;
      auto r = std::make_shared<Formula>(*f);
      r->qvar = qv;
      r->bound = nb;
      r->body = nbody;
      return r;
    }
  }
  return f;
}

int term_sort(const TermPtr& t) {
  if (!t) return -1;
  switch (t->kind) {
    case Term::Kind::Variable:
      return t->var.sort;
    case Term::Kind::Numeral:
    case Term::Kind::CodeLit:
      return 0;
    case Term::Kind::Apply: {
      for (auto& a : t->args)
        if (term_sort(a) != 0) return -1;  // every function symbol is sort 0 -> 0
      return 0;
    }
  }
  return -1;
}

namespace {
std::string atom_sort_check(const Formula& f) {
  std::vector<int> ss;
  for (auto& t : f.args) {
    int s = term_sort(t);
    if (s < 0) return "ill-sorted term in atom";
    ss.push_back(s);
  }
  switch (f.pred) {
    case Pred::Eq:
      if (ss[0] != ss[1]) return "equality between different sorts";
      return "";
    case Pred::In:
      if (ss[0] != 0 || ss[1] != 0) return "'in' requires sort-0 operands";
      return "";
    case Pred::Eps:
      if (ss[1] != ss[0] + 1) return "'eps' requires sorts n and n+1";
      return "";
    default:
      for (int s : ss)
        if (s != 0) return "arithmetic atom over non-0 sort";
      return "";
  }
}

std::string check_rec(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return atom_sort_check(*f);
    case Formula::Kind::Connective: {
      for (auto& s : f->sub) {
        auto e = check_rec(s);
        if (!e.empty()) return e;
      }
      return "";
    }
    case Formula::Kind::Quant:
      return check_rec(f->body);
    case Formula::Kind::BoundedQuant: {
      int bs = term_sort(f->bound);
      if (bs < 0) return "ill-sorted bound term";
      // sort-0 'in' bound, or an eps-style bound one sort up
      if (f->bk == BoundKind::In && !(bs == 0 && f->qvar.sort == 0) && bs != f->qvar.sort + 1)
        return "bound term sort must fit the bound variable";
      if (f->bk == BoundKind::Le && (bs != 0 || f->qvar.sort != 0))
        return "'<=' bounds are arithmetic (sort 0)";
      if (term_vars(f->bound).count(f->qvar)) return "bound variable occurs in its own bound";
      return check_rec(f->body);
    }
  }
  return "";
}
}  // namespace

std::string sort_check(const FormulaPtr& f) { return check_rec(f); }

std::size_t node_count(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      std::size_t n = 1;
      for (auto& t : f->args) {
        // count term nodes
        std::vector<TermPtr> stack{t};
        while (!stack.empty()) {
          auto cur = stack.back();
          stack.pop_back();
          ++n;
          if (cur->kind == Term::Kind::Apply)
            for (auto& a : cur->args) stack.push_back(a);
        }
      }
      return n;
    }
    case Formula::Kind::Connective: {
      std::size_t n = 1;
      for (auto& s : f->sub) n += node_count(s);
      return n;
    }
    case Formula::Kind::Quant:
      return 1 + node_count(f->body);
    case Formula::Kind::BoundedQuant:
      return 2 + node_count(f->body);
  }
  return 1;
}

}  // namespace hfkit::folang
