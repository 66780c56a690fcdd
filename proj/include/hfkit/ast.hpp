#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hfkit/hfcode.hpp"

// Many-sorted first-order terms and formulas with bounded-quantifier binders.
//
// Sort 0 holds individuals (sets, or numbers in the arithmetic reading);
// sort n+1 holds collections of sort-n objects. The two signatures share one
// AST: the set side has membership (in/eps) and the functions V, P; the
// arithmetic side has functional atoms over 0, S, +, *, 2^ and the
// predicate-only graph atoms (x=0, x=S(y), x=y+z, x=y*z, x=2^y, x<=y).
// Translator outputs additionally use named graph predicates whose semantics
// is the owning module's budgeted implementation (ordadd(a,b,c) etc.).

namespace hfkit::folang {

struct Var {
  std::string name;
  int sort = 0;
  friend bool operator==(const Var& a, const Var& b) { return a.name == b.name && a.sort == b.sort; }
  friend bool operator<(const Var& a, const Var& b) {
    return a.sort != b.sort ? a.sort < b.sort : a.name < b.name;
  }
};

enum class Fn { Vbar, Pow, Succ, Add, Mul, Exp2 };
unsigned fn_arity(Fn f);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Variable, Apply, Numeral, CodeLit };
  Kind kind = Kind::Variable;
  Var var;                    // Variable
  Fn fn = Fn::Vbar;           // Apply
  std::vector<TermPtr> args;  // Apply
  Nat lit;                    // Numeral (arithmetic) / CodeLit (set)
};

TermPtr mk_var(std::string name, int sort = 0);
TermPtr mk_var(const Var& v);
TermPtr mk_apply(Fn f, std::vector<TermPtr> args);
TermPtr mk_num(Nat n);
TermPtr mk_codelit(Nat n);

enum class Pred {
  Eq,
  In,      // sort-0 set membership
  Eps,     // sort n in sort n+1
  Le,      // arithmetic <=
  ZeroG,   // x = 0
  SuccG,   // x = S(y)
  AddG,    // x = y + z
  MulG,    // x = y * z
  Exp2G,   // x = 2^y
  InCut,   // incut(x[, scale]): floor(x/scale) lies in the superexponential cut
  VbarAckG,   // vbarack(v, x): v is the least level-form number >= x
  PowAckG,    // powack(v, x): v codes the powerset of x
  CardLeP,    // cardle(c, d)
  CardZeroG,  // cardzero(c)
  CardSuccG,  // cardsucc(c, d): c is the cardinal successor of d
  CardAddG,   // cardadd(c, d, e): c = d + e
  CardMulG,
  CardExp2G,  // cardexp2(c, d): c = 2^d
  IsCardP,    // iscard(c)
  OrdAddG,    // ordadd(a, b, c): a = b + c by the sup-recursion
  OrdMulG,
  OrdExp2G,   // ordexp2(a, b): a = 2^b
};
unsigned pred_arity(Pred p);

struct Rational {
  long num = 1;
  long den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Conn { Not, And, Or, Implies, Iff };
enum class QuantKind { ForAll, Exists };
enum class BoundKind { In, Le };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Atom, Connective, Quant, BoundedQuant };
  Kind kind = Kind::Atom;
  // Atom
  Pred pred = Pred::Eq;
  std::vector<TermPtr> args;
  Rational scale;  // InCut only
  // Connective
  Conn conn = Conn::Not;
  std::vector<FormulaPtr> sub;
  // Quant / BoundedQuant
  QuantKind q = QuantKind::ForAll;
  Var qvar;
  BoundKind bk = BoundKind::In;
  TermPtr bound;  // BoundedQuant only
  FormulaPtr body;
};

FormulaPtr mk_atom(Pred p, std::vector<TermPtr> args);
FormulaPtr mk_incut(TermPtr t, Rational scale);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(Var v, FormulaPtr body);
FormulaPtr mk_exists(Var v, FormulaPtr body);
FormulaPtr mk_bforall(Var v, BoundKind bk, TermPtr bound, FormulaPtr body);
FormulaPtr mk_bexists(Var v, BoundKind bk, TermPtr bound, FormulaPtr body);
FormulaPtr mk_conj(const std::vector<FormulaPtr>& fs);  // empty -> x=x? callers avoid empty

bool term_equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b);

std::set<Var> free_vars(const FormulaPtr& f);
std::set<Var> term_vars(const TermPtr& t);

/// Capture-avoiding substitution of t for free occurrences of v.
/// Throws on sort mismatch.
FormulaPtr substitute(const FormulaPtr& f, const Var& v, const TermPtr& t);
TermPtr term_substitute(const TermPtr& s, const Var& v, const TermPtr& t);

/// A variable named like `stem` (possibly primed) not in `used`; adds it.
Var fresh_var(std::string stem, int sort, std::set<Var>& used);

/// Sort correctness: arity and argument sorts of every atom and application.
/// Returns an empty string when well-sorted, else a diagnostic.
std::string sort_check(const FormulaPtr& f);
int term_sort(const TermPtr& t);  // -1 if ill-sorted

std::size_t node_count(const FormulaPtr& f);

}  // namespace hfkit::folang
