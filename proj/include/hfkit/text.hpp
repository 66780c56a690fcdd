#pragma once

#include <stdexcept>
#include <string>

#include "hfkit/ast.hpp"

// Concrete grammar (ASCII; the canonical printer emits exactly these forms):
//
//   formula  := iff
//   iff      := imp ('<->' imp)*                     (left-assoc)
//   imp      := or ('->' imp)?                       (right-assoc)
//   or       := and ('or' and)*
//   and      := neg ('and' neg)*
//   neg      := 'not' neg | quant | '(' formula ')' | atom
//   quant    := ('forall'|'exists') name[':'sort] (('in'|'<=') term)? '.' formula
//   atom     := named-pred '(' term {',' term} ')'
//             | term ('='|'<='|'in'|'eps') term
//   term     := name[':'sort] | 'V' '(' term ')' | 'P' '(' term ')'
//             | 'S' '(' term ')' | '2^' factor | term '+' term | term '*' term
//             | digits | '#' digits | '(' term ')'
//
// Variable sorts default to 0; binders fix the sort of their occurrences.
// Flat arithmetic equations over variables/numerals parse to the
// predicate-only graph atoms (x = 0, x = S(y), x = y + z, x = y * z,
// x = 2^y); nested arithmetic parses functionally. Named graph predicates:
// incut(x[,a[/b]]), vbarack(v,x), powack(v,x), cardle, cardzero, cardsucc,
// cardadd, cardmul, cardexp2, iscard, ordadd, ordmul, ordexp2.

namespace hfkit::folang {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        col(col_) {}
};

/// Parses and sort-checks; throws ParseError.
FormulaPtr parse(const std::string& text);
TermPtr parse_term(const std::string& text);

/// Canonical form: parse(print(f)) == f for parser-produced f.
std::string print(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

}  // namespace hfkit::folang
