#pragma once

#include "hfkit/ast.hpp"

namespace hfkit::folang {

// Syntax-directed fragment classification. The Delta0 set classes require
// every quantifier to be in-bounded by a term built from V (and P for the
// PV class) and variables other than the bound one; Pi1set is a nonempty
// unbounded universal prefix over such a body. Delta0pred is the
// predicate-only arithmetic fragment with <=-bounded quantifiers (variable
// or numeral bounds); Pi1pred / Sigma1 are unbounded universal/existential
// prefixes over bounded arithmetic bodies.
enum class FormulaClass {
  Delta0SetPV,
  Delta0SetV,
  Pi1Set,
  Delta0Pred,
  Pi1Pred,
  Sigma1,
  Unclassified,
};

const char* to_string(FormulaClass c);

FormulaClass classify(const FormulaPtr& f);

/// Bounded-quantifier arithmetic (functional terms allowed); used by the
/// EA induction-scheme recognizer.
bool is_delta0_arith(const FormulaPtr& f);

/// Predicate-only: arithmetic graph atoms over variables/numerals only.
bool is_pred_only(const FormulaPtr& f);

}  // namespace hfkit::folang
