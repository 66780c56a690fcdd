#pragma once

#include "hfkit/ast.hpp"

namespace hfkit::folang {

/// Flattens functional arithmetic to predicate-only form: nested terms
/// become fresh intermediates bound existentially in positive positions and
/// universally under negation, constrained by the graph atoms (x = 0,
/// x = S(y), x = y + z, x = y * z, x = 2^y). Idempotent on predicate-only
/// input; evaluation-equivalent over the naturals, where every function is
/// total.
FormulaPtr fun_to_pred(const FormulaPtr& f);

}  // namespace hfkit::folang
