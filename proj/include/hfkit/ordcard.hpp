#pragma once

#include <optional>

#include "hfkit/hfcode.hpp"

// Ordinal and ZF-style cardinal arithmetic on Ackermann codes.
//
// Ordinals are transitive codes all of whose members are transitive. The
// ordinal operations are implemented by the sup-recursions
//   a+b  = sup({a} ∪ {S(a+g) | g<b})
//   a*b  = sup({a*g+a | g<b})
//   2^a  = sup({S(0)} ∪ {2^g+2^g | g<a})
// directly on codes (sup of a finite nest of ordinals is their union, i.e.
// bitwise OR). The natural-number route through on() serves as the internal
// oracle in tests, never as the implementation.
//
// A ZF-style cardinal is the set of all members of the minimal von Neumann
// level that are equinumerous with a given set; |a| depends only on a's
// member count.

namespace hfkit::ordcard {

struct OrdCode {
  HFCode code;
};
struct CardCode {
  HFCode code;
};

using PartialOrd = std::optional<OrdCode>;
using PartialCard = std::optional<CardCode>;

bool is_ordinal(const HFCode& x);
std::optional<OrdCode> make_ordinal(const HFCode& x);

/// Ackermann code of the von Neumann ordinal n: on(0)=0, on(x+1)=on(x)+2^on(x).
PartialCode on_code(const Nat& n, const Budget& b);

/// Inverse of on_code; equals the member count. Throws on non-ordinal input.
Nat on_inv(const HFCode& x);

PartialOrd ord_succ(const OrdCode& a, const Budget& b);
PartialOrd ord_add(const OrdCode& a, const OrdCode& c, const Budget& b);
PartialOrd ord_mul(const OrdCode& a, const OrdCode& c, const Budget& b);
PartialOrd ord_exp2(const OrdCode& a, const Budget& b);

/// Member count of x.
Nat card_nat(const HFCode& x);

/// Code of {y in the minimal level : |y| = |x|}.
PartialCard zf_card(const HFCode& x, const Budget& b);

/// ZF-cardinal of cardinality n (zf_card of any n-element set).
PartialCard k_iso(const Nat& n, const Budget& b);

/// l(x) = sum over members y of x of 2^{l(y)}, evaluated in cardinal
/// arithmetic; coincides with k_iso(x-as-number).
PartialCard l_iso(const HFCode& x, const Budget& b);

/// Least member of the cardinal (a representative set of that size).
HFCode representative(const CardCode& c);

bool is_cardinal(const HFCode& c, const Budget& b);

PartialCard card_add(const CardCode& a, const CardCode& c, const Budget& b);
PartialCard card_mul(const CardCode& a, const CardCode& c, const Budget& b);
PartialCard card_exp2(const CardCode& a, const Budget& b);
PartialCard card_succ(const CardCode& a, const Budget& b);

/// An injection between representatives exists iff the member counts compare.
bool card_le(const CardCode& a, const CardCode& c);

}  // namespace hfkit::ordcard
