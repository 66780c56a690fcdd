#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Hereditarily finite sets as Ackermann codes: the set coded by m has the
// set coded by i as a member iff bit i of m is 1. Extensional equality is
// numeric equality, and membership is well-founded because a member's code
// is strictly below the container's code.

namespace hfkit {

using Nat = mpz_class;

/// Upper bound on the bit-length of any intermediate value. Operations that
/// can explode (powerset, singleton, superexp, vbar) take a Budget and
/// deliver Overflow instead of a value when the bound would be crossed.
struct Budget {
  std::size_t max_bits = std::size_t{1} << 20;
};

class HFCode {
 public:
  HFCode() : v_(0) {}
  explicit HFCode(Nat v) : v_(std::move(v)) {
    if (sgn(v_) < 0) throw std::invalid_argument("HFCode: negative value");
  }
  explicit HFCode(unsigned long v) : v_(v) {}

  const Nat& value() const { return v_; }
  /// Number of bits, i.e. 1 + index of the highest member. 0 codes the empty set.
  std::size_t bit_length() const { return v_ == 0 ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2); }
  std::size_t member_count() const { return mpz_popcount(v_.get_mpz_t()); }
  bool is_empty() const { return v_ == 0; }

  friend bool operator==(const HFCode& a, const HFCode& b) { return a.v_ == b.v_; }
  friend bool operator!=(const HFCode& a, const HFCode& b) { return a.v_ != b.v_; }
  friend bool operator<(const HFCode& a, const HFCode& b) { return a.v_ < b.v_; }

 private:
  Nat v_;
};

/// Result of a budgeted operation; nullopt means the budget was exceeded
/// (a first-class verdict, not a failure).
using PartialCode = std::optional<HFCode>;

enum class CutVerdict { InCut, BudgetExceeded };

/// Member codes of x, ascending. Positions fit std::size_t for any code we
/// can physically hold.
std::vector<unsigned long> member_indices(const HFCode& x);

/// Bit x of y.
bool mem(const HFCode& x, const HFCode& y);

/// x ∪ {y}; Overflow when y's value exceeds the budget as a bit position.
PartialCode insert(const HFCode& x, const HFCode& y, const Budget& b);

/// Bitwise OR. Never grows past its arguments.
HFCode union_of(const HFCode& x, const HFCode& y);
HFCode intersect(const HFCode& x, const HFCode& y);
HFCode difference(const HFCode& x, const HFCode& y);

/// (x AND y) = x.
bool subset(const HFCode& x, const HFCode& y);

/// {x}, i.e. 2^x.
PartialCode singleton(const HFCode& x, const Budget& b);

/// {{x},{x,y}}.
PartialCode kuratowski_pair(const HFCode& x, const HFCode& y, const Budget& b);

/// Code whose members are exactly the subset codes of x.
PartialCode powerset(const HFCode& x, const Budget& b);

/// 2^base_height: 2^x_0 = x, 2^x_{y+1} = 2^(2^x_y). Overflow if any
/// intermediate value exceeds the budget.
PartialCode superexp(const Nat& base, const Nat& height, const Budget& b);

/// Least code of the form 2^0_z - 1 (z >= 1) that is >= x: the smallest
/// von Neumann level containing x as a subset. vbar(x) <= 2^x.
PartialCode vbar(const HFCode& x, const Budget& b);

/// Whether 2^0_x completes within the budget. BudgetExceeded is a resource
/// verdict, not a claim about membership in the cut over the full naturals.
CutVerdict in_cut(const Nat& x, const Budget& b);

/// Von Neumann rank: least a with x ⊆ V_a. Total (works on bit positions).
Nat rank(const HFCode& x);

/// Hereditary members of x, x itself excluded.
HFCode transitive_closure(const HFCode& x);

bool is_transitive(const HFCode& x);

/// Index z such that x is the level code 2^0_{z} - 1, if it is one.
std::optional<unsigned> level_index(const HFCode& x, const Budget& b);

// Serialization: decimal by default, hexadecimal with an 0x prefix.
std::string code_to_string(const HFCode& x, bool hex = false);
HFCode code_from_string(const std::string& s);
/// Nested-brace rendering; members deeper than max_depth render as codes.
std::string set_notation(const HFCode& x, unsigned max_depth = 4);

}  // namespace hfkit
