#include "hfkit/hfcode.hpp"

#include <map>

namespace hfkit {

namespace {

bool fits_budget(const Nat& v, const Budget& b) {
  return v == 0 || mpz_sizeinbase(v.get_mpz_t(), 2) <= b.max_bits;
}

// Valid bit position under the budget: the position itself must be < max_bits
// so the resulting value stays within max_bits bits.
std::optional<unsigned long> bit_position(const HFCode& x, const Budget& b) {
  if (!x.value().fits_ulong_p()) return std::nullopt;
  unsigned long p = x.value().get_ui();
  if (p >= b.max_bits) return std::nullopt;
  return p;
}

}  // namespace

std::vector<unsigned long> member_indices(const HFCode& x) {
  std::vector<unsigned long> out;
  const mpz_srcptr m = x.value().get_mpz_t();
  mp_bitcnt_t i = mpz_scan1(m, 0);
  while (i != ~mp_bitcnt_t(0)) {
    out.push_back(static_cast<unsigned long>(i));
    i = mpz_scan1(m, i + 1);
  }
  return out;
}

bool mem(const HFCode& x, const HFCode& y) {
  if (!x.value().fits_ulong_p()) return false;  // member index beyond any held bit
  unsigned long p = x.value().get_ui();
  if (p >= y.bit_length()) return false;
  return mpz_tstbit(y.value().get_mpz_t(), p) != 0;
}

PartialCode insert(const HFCode& x, const HFCode& y, const Budget& b) {
  auto p = bit_position(y, b);
  if (!p) return std::nullopt;
  Nat r = x.value();
  mpz_setbit(r.get_mpz_t(), *p);
  return HFCode(r);
}

HFCode union_of(const HFCode& x, const HFCode& y) { return HFCode(Nat(x.value() | y.value())); }
HFCode intersect(const HFCode& x, const HFCode& y) { return HFCode(Nat(x.value() & y.value())); }
HFCode difference(const HFCode& x, const HFCode& y) {
  return HFCode(Nat(x.value() - (x.value() & y.value())));
}

bool subset(const HFCode& x, const HFCode& y) { return (x.value() & y.value()) == x.value(); }

PartialCode singleton(const HFCode& x, const Budget& b) {
  auto p = bit_position(x, b);
  if (!p) return std::nullopt;
  Nat r = 0;
  mpz_setbit(r.get_mpz_t(), *p);
  return HFCode(r);
}

PartialCode kuratowski_pair(const HFCode& x, const HFCode& y, const Budget& b) {
  auto sx = singleton(x, b);
  if (!sx) return std::nullopt;
  auto xy = insert(*sx, y, b);  // {x} with y adjoined = {x,y}
  if (!xy) return std::nullopt;
  auto first = singleton(*sx, b);
  if (!first) return std::nullopt;
  return insert(*first, *xy, b);
}

PartialCode powerset(const HFCode& x, const Budget& b) {
  // Highest subset code is x itself, so the result needs value(x)+1 bits.
  if (!x.value().fits_ulong_p()) return std::nullopt;
  unsigned long xv = x.value().get_ui();
  if (xv >= b.max_bits) return std::nullopt;
  Nat r = 0;
  // Enumerate submasks of x descending: s = (s-1) & x.
  unsigned long s = xv;
  while (true) {
    mpz_setbit(r.get_mpz_t(), s);
    if (s == 0) break;
    s = (s - 1) & xv;
  }
  return HFCode(r);
}

PartialCode superexp(const Nat& base, const Nat& height, const Budget& b) {
  if (!fits_budget(base, b)) return std::nullopt;
  Nat r = base;
  for (Nat i = 0; i < height; ++i) {
    // Need 2^r, which takes r+1 bits.
    if (r >= static_cast<unsigned long>(b.max_bits)) return std::nullopt;
    unsigned long e = r.get_ui();
    r = 0;
    mpz_setbit(r.get_mpz_t(), e);
  }
  return HFCode(Nat(r));
}

PartialCode vbar(const HFCode& x, const Budget& b) {
  Nat level = 0;  // 2^0_1 - 1
  while (level < x.value()) {
    // next level code: 2^(level+1) - 1
    Nat width = level + 1;
    if (width > static_cast<unsigned long>(b.max_bits)) return std::nullopt;
    Nat next = 0;
    mpz_setbit(next.get_mpz_t(), width.get_ui());
    level = next - 1;
  }
  return HFCode(level);
}

CutVerdict in_cut(const Nat& x, const Budget& b) {
  return superexp(0, x, b) ? CutVerdict::InCut : CutVerdict::BudgetExceeded;
}

namespace {
Nat rank_of_index(unsigned long i, std::map<unsigned long, Nat>& memo) {
  if (i == 0) return 0;
  auto it = memo.find(i);
  if (it != memo.end()) return it->second;
  Nat best = 0;
  for (unsigned long j : member_indices(HFCode(i))) {
    Nat r = rank_of_index(j, memo) + 1;
    if (r > best) best = r;
  }
  memo.emplace(i, best);
  return best;
}
}  // namespace

Nat rank(const HFCode& x) {
  std::map<unsigned long, Nat> memo;
  Nat best = 0;
  for (unsigned long i : member_indices(x)) {
    Nat r = rank_of_index(i, memo) + 1;
    if (r > best) best = r;
  }
  return best;
}

HFCode transitive_closure(const HFCode& x) {
  Nat tc = 0;
  std::vector<unsigned long> work = member_indices(x);
  while (!work.empty()) {
    unsigned long i = work.back();
    work.pop_back();
    if (mpz_tstbit(tc.get_mpz_t(), i)) continue;
    mpz_setbit(tc.get_mpz_t(), i);
    for (unsigned long j : member_indices(HFCode(i))) work.push_back(j);
  }
  return HFCode(tc);
}

bool is_transitive(const HFCode& x) {
  for (unsigned long i : member_indices(x))
    if (!subset(HFCode(i), x)) return false;
  return true;
}

std::optional<unsigned> level_index(const HFCode& x, const Budget& b) {
  Nat level = 0;
  unsigned z = 1;
  while (true) {
    if (level == x.value()) return z;
    if (level > x.value()) return std::nullopt;
    Nat width = level + 1;
    if (width > static_cast<unsigned long>(b.max_bits)) return std::nullopt;
    Nat next = 0;
    mpz_setbit(next.get_mpz_t(), width.get_ui());
    level = next - 1;
    ++z;
  }
}

std::string code_to_string(const HFCode& x, bool hex) {
  return hex ? "0x" + x.value().get_str(16) : x.value().get_str(10);
}

HFCode code_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty code literal");
  Nat v;
  int rc;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
    rc = v.set_str(s.substr(2), 16);
  else
    rc = v.set_str(s, 10);
  if (rc != 0 || sgn(v) < 0) throw std::invalid_argument("bad code literal: " + s);
  return HFCode(v);
}

std::string set_notation(const HFCode& x, unsigned max_depth) {
  if (max_depth == 0) return code_to_string(x);
  std::string out = "{";
  bool first = true;
  for (unsigned long i : member_indices(x)) {
    if (!first) out += ",";
    first = false;
    out += set_notation(HFCode(i), max_depth - 1);
  }
  return out + "}";
}

}  // namespace hfkit
