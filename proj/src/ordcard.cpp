#include "hfkit/ordcard.hpp"

#include <map>
#include <stdexcept>

namespace hfkit::ordcard {

bool is_ordinal(const HFCode& x) {
  if (!is_transitive(x)) return false;
  for (unsigned long i : member_indices(x))
    if (!is_transitive(HFCode(i))) return false;
  return true;
}

std::optional<OrdCode> make_ordinal(const HFCode& x) {
  if (!is_ordinal(x)) return std::nullopt;
  return OrdCode{x};
}

PartialCode on_code(const Nat& n, const Budget& b) {
  Nat r = 0;
  for (Nat i = 0; i < n; ++i) {
    if (r >= static_cast<unsigned long>(b.max_bits)) return std::nullopt;
    unsigned long e = r.get_ui();
    mpz_setbit(r.get_mpz_t(), e);  // r + 2^r: bit r is fresh (r < 2^r)
  }
  return HFCode(r);
}

Nat on_inv(const HFCode& x) {
  if (!is_ordinal(x)) throw std::invalid_argument("on_inv: not an ordinal code");
  return Nat(x.member_count());
}

PartialOrd ord_succ(const OrdCode& a, const Budget& b) {
  auto s = insert(a.code, a.code, b);
  if (!s) return std::nullopt;
  return OrdCode{*s};
}

namespace {

// Recursion on the right argument; members of an ordinal code are the
// smaller ordinals, as bit positions.
PartialCode add_rec(const HFCode& a, unsigned long beta, const Budget& b,
                    std::map<unsigned long, HFCode>& memo) {
  auto it = memo.find(beta);
  if (it != memo.end()) return it->second;
  Nat sup = a.value();  // sup({a} ∪ ...)
  for (unsigned long g : member_indices(HFCode(beta))) {
    auto t = add_rec(a, g, b, memo);
    if (!t) return std::nullopt;
    auto s = insert(*t, *t, b);
    if (!s) return std::nullopt;
    sup |= s->value();
  }
  HFCode r{Nat(sup)};
  memo.emplace(beta, r);
  return r;
}

}  // namespace

PartialOrd ord_add(const OrdCode& a, const OrdCode& c, const Budget& b) {
  // The right argument's code is itself a valid "member index" for the
  // recursion, so run it at a synthetic top node.
  std::map<unsigned long, HFCode> memo;
  Nat sup = a.code.value();
  for (unsigned long g : member_indices(c.code)) {
    auto t = add_rec(a.code, g, b, memo);
    if (!t) return std::nullopt;
    auto s = insert(*t, *t, b);
    if (!s) return std::nullopt;
    sup |= s->value();
  }
  return OrdCode{HFCode(sup)};
}

namespace {

PartialCode mul_rec(const HFCode& a, unsigned long beta, const Budget& b,
                    std::map<unsigned long, HFCode>& memo) {
  auto it = memo.find(beta);
  if (it != memo.end()) return it->second;
  Nat sup = 0;  // sup of the empty family is 0
  for (unsigned long g : member_indices(HFCode(beta))) {
    auto t = mul_rec(a, g, b, memo);
    if (!t) return std::nullopt;
    auto s = ord_add(OrdCode{*t}, OrdCode{a}, b);
    if (!s) return std::nullopt;
    sup |= s->code.value();
  }
  HFCode r{Nat(sup)};
  memo.emplace(beta, r);
  return r;
}

PartialCode exp2_rec(unsigned long alpha, const Budget& b,
                     std::map<unsigned long, HFCode>& memo) {
  auto it = memo.find(alpha);
  if (it != memo.end()) return it->second;
  Nat sup = 1;  // sup({S(0)} ∪ ...): ordinal 1 has code 1
  for (unsigned long g : member_indices(HFCode(alpha))) {
    auto t = exp2_rec(g, b, memo);
    if (!t) return std::nullopt;
    auto s = ord_add(OrdCode{*t}, OrdCode{*t}, b);
    if (!s) return std::nullopt;
    sup |= s->code.value();
  }
  HFCode r{Nat(sup)};
  memo.emplace(alpha, r);
  return r;
}

}  // namespace

PartialOrd ord_mul(const OrdCode& a, const OrdCode& c, const Budget& b) {
  std::map<unsigned long, HFCode> memo;
  Nat sup = 0;
  for (unsigned long g : member_indices(c.code)) {
    auto t = mul_rec(a.code, g, b, memo);
    if (!t) return std::nullopt;
    auto s = ord_add(OrdCode{*t}, a, b);
    if (!s) return std::nullopt;
    sup |= s->code.value();
  }
  return OrdCode{HFCode(sup)};
}

PartialOrd ord_exp2(const OrdCode& a, const Budget& b) {
  std::map<unsigned long, HFCode> memo;
  Nat sup = 1;
  for (unsigned long g : member_indices(a.code)) {
    auto t = exp2_rec(g, b, memo);
    if (!t) return std::nullopt;
    auto s = ord_add(OrdCode{*t}, OrdCode{*t}, b);
    if (!s) return std::nullopt;
    sup |= s->code.value();
  }
  return OrdCode{HFCode(sup)};
}

Nat card_nat(const HFCode& x) { return Nat(x.member_count()); }

namespace {

// Smallest level (by index z: code 2^0_z - 1) containing an n-element set,
// together with that level's element count 2^0_{z-1}. Overflow when the
// level's element count would exceed the budget-driven enumeration cap.
struct Level {
  Nat count;  // number of elements
};

std::optional<Level> minimal_level_for(const Nat& n, const Budget& b) {
  // Elements of the level with count m are the codes 0..m-1; an n-element
  // set exists among them iff 2^n - 1 < m, i.e. n == 0 and m >= 1, or m >= 2^n.
  Nat count = 0;  // V_0 has no elements
  while (true) {
    bool has = false;
    if (n == 0)
      has = count >= 1;
    else if (n < static_cast<unsigned long>(b.max_bits)) {
      Nat need = 0;
      mpz_setbit(need.get_mpz_t(), n.get_ui());
      has = count >= need;
    }
    if (has) return Level{count};
    // next level's element count is 2^count
    if (count >= static_cast<unsigned long>(b.max_bits)) return std::nullopt;
    Nat next = 0;
    mpz_setbit(next.get_mpz_t(), count.get_ui());
    count = next;
  }
}

}  // namespace

PartialCard zf_card(const HFCode& x, const Budget& b) {
  Nat n = card_nat(x);
  auto lvl = minimal_level_for(n, b);
  if (!lvl) return std::nullopt;
  // The result has one bit per level element, so its width is the level size.
  if (lvl->count > static_cast<unsigned long>(b.max_bits)) return std::nullopt;
  unsigned long count = lvl->count.get_ui();
  unsigned long nn = n.get_ui();
  Nat r = 0;
  for (unsigned long y = 0; y < count; ++y) {
    if (static_cast<unsigned long>(__builtin_popcountll(y)) == nn)
      mpz_setbit(r.get_mpz_t(), y);
  }
  return CardCode{HFCode(r)};
}

PartialCard k_iso(const Nat& n, const Budget& b) {
  if (n >= static_cast<unsigned long>(b.max_bits)) return std::nullopt;
  Nat canon = 0;  // {0,...,n-1}
  for (unsigned long i = 0; i < n.get_ui(); ++i) mpz_setbit(canon.get_mpz_t(), i);
  return zf_card(HFCode(canon), b);
}

HFCode representative(const CardCode& c) {
  auto ms = member_indices(c.code);
  if (ms.empty()) throw std::invalid_argument("representative: empty cardinal code");
  return HFCode(ms.front());
}

bool is_cardinal(const HFCode& c, const Budget& b) {
  if (c.is_empty()) return false;
  auto z = zf_card(HFCode(member_indices(c).front()), b);
  return z && z->code == c;
}

PartialCard l_iso(const HFCode& x, const Budget& b) {
  // Empty sum is the zero cardinal.
  auto acc = k_iso(0, b);
  if (!acc) return std::nullopt;
  for (unsigned long y : member_indices(x)) {
    auto ly = l_iso(HFCode(y), b);
    if (!ly) return std::nullopt;
    auto p = card_exp2(*ly, b);
    if (!p) return std::nullopt;
    acc = card_add(*acc, *p, b);
    if (!acc) return std::nullopt;
  }
  return acc;
}

namespace {

// Disjoint union x×{∅} ∪ y×{{∅}} as Kuratowski pairs.
PartialCode disjoint_union(const HFCode& x, const HFCode& y, const Budget& b) {
  Nat r = 0;
  for (unsigned long u : member_indices(x)) {
    auto p = kuratowski_pair(HFCode(u), HFCode(0ul), b);
    if (!p || !p->value().fits_ulong_p() || p->value().get_ui() >= b.max_bits)
      return std::nullopt;
    mpz_setbit(r.get_mpz_t(), p->value().get_ui());
  }
  for (unsigned long v : member_indices(y)) {
    auto p = kuratowski_pair(HFCode(v), HFCode(1ul), b);
    if (!p || !p->value().fits_ulong_p() || p->value().get_ui() >= b.max_bits)
      return std::nullopt;
    mpz_setbit(r.get_mpz_t(), p->value().get_ui());
  }
  return HFCode(r);
}

}  // namespace

PartialCard card_add(const CardCode& a, const CardCode& c, const Budget& b) {
  auto du = disjoint_union(representative(a), representative(c), b);
  if (!du) return std::nullopt;
  return zf_card(*du, b);
}

PartialCard card_mul(const CardCode& a, const CardCode& c, const Budget& b) {
  Nat r = 0;
  HFCode x = representative(a), y = representative(c);
  for (unsigned long u : member_indices(x))
    for (unsigned long v : member_indices(y)) {
      auto p = kuratowski_pair(HFCode(u), HFCode(v), b);
      if (!p || !p->value().fits_ulong_p() || p->value().get_ui() >= b.max_bits)
        return std::nullopt;
      mpz_setbit(r.get_mpz_t(), p->value().get_ui());
    }
  return zf_card(HFCode(r), b);
}

PartialCard card_exp2(const CardCode& a, const Budget& b) {
  auto p = powerset(representative(a), b);
  if (!p) return std::nullopt;
  return zf_card(*p, b);
}

PartialCard card_succ(const CardCode& a, const Budget& b) {
  HFCode x = representative(a);
  auto s = insert(x, x, b);  // x ∪ {x} has one more member
  if (!s) return std::nullopt;
  return zf_card(*s, b);
}

bool card_le(const CardCode& a, const CardCode& c) {
  return representative(a).member_count() <= representative(c).member_count();
}

}  // namespace hfkit::ordcard
