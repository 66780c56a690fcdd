#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hfkit/ordcard.hpp"

#include <map>

using namespace hfkit;
using namespace hfkit::ordcard;

namespace {
const Budget kB;
HFCode hc(unsigned long v) { return HFCode(v); }
OrdCode ord(const HFCode& c) { return *make_ordinal(c); }

// Oracle: the paper's recurrence by plain addition, on(x+1) = on(x) + 2^on(x).
HFCode on_oracle(unsigned n) {
  Nat r = 0;
  for (unsigned i = 0; i < n; ++i) {
    Nat p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), r.get_ui());
    r += p;
  }
  return HFCode(r);
}
}  // namespace

TEST_CASE("is_ordinal") {
  CHECK(is_ordinal(hc(0)));
  CHECK(is_ordinal(hc(3)));
  CHECK_FALSE(is_ordinal(hc(2)));
  CHECK(is_ordinal(hc(11)));
}

TEST_CASE("on and its inverse") {
  CHECK(on_code(0, kB)->value() == 0);
  CHECK(on_code(3, kB)->value() == 11);
  CHECK(on_code(4, kB)->value() == 2059);
  // cross-check bits {0,1,3,11}
  CHECK(on_code(4, kB)->value() == (1 + 2 + (1 << 3) + (1 << 11)));
  for (unsigned n = 0; n <= 5; ++n) {
    auto c = on_code(n, kB);
    REQUIRE(c.has_value());
    CHECK(*c == on_oracle(n));
    CHECK(on_inv(*c) == n);
  }
  CHECK(on_inv(hc(11)) == 3);
  CHECK_THROWS_AS(on_inv(hc(2)), std::invalid_argument);
  Budget tiny{32};
  CHECK_FALSE(on_code(5, tiny).has_value());
}

TEST_CASE("on equals iterated ord_succ") {
  HFCode cur(0ul);
  for (unsigned n = 1; n <= 5; ++n) {
    auto s = ord_succ(ord(cur), kB);
    REQUIRE(s.has_value());
    cur = s->code;
    CHECK(cur == *on_code(n, kB));
  }
}

TEST_CASE("ordinal arithmetic against natural arithmetic through on") {
  CHECK(ord_succ(ord(hc(3)), kB)->code.value() == 11);
  // additions/multiplications whose result stays <= on(5)
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; a + b <= 5; ++b) {
      auto lhs = ord_add(ord(*on_code(a, kB)), ord(*on_code(b, kB)), kB);
      REQUIRE(lhs.has_value());
      CHECK(lhs->code == *on_code(a + b, kB));
    }
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; b <= 5; ++b) {
      if (a * b > 5) continue;
      auto lhs = ord_mul(ord(*on_code(a, kB)), ord(*on_code(b, kB)), kB);
      REQUIRE(lhs.has_value());
      CHECK(lhs->code == *on_code(a * b, kB));
    }
  for (unsigned a = 0; a <= 2; ++a) {
    auto lhs = ord_exp2(ord(*on_code(a, kB)), kB);
    REQUIRE(lhs.has_value());
    CHECK(lhs->code == *on_code(1u << a, kB));
  }
  // on(8) would need ~2^2059 bits; the budget realizes the partiality.
  CHECK_FALSE(ord_exp2(ord(*on_code(3, kB)), kB).has_value());
}

TEST_CASE("card_nat") {
  CHECK(card_nat(hc(0)) == 0);
  CHECK(card_nat(hc(11)) == 3);
  Nat v = 0;
  for (int i = 0; i < 16; ++i) mpz_setbit(v.get_mpz_t(), i);
  CHECK(card_nat(HFCode(v)) == 16);
}

TEST_CASE("zf_card frozen values") {
  CHECK(zf_card(hc(0), kB)->code.value() == 1);
  CHECK(zf_card(hc(1), kB)->code.value() == 2);
  CHECK(zf_card(hc(7), kB)->code.value() == 26752);  // {7,11,13,14} as bits
}

TEST_CASE("zf_card depends only on the member count") {
  std::map<std::size_t, Nat> by_count;
  for (unsigned long x = 0; x < 256; ++x) {
    auto c = zf_card(hc(x), kB);
    REQUIRE(c.has_value());
    auto [it, fresh] = by_count.emplace(hc(x).member_count(), c->code.value());
    if (!fresh) CHECK(c->code.value() == it->second);
  }
}

TEST_CASE("k_iso frozen values and coherence with zf_card") {
  CHECK(k_iso(0, kB)->code.value() == 1);
  CHECK(k_iso(1, kB)->code.value() == 2);
  CHECK(k_iso(2, kB)->code.value() == 8);
  CHECK(k_iso(3, kB)->code.value() == 26752);
  CHECK(k_iso(4, kB)->code.value() == 32768);
  // k(5): the popcount-5 codes below 2^16, one bit each; check independently
  auto k5 = k_iso(5, kB);
  REQUIRE(k5.has_value());
  Nat expect = 0;
  for (unsigned long y = 0; y < (1u << 16); ++y)
    if (mpz_popcount(Nat(y).get_mpz_t()) == 5) mpz_setbit(expect.get_mpz_t(), y);
  CHECK(k5->code.value() == expect);
}

TEST_CASE("cardinal validation and representatives") {
  CHECK(representative(*k_iso(2, kB)).value() == 3);
  CHECK(is_cardinal(k_iso(3, kB)->code, kB));
  CHECK_FALSE(is_cardinal(hc(6), kB));  // {1,2}: members not a full level slice
}

TEST_CASE("l_iso equals k_iso on x <= 5") {
  CHECK(l_iso(hc(0), kB)->code.value() == 1);
  CHECK(l_iso(hc(2), kB)->code.value() == 8);
  CHECK(l_iso(hc(3), kB)->code == k_iso(3, kB)->code);
  for (unsigned long x = 0; x <= 5; ++x) CHECK(l_iso(hc(x), kB)->code == k_iso(x, kB)->code);
}

TEST_CASE("cardinal arithmetic matches natural arithmetic through k") {
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b)
      CHECK(card_add(*k_iso(a, kB), *k_iso(b, kB), kB)->code == k_iso(a + b, kB)->code);
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b) {
      if (a * b > 4) continue;
      CHECK(card_mul(*k_iso(a, kB), *k_iso(b, kB), kB)->code == k_iso(a * b, kB)->code);
    }
  CHECK(card_exp2(*k_iso(2, kB), kB)->code.value() == 32768);
  CHECK(card_succ(*k_iso(2, kB), kB)->code == k_iso(3, kB)->code);
  // additive identity for an assortment of cardinals
  for (unsigned n = 0; n <= 4; ++n) {
    auto c = *k_iso(n, kB);
    CHECK(card_add(*k_iso(0, kB), c, kB)->code == c.code);
  }
}

TEST_CASE("card_le is the numeric order through k") {
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b)
      CHECK(card_le(*k_iso(a, kB), *k_iso(b, kB)) == (a <= b));
}

TEST_CASE("representative independence of card_add") {
  // any representative gives the same sum cardinal (checked via distinct
  // 2-element sets)
  auto c2 = *k_iso(2, kB);
  for (unsigned long rep : {3ul, 5ul, 6ul, 9ul}) {
    auto z = zf_card(hc(rep), kB);
    REQUIRE(z->code == c2.code);
  }
}
