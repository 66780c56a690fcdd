#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hfkit/hfcode.hpp"

using namespace hfkit;

namespace {

const Budget kB;  // default: 2^20 bits

// Independent oracle: membership by direct bit inspection on small values.
bool bit_oracle(unsigned long x, unsigned long y) { return x < 64 && ((y >> x) & 1ul) != 0; }

HFCode hc(unsigned long v) { return HFCode(v); }

// Oracle: powerset by explicit subset enumeration over member lists.
unsigned long powerset_oracle(unsigned long x) {
  std::vector<unsigned long> ms;
  for (unsigned long i = 0; i < 63; ++i)
    if ((x >> i) & 1ul) ms.push_back(i);
  unsigned long r = 0;
  for (unsigned long pick = 0; pick < (1ul << ms.size()); ++pick) {
    unsigned long code = 0;
    for (std::size_t j = 0; j < ms.size(); ++j)
      if ((pick >> j) & 1ul) code |= 1ul << ms[j];
    r |= 1ul << code;  // callers keep codes < 64
  }
  return r;
}

}  // namespace

TEST_CASE("mem agrees with bit inspection") {
  CHECK_FALSE(mem(hc(0), hc(0)));
  CHECK(mem(hc(0), hc(5)));       // 5 = 101b
  CHECK_FALSE(mem(hc(1), hc(5)));
  for (unsigned long y = 0; y < 256; ++y)
    for (unsigned long x = 0; x < 10; ++x) CHECK(mem(hc(x), hc(y)) == bit_oracle(x, y));
}

TEST_CASE("mem agrees with the divmod characterization") {
  // x in y iff exist z,w with y = z*2^{x+1} + w, w < 2^{x+1}, w >= 2^x.
  for (unsigned long y = 0; y < (1u << 16); y += 37)
    for (unsigned long x = 0; x < 16; ++x) {
      unsigned long p = 1ul << (x + 1);
      unsigned long w = y % p;
      bool formula = w >= (1ul << x);  // z = y / p is forced
      CHECK(mem(hc(x), hc(y)) == formula);
    }
}

TEST_CASE("insert") {
  CHECK(insert(hc(0), hc(0), kB)->value() == 1);
  CHECK(insert(hc(1), hc(1), kB)->value() == 3);
  CHECK(insert(hc(3), hc(2), kB)->value() == 7);
  // beyond budget: adjoining a set whose code is >= max_bits
  Budget tiny{16};
  CHECK_FALSE(insert(hc(0), hc(100), tiny).has_value());
}

TEST_CASE("union, subset, singleton") {
  CHECK(union_of(hc(5), hc(3)).value() == 7);
  for (unsigned long n = 0; n < 64; ++n) CHECK(subset(hc(0), hc(n)));
  CHECK_FALSE(subset(hc(2), hc(1)));
  CHECK(singleton(hc(3), kB)->value() == 8);
  Budget tiny{8};
  CHECK_FALSE(singleton(hc(9), tiny).has_value());
}

TEST_CASE("kuratowski pairs decode uniquely below 8") {
  CHECK(kuratowski_pair(hc(0), hc(0), kB)->value() == 2);
  CHECK(kuratowski_pair(hc(0), hc(1), kB)->value() == 10);
  std::set<Nat> seen;
  for (unsigned long a = 0; a < 8; ++a)
    for (unsigned long b = 0; b < 8; ++b) {
      auto p = kuratowski_pair(hc(a), hc(b), kB);
      REQUIRE(p.has_value());
      CHECK(seen.insert(p->value()).second);  // injective on this range
    }
}

TEST_CASE("powerset") {
  CHECK(powerset(hc(0), kB)->value() == 1);
  CHECK(powerset(hc(3), kB)->value() == 15);
  CHECK(powerset(hc(2), kB)->value() == 5);
  for (unsigned long x = 0; x < 32; ++x)
    CHECK(powerset(hc(x), kB)->value() == powerset_oracle(x));
  Budget tiny{64};
  CHECK_FALSE(powerset(hc(100), tiny).has_value());
}

TEST_CASE("superexp recurrence") {
  CHECK(superexp(0, 0, kB)->value() == 0);
  CHECK(superexp(0, 1, kB)->value() == 1);
  CHECK(superexp(0, 5, kB)->value() == 65536);
  Budget desk{1000000};
  CHECK_FALSE(superexp(0, 7, desk).has_value());
  CHECK(superexp(0, 6, desk).has_value());  // 65537 bits
  // iterate the recurrence independently
  Nat r = 3;
  for (int i = 0; i < 3; ++i) {
    Nat t = 1;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), r.get_ui());
    r = t;
  }
  CHECK(superexp(3, 3, kB)->value() == r);
}

TEST_CASE("vbar hits the level chain") {
  CHECK(vbar(hc(0), kB)->value() == 0);
  CHECK(vbar(hc(1), kB)->value() == 1);
  CHECK(vbar(hc(2), kB)->value() == 3);
  CHECK(vbar(hc(16), kB)->value() == 65535);
  CHECK(vbar(hc(65535), kB)->value() == 65535);
  // candidates are 0,1,3,15,65535,...
  for (unsigned long x = 4; x <= 15; ++x) CHECK(vbar(hc(x), kB)->value() == 15);
  Budget tiny{16};
  CHECK_FALSE(vbar(hc(65536), tiny).has_value());
}

TEST_CASE("vbar(x) <= 2^x") {
  for (unsigned long x = 0; x < (1u << 12); ++x) {
    Nat two_x = 0;
    mpz_setbit(two_x.get_mpz_t(), x);
    auto v = vbar(hc(x), kB);
    REQUIRE(v.has_value());
    CHECK(v->value() <= two_x);
  }
}

TEST_CASE("in_cut") {
  CHECK(in_cut(0, kB) == CutVerdict::InCut);
  Budget desk{1000000};
  CHECK(in_cut(5, desk) == CutVerdict::InCut);
  CHECK(in_cut(7, desk) == CutVerdict::BudgetExceeded);
}

TEST_CASE("rank, transitive closure, transitivity") {
  CHECK(rank(hc(0)) == 0);
  CHECK(is_transitive(hc(0)));
  CHECK(rank(hc(11)) == 3);
  CHECK(is_transitive(hc(11)));
  CHECK(transitive_closure(hc(4)).value() == 7);
  CHECK_FALSE(is_transitive(hc(2)));
  // rank via the level chain: rank(x) = level index of vbar(x) minus one
  for (unsigned long x = 0; x < 1024; ++x) {
    auto v = vbar(hc(x), kB);
    auto z = level_index(*v, kB);
    REQUIRE(z.has_value());
    CHECK(rank(hc(x)) == *z - 1);
  }
}

TEST_CASE("vcl properties at small scale") {
  const unsigned long N = 1u << 10;
  for (unsigned long x = 0; x < N; ++x) {
    auto v = vbar(hc(x), kB);
    REQUIRE(v.has_value());
    CHECK(subset(hc(x), *v));       // (1)
    CHECK(is_transitive(*v));       // (2)
    CHECK(vbar(*v, kB)->value() == v->value());  // (5)
  }
  // (6) trichotomy, sampled here; the acceptance suite sweeps the full square
  for (unsigned long x = 0; x < 64; ++x)
    for (unsigned long y = 0; y < 64; ++y) {
      auto vx = *vbar(hc(x), kB), vy = *vbar(hc(y), kB);
      int holds = int(mem(vx, vy)) + int(vx == vy) + int(mem(vy, vx));
      CHECK(holds == 1);
    }
}

TEST_CASE("vcl subset closure and vbar closure") {
  const unsigned long N = 1u << 8;
  for (unsigned long x = 0; x < N; ++x) {
    auto v = *vbar(hc(x), kB);
    for (unsigned long y : member_indices(v)) {
      // (3): every subset of a member is a member
      unsigned long s = y;
      while (true) {
        CHECK(mem(hc(s), v));
        if (s == 0) break;
        s = (s - 1) & y;
      }
      // (4): vbar of a member is a member
      CHECK(mem(*vbar(hc(y), kB), v));
    }
  }
}

TEST_CASE("regularity: an Ackermann-minimal member exists") {
  for (unsigned long x = 1; x < (1u << 16); ++x) {
    bool found = false;
    for (unsigned long m : member_indices(hc(x)))
      if ((x & m) == 0) {
        found = true;
        break;
      }
    CHECK(found);
  }
}

TEST_CASE("no self-membership") {
  for (unsigned long x = 0; x < (1u << 16); ++x) CHECK_FALSE(mem(hc(x), hc(x)));
}

TEST_CASE("powerset of a level is the next level") {
  for (unsigned z = 1; z <= 4; ++z) {
    Nat lo = superexp(0, z, kB)->value() - 1;
    Nat hi = superexp(0, z + 1, kB)->value() - 1;
    CHECK(powerset(HFCode(lo), kB)->value() == hi);
  }
}

TEST_CASE("serialization") {
  CHECK(code_to_string(hc(65535)) == "65535");
  CHECK(code_to_string(hc(65535), true) == "0xffff");
  CHECK(code_from_string("0xffff").value() == 65535);
  CHECK(code_from_string("123").value() == 123);
  CHECK_THROWS_AS(code_from_string("xyz"), std::invalid_argument);
  CHECK(set_notation(hc(0)) == "{}");
  CHECK(set_notation(hc(3)) == "{{},{{}}}");
  CHECK(set_notation(hc(3), 1) == "{0,1}");
}
