#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <optional>

#include "iqf/field.hpp"
#include "iqf/primary.hpp"

using namespace iqf;

namespace {

Elem E(int d, long a, long b) { return Elem(d, a, b); }

bool is_odd_elem(const Elem& x) { return norm(x).is_odd(); }

bool cong_mod4(const Elem& x, const Elem& y) {
  Elem z = x - y;
  return Int::divides(Int(4), z.a) && Int::divides(Int(4), z.b);
}

// (t, t') by brute force: x = base^t * base2^t' * c^2 (mod 4) for some c in O/4.
ParityData parity_oracle(const Elem& x) {
  int d = x.d;
  Elem base = d % 2 ? Elem(d, 0, 0) : E(d, 1, 1);
  Elem base2 = d % 2 ? Elem(d, 0, 0) : E(d, -1, 0);
  if (d % 2) {
    // sqrt d and 1 + 2 sqrt d in the basis 1, omega with omega = (1 + sqrt d)/2
    base = E(d, -1, 2);
    base2 = E(d, 0, 4) + E(d, 1, 0) - E(d, 2, 0);  // 1 + 2 sqrt d = -1 + 4 omega
  }
  std::optional<ParityData> found;
  for (int t = 0; t < 2; ++t)
    for (int tp = 0; tp < 2; ++tp)
      for (int ca = 0; ca < 4; ++ca)
        for (int cb = 0; cb < 4; ++cb) {
          Elem c = E(d, ca, cb);
          Elem y = pow(base, unsigned(t)) * pow(base2, unsigned(tp)) * c * c;
          if (cong_mod4(x, y)) {
            if (found && (found->t != t || found->t_prime != tp)) FAIL("parity pair not unique");
            found = ParityData{t, tp};
          }
        }
  REQUIRE(found.has_value());
  return *found;
}

std::vector<Elem> primary_upto(int d, int64_t R, PrimaryKind kind) {
  std::vector<Elem> v;
  for (const Elem& x : enumerate_norm_range(d, 1, R))
    if (is_primary(x, kind)) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("primary examples") {
  CHECK(is_primary(E(-1, -1, 2)));
  CHECK_FALSE(is_primary(E(-1, 1, 2)));
  CHECK(is_primary(E(-1, -1, -2)));
  CHECK(is_primary(Elem::omega(-11)));
  CHECK(is_primary(E(-1, 1, 1)));
  CHECK(is_primary(E(-3, 2, -1)));
  CHECK(is_primary(E(-3, 2, -1), PrimaryKind::e_primary));
  CHECK(is_primary(E(-3, 2, 0), PrimaryKind::e_primary));
  CHECK(is_primary(Elem::omega(-2)));
  CHECK(is_primary(Elem::omega(-7)));
  CHECK(is_primary(E(-43, 2, 0)));
  CHECK_THROWS_AS(is_primary(E(-1, 1, 0), PrimaryKind::e_primary), std::invalid_argument);

  auto [u, y] = canonical_primary(E(-1, 2, 1));
  CHECK(y == E(-1, -1, 2));
  CHECK(u * y == E(-1, 2, 1));
  CHECK(canonical_primary(E(-1, 2, -1)).second == E(-1, -1, -2));
  auto one = canonical_primary(E(-7, 1, 0));
  CHECK(one.first == E(-7, 1, 0));
  CHECK(one.second == E(-7, 1, 0));
}

TEST_CASE("d = -3 primary conventions") {
  // n = 1 mod 3 for cubic work
  CHECK(is_primary(E(-3, 1, 0)));
  CHECK(is_primary(E(-3, -2, 3)));
  CHECK_FALSE(is_primary(E(-3, -1, 0)));
  // rho coordinates round trip
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b) {
      auto [ra, rb] = rho_coords(E(-3, a, b));
      CHECK(from_rho_coords(ra, rb) == E(-3, a, b));
    }
  // rho itself is a cube root of unity
  Elem rho = from_rho_coords(Int(0), Int(1));
  CHECK(pow(rho, 3) == E(-3, 1, 0));
  CHECK(rho != E(-3, 1, 0));
}

TEST_CASE("uniqueness of the primary associate up to norm 2000") {
  for (int d : kFields) {
    std::vector<PrimaryKind> kinds{PrimaryKind::primary};
    if (d == -3) kinds.push_back(PrimaryKind::e_primary);
    for (auto kind : kinds) {
      int bad = 0;
      for (const Elem& x : enumerate_norm_range(d, 1, 2000)) {
        int hits = 0;
        for (const Elem& u : field_data(d).units) hits += is_primary(u * x, kind);
        if (hits != 1) ++bad;
        auto [uu, y] = canonical_primary(x, kind);
        if (!(uu * y == x) || !is_unit(uu) || !is_primary(y, kind)) ++bad;
      }
      CHECK_MESSAGE(bad == 0, "d=" << d);
    }
  }
}

TEST_CASE("closure under multiplication up to norm 200") {
  for (int d : kFields) {
    std::vector<PrimaryKind> kinds{PrimaryKind::primary};
    if (d == -3) kinds.push_back(PrimaryKind::e_primary);
    for (auto kind : kinds) {
      auto P = primary_upto(d, 200, kind);
      int bad = 0;
      for (const Elem& x : P)
        for (const Elem& y : P) bad += !is_primary(x * y, kind);
      CHECK_MESSAGE(bad == 0, "d=" << d);
    }
  }
}

TEST_CASE("t_pair table against the mod 4 definition") {
  CHECK(t_pair(E(-11, 1, 0)).t == 0);
  CHECK(t_pair(E(-11, 1, 0)).t_prime == 0);
  CHECK(t_pair(E(-11, -1, 0)).t == 0);
  CHECK(t_pair(E(-11, -1, 0)).t_prime == 1);
  CHECK_THROWS(t_pair(E(-11, 2, 0)));
  CHECK_THROWS(t_pair(E(-1, 1, 0)));
  for (int d : kFields) {
    if (d == -1 || d == -3) continue;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Elem x = E(d, a, b);
        if (!is_odd_elem(x)) continue;
        ParityData got = t_pair(x), want = parity_oracle(x);
        CHECK_MESSAGE(got.t == want.t, "d=" << d << " x=" << x.str());
        CHECK_MESSAGE(got.t_prime == want.t_prime, "d=" << d << " x=" << x.str());
        // primary classes: t = t', except d = -2 where they are t' = 0
        CHECK(is_primary(x) == (d == -2 ? got.t_prime == 0 : got.t == got.t_prime));
        CHECK(got.t == (Int::floor_mod(norm(x), Int(4)) == Int(3) ? 1 : 0));
      }
  }
}

TEST_CASE("parity exponent reduces to the norm formula for primary pairs") {
  for (int d : kFields) {
    if (d == -1 || d == -3) continue;
    std::vector<Elem> odd;
    for (const Elem& x : primary_upto(d, 120, PrimaryKind::primary))
      if (is_odd_elem(x)) odd.push_back(x);
    int bad = 0;
    for (const Elem& n : odd)
      for (const Elem& m : odd) {
        auto tn = t_pair(n), tm = t_pair(m);
        int T = tn.t * tm.t_prime + tn.t_prime * tm.t + tn.t * tm.t;
        Int e = Int::exact_div(norm(n) - Int(1), Int(2)) * Int::exact_div(norm(m) - Int(1), Int(2));
        bad += (T % 2) != int(Int::floor_mod(e, Int(2)).small());
      }
    CHECK_MESSAGE(bad == 0, "d=" << d);
  }
}

TEST_CASE("E-primary cube criterion") {
  int checked = 0;
  for (const Elem& n : primary_upto(-3, 2000, PrimaryKind::e_primary)) {
    if (Int::divides(Int(2), norm(n)) || Int::divides(Int(3), norm(n))) continue;
    auto [c, dd] = rho_coords(pow(n, 3));
    CHECK(Int::divides(Int(6), dd));
    CHECK(Int::floor_mod(c + dd, Int(4)) == Int(1));
    ++checked;
  }
  CHECK(checked > 100);
}
