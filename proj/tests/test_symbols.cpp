#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "iqf/field.hpp"
#include "iqf/primary.hpp"
#include "iqf/residues.hpp"
#include "iqf/symbols.hpp"

using namespace iqf;

namespace {

Elem E(int d, long a, long b) { return Elem(d, a, b); }

std::vector<std::pair<int, int>> supported_pairs() {
  std::vector<std::pair<int, int>> v;
  for (int d : kFields)
    for (int j : {2, 3, 4, 6})
      if (order_supported(d, j)) v.push_back({d, j});
  return v;
}

// Denominators allowed for order j: every prime factor has norm = 1 mod j.
bool admissible(const Elem& n, int j) {
  int64_t N = norm(n).to_int64();
  return std::gcd(N, int64_t(j == 4 ? 2 : j)) == 1;
}

std::vector<Elem> primaries(int d, int64_t R, PrimaryKind kind) {
  std::vector<Elem> v;
  for (const Elem& x : enumerate_norm_range(d, 1, R))
    if (is_primary(x, kind)) v.push_back(x);
  return v;
}

std::vector<Elem> prime_elems(int d, int64_t R) {
  std::vector<Elem> v;
  for (int64_t p = 2; p <= R; ++p) {
    if (!is_prime_u64(uint64_t(p))) continue;
    for (const Elem& pi : primes_above(d, p))
      if (norm(pi) <= Int(R)) v.push_back(pi);
  }
  return v;
}

}  // namespace

TEST_CASE("compatibility") {
  CHECK(order_supported(-1, 4));
  CHECK_FALSE(order_supported(-7, 4));
  CHECK(order_supported(-3, 6));
  CHECK_FALSE(order_supported(-1, 3));
  CHECK_THROWS_AS(symbol(E(-7, 1, 0), E(-7, 3, 0), 4), IncompatibleOrder);
  CHECK(compatibility_table().find("-163") != std::string::npos);
}

TEST_CASE("symbol examples") {
  Elem n = E(-1, -1, 2);
  CHECK(symbol(E(-1, 0, 1), n, 4) == RootOfUnity{1, 4, false});
  CHECK(symbol(E(-1, 1, 1), n, 4) == RootOfUnity{2, 4, false});
  CHECK(symbol(E(-1, 1, 0), n, 4) == RootOfUnity::one(4));
  CHECK(symbol(E(-1, -1, 2) * E(-1, 3, 0), n, 4).is_zero);
  CHECK(symbol(E(-11, 3, 1), E(-11, 1, 0), 2) == RootOfUnity::one(2));
  CHECK(unit_symbol(E(-1, -1, 0), E(-1, -1, 2), 2) == RootOfUnity::one(2));
  CHECK(unit_symbol(E(-1, 0, 1), E(-1, -1, 2), 2) == RootOfUnity{1, 2, false});
  // the closed form breaks at 3 and 4 in Q(sqrt -3)
  CHECK(symbol(Elem::omega(-3), E(-3, 4, 0), 3) == RootOfUnity{1, 3, false});
  CHECK_THROWS(unit_symbol(Elem::omega(-3), E(-3, 4, 0), 3));
  CHECK(symbol(Elem::omega(-3), E(-3, 3, 0), 2) == RootOfUnity::one(2));
  CHECK_THROWS(unit_symbol(Elem::omega(-3), E(-3, 3, 0), 2));
  CHECK(supplementary(SuppArg::i, E(-1, -1, 2), 2) == RootOfUnity{1, 2, false});
  CHECK(supplementary(SuppArg::i, E(-1, -1, 2), 4) == RootOfUnity{1, 4, false});
  CHECK(supplementary(SuppArg::one_plus_i, E(-1, -1, 2), 4) == RootOfUnity{2, 4, false});
  // non-coprime to the order is rejected
  CHECK_THROWS_AS(symbol(E(-1, 3, 0), E(-1, 1, 1), 2), std::invalid_argument);
  CHECK_THROWS_AS(symbol(E(-3, 2, 0), E(-3, 2, -1), 3), std::invalid_argument);
}

TEST_CASE("RootOfUnity arithmetic") {
  RootOfUnity a{5, 6, false};
  CHECK(a.pow(3) == RootOfUnity{1, 2, false});
  CHECK(a.pow(2) == RootOfUnity{2, 3, false});
  CHECK(a * a.conj() == RootOfUnity::one(6));
  CHECK(std::abs(a.value() - unit_root(5, 6)) < 1e-15);
  CHECK((a * RootOfUnity::zero(6)).is_zero);
  CHECK(RootOfUnity{1, 2, false}.as_order(6) == RootOfUnity{3, 6, false});
}

TEST_CASE("exponentiation definition lands in mu_j with a unique match (primes of norm <= 5000)") {
  for (auto [d, j] : supported_pairs()) {
    Elem z = zeta_elem(d, j);
    CHECK(pow(z, unsigned(j)) == Elem::integer(d, 1));
    for (int t = 1; t < j; ++t) CHECK(pow(z, unsigned(t)) != Elem::integer(d, 1));
    int bad = 0, primes = 0;
    for (const Elem& pi : prime_elems(d, 5000)) {
      PrimeResidueField fld(pi);
      int64_t N = fld.size();
      if ((N - 1) % j) continue;
      ++primes;
      std::vector<PrimeResidueField::F> roots;
      auto zr = fld.reduce(z);
      PrimeResidueField::F acc{1, 0};
      for (int t = 0; t < j; ++t, acc = fld.mul(acc, zr)) roots.push_back(acc);
      auto tab = power_residue_table(fld, j);
      for (int64_t i = 0; i < N; ++i) {
        auto x = fld.from_index(i);
        auto v = fld.pow(x, uint64_t((N - 1) / j));
        int matches = 0, which = -1;
        for (int t = 0; t < j; ++t)
          if (roots[size_t(t)] == v) ++matches, which = t;
        if (i == 0) {
          bad += !(fld.is_zero(v) && tab[0] == -1);
          continue;
        }
        bad += matches != 1;
        bad += tab[size_t(i)] != which;
      }
    }
    CHECK_MESSAGE(bad == 0, "d=" << d << " j=" << j);
    CHECK(primes > 50);
  }
}

TEST_CASE("symbol_prime agrees with the lifted table on sample residues") {
  for (auto [d, j] : supported_pairs()) {
    for (const Elem& pi : prime_elems(d, 400)) {
      PrimeResidueField fld(pi);
      if ((fld.size() - 1) % j) continue;
      auto tab = power_residue_table(fld, j);
      for (int64_t i = 0; i < fld.size(); i += 7) {
        Elem a = fld.lift(fld.from_index(i)) + Elem(d, 3, -2) * pi;
        RootOfUnity s = symbol_prime(a, pi, j);
        if (tab[size_t(i)] < 0) CHECK(s.is_zero);
        else CHECK(s == RootOfUnity{tab[size_t(i)], j, false});
      }
    }
  }
}

TEST_CASE("multiplicativity in the denominator (norms <= 300)") {
  for (auto [d, j] : supported_pairs()) {
    auto P = primaries(d, 300, default_kind(d, j));
    std::erase_if(P, [&](const Elem& x) { return !admissible(x, j); });
    std::vector<Elem> nums{E(d, 2, 1), E(d, -3, 5), E(d, 7, 0)};
    int bad = 0;
    for (size_t x = 0; x < P.size(); ++x)
      for (size_t y = x; y < P.size(); ++y) {
        if (norm(P[x]) * norm(P[y]) > Int(300 * 20)) continue;
        if (gcd(P[x], P[y]) != Elem::integer(d, 1)) continue;
        for (const Elem& a : nums) bad += !(symbol(a, P[x] * P[y], j) == symbol(a, P[x], j) * symbol(a, P[y], j));
      }
    CHECK_MESSAGE(bad == 0, "d=" << d << " j=" << j);
  }
}

TEST_CASE("symbols depend on the ideal and are multiplicative in the numerator") {
  for (auto [d, j] : supported_pairs()) {
    auto P = primaries(d, 150, PrimaryKind::primary);
    std::erase_if(P, [&](const Elem& x) { return !admissible(x, j); });
    int bad = 0;
    for (const Elem& n : P)
      for (const Elem& u : field_data(d).units) {
        Elem a = E(d, 5, 2), b = E(d, -1, 3);
        bad += !(symbol(a, u * n, j) == symbol(a, n, j));
        bad += !(symbol(a * b, n, j) == symbol(a, n, j) * symbol(b, n, j));
      }
    CHECK_MESSAGE(bad == 0, "d=" << d << " j=" << j);
  }
}

TEST_CASE("power compatibility of sextic, cubic and quadratic symbols") {
  int bad = 0;
  auto P = primaries(-3, 400, PrimaryKind::primary);
  std::erase_if(P, [](const Elem& x) { return !admissible(x, 6); });
  for (const Elem& n : P)
    for (const Elem& a : enumerate_norm_range(-3, 1, 30)) {
      RootOfUnity s6 = symbol(a, n, 6);
      bad += !(s6.pow(3) == symbol(a, n, 2));
      bad += !(s6.pow(2) == symbol(a, n, 3));
    }
  CHECK(bad == 0);
  // quartic squared is quadratic
  bad = 0;
  auto Q = primaries(-1, 400, PrimaryKind::primary);
  std::erase_if(Q, [](const Elem& x) { return !admissible(x, 4); });
  for (const Elem& n : Q)
    for (const Elem& a : enumerate_norm_range(-1, 1, 30)) bad += !(symbol(a, n, 4).pow(2) == symbol(a, n, 2));
  CHECK(bad == 0);
}

TEST_CASE("unit symbol closed form") {
  for (auto [d, j] : supported_pairs()) {
    int bad = 0;
    for (const Elem& n : enumerate_norm_range(d, 2, 400)) {
      if (!admissible(n, j)) continue;
      if (d == -3 && std::gcd(norm(n).to_int64(), int64_t(6)) != 1) {
        CHECK_THROWS(unit_symbol(E(d, -1, 0), n, j));
        continue;
      }
      for (const Elem& u : field_data(d).units) {
        INFO("d=", d, " j=", j, " n=", n.str(), " u=", u.str());
        bad += !(unit_symbol(u, n, j) == symbol(u, n, j));
      }
    }
    CHECK_MESSAGE(bad == 0, "d=" << d << " j=" << j);
  }
  // omega has trivial quadratic symbol away from 2 and 3
  for (const Elem& n : enumerate_norm_range(-3, 2, 300))
    if (std::gcd(norm(n).to_int64(), int64_t(6)) == 1) CHECK(unit_symbol(zeta_elem(-3, 3), n, 2) == RootOfUnity::one(2));
}

TEST_CASE("reciprocity laws (coprime primary pairs, norms <= 500)") {
  for (auto [d, j] : supported_pairs()) {
    auto P = primaries(d, 500, default_kind(d, j));
    int64_t bad_mod = (d == -3 && j != 3) ? 6 : (d == -3 ? 3 : 2);
    std::erase_if(P, [&](const Elem& x) { return std::gcd(norm(x).to_int64(), bad_mod) != 1 || is_unit(x); });
    int64_t bad = 0, pairs = 0;
    for (size_t x = 0; x < P.size(); ++x)
      for (size_t y = x + 1; y < P.size(); ++y) {
        if (gcd(P[x], P[y]) != Elem::integer(d, 1)) continue;
        ++pairs;
        bad += !reciprocity_check(P[x], P[y], j);
      }
    CHECK_MESSAGE(bad == 0, "d=" << d << " j=" << j << " pairs=" << pairs);
    CHECK(pairs > 1000);
  }
  CHECK_THROWS(reciprocity_check(E(-1, 1, 2), E(-1, 3, 0), 2));
}

TEST_CASE("reciprocity for norm 5 and 23 primes in Q(sqrt -11)") {
  Elem n = E(-11, 1, 1), m = E(-11, 4, 1);
  REQUIRE(norm(n) == Int(5));
  REQUIRE(norm(m) == Int(23));
  Elem pn = canonical_primary(n).second, pm = canonical_primary(m).second;
  CHECK(symbol(pn, pm, 2) * symbol(pm, pn, 2) == RootOfUnity::one(2));  // (5-1)/2 even
  CHECK(reciprocity_check(pn, pm, 2));
}

TEST_CASE("supplementary laws (norms <= 500)") {
  int bad = 0, count = 0;
  for (const Elem& n : primaries(-1, 500, PrimaryKind::primary)) {
    if (!norm(n).is_odd()) continue;
    for (int j : {2, 4})
      for (SuppArg v : {SuppArg::i, SuppArg::one_plus_i}) {
        ++count;
        bad += !(supplementary(v, n, j) == symbol(supp_elem(v, -1), n, j));
      }
  }
  for (const Elem& n : primaries(-3, 500, PrimaryKind::primary)) {
    if (norm(n).to_int64() % 3 == 0) continue;
    for (SuppArg v : {SuppArg::rho, SuppArg::one_minus_rho}) {
      ++count;
      bad += !(supplementary(v, n, 3) == symbol(supp_elem(v, -3), n, 3));
    }
  }
  for (const Elem& n : primaries(-3, 500, PrimaryKind::e_primary)) {
    if (std::gcd(norm(n).to_int64(), int64_t(6)) != 1) continue;
    for (SuppArg v : {SuppArg::one_minus_rho, SuppArg::two}) {
      ++count;
      bad += !(supplementary(v, n, 2) == symbol(supp_elem(v, -3), n, 2));
      if (is_primary(n, PrimaryKind::primary)) {
        ++count;
        bad += !(supplementary(v, n, 6) == symbol(supp_elem(v, -3), n, 6));
      }
    }
  }
  CHECK(bad == 0);
  CHECK(count > 500);
  // cubic supplement for rho written out
  Elem n = E(-3, -2, 3);  // -5 + 3 rho in rho coordinates: a = 1, b = 3
  REQUIRE(is_primary(n));
  auto [a, b] = rho_coords(n);
  int e = int(Int::floor_mod(Int::exact_div(Int(1) - a - b, Int(3)), Int(3)).small());
  CHECK(symbol(zeta_elem(-3, 3), n, 3) == RootOfUnity{e, 3, false});
}

TEST_CASE("denominator symbol character") {
  for (auto [d, j] : supported_pairs()) {
    for (const Elem& n : {E(d, 5, 2), E(d, 7, 0), E(d, 13, -4)}) {
      if (!admissible(n, j)) continue;
      DenominatorSymbol chi(n, j);
      for (const Elem& x : enumerate_norm_range(d, 1, 60)) {
        RootOfUnity s = symbol(x, n, j);
        int e = chi.exponent(x);
        if (s.is_zero) CHECK(e == -1);
        else CHECK(RootOfUnity{e, j, false} == s);
      }
    }
  }
}
