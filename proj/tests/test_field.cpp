#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "iqf/field.hpp"
#include "iqf/primary.hpp"

using namespace iqf;

namespace {

Elem E(int d, long a, long b) { return Elem(d, a, b); }

// Naive box enumeration used as an oracle for enumerate_norm_range.
std::vector<Elem> naive_range(int d, int64_t lo, int64_t hi) {
  std::vector<Elem> v;
  int64_t B = 2 * int64_t(std::sqrt(double(hi))) + 3;
  for (int64_t a = -B; a <= B; ++a)
    for (int64_t b = -B; b <= B; ++b) {
      Elem x(d, a, b);
      Int n = norm(x);
      if (!x.is_zero() && n >= Int(lo) && n <= Int(hi)) v.push_back(x);
    }
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

}  // namespace

TEST_CASE("field constants") {
  const auto& Q = field_data(-1);
  CHECK(Q.D == -4);
  CHECK(Q.unit_count() == 4);
  CHECK(Q.B == Int(-4));
  CHECK(Q.eta == E(-1, 0, 1));
  CHECK(Q.r_K == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
  CHECK(field_data(-2).B == Int(-16));
  CHECK(field_data(-2).eta == E(-2, -1, 0));
  CHECK(field_data(-3).unit_count() == 6);
  CHECK(field_data(-3).B == Int(-6));
  CHECK(field_data(-7).eta == E(-7, 1, 0));
  CHECK(field_data(-11).B == Int(-66));
  for (int d : kFields) {
    const auto& F = field_data(d);
    CHECK(F.D == (((d % 4) + 4) % 4 == 1 ? d : 4 * d));
    CHECK(F.unit_count() == (d == -1 ? 4 : d == -3 ? 6 : 2));
    for (const auto& u : F.units) CHECK(is_unit(u));
    CHECK(F.euclidean == (d >= -11));
  }
  CHECK_THROWS_AS(FieldId(-5), std::invalid_argument);
}

TEST_CASE("ring operations") {
  CHECK(norm(E(-1, 3, 2)) == Int(13));
  CHECK(norm(E(-7, 1, 1)) == Int(4));
  CHECK(norm(E(-5 + 4, 0, 0)) == Int(0));
  CHECK(E(-1, 0, 1) * E(-1, 0, 1) == E(-1, -1, 0));
  CHECK(conj(E(-11, 2, 3)) == E(-11, 5, -3));
  CHECK(trace(Elem::omega(-7)) == Int(1));
  CHECK_THROWS_AS(E(-1, 1, 0) + E(-2, 1, 0), FieldMismatch);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> U(-1000, 1000);
  for (int d : kFields)
    for (int k = 0; k < 200; ++k) {
      Elem x = E(d, U(rng), U(rng)), y = E(d, U(rng), U(rng));
      CHECK(norm(x * y) == norm(x) * norm(y));
      CHECK(norm(x) == (x * conj(x)).a);
      CHECK((x * conj(x)).b == Int(0));
      cplx z = to_complex(x * y) - to_complex(x) * to_complex(y);
      CHECK(std::abs(z) < 1e-6);
    }
}

TEST_CASE("wide coordinates stay exact") {
  Elem x = E(-163, 3000000000L, -2000000000L);
  Elem x4 = pow(x, 4);
  CHECK(norm(x4) == norm(x) * norm(x) * norm(x) * norm(x));
  CHECK(exact_div(x4, x) == pow(x, 3));
}

TEST_CASE("divisibility and division with remainder") {
  CHECK(divides(E(-1, 1, 1), E(-1, -3, -1)));
  CHECK_FALSE(divides(E(-1, 1, 1), E(-1, 3, 0)));
  auto [q, r] = divrem(E(-1, 5, 0), E(-1, 2, 0));
  CHECK(q == E(-1, 2, 0));
  CHECK(r == E(-1, 1, 0));
  CHECK_THROWS(divrem(E(-1, 5, 0), E(-1, 0, 0)));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> U(-500, 500);
  for (int d : {-1, -2, -3, -7, -11})
    for (int k = 0; k < 500; ++k) {
      Elem x = E(d, U(rng), U(rng)), y = E(d, U(rng), U(rng));
      if (y.is_zero()) continue;
      auto [qq, rr] = divrem(x, y);
      CHECK(qq * y + rr == x);
      CHECK(norm(rr) < norm(y));
    }
}

TEST_CASE("factorisation") {
  auto f5 = factor(E(-1, 5, 0));
  REQUIRE(f5.factors.size() == 2);
  std::set<std::pair<long, long>> got;
  for (auto& [p, e] : f5.factors) {
    CHECK(e == 1);
    got.insert({p.elem.a.small(), p.elem.b.small()});
  }
  CHECK(got == std::set<std::pair<long, long>>{{-1, 2}, {-1, -2}});
  auto f3 = factor(E(-1, 3, 0));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].first.split == SplitType::inert);
  CHECK(norm(f3.factors[0].first.elem) == Int(9));
  auto f2 = factor(E(-7, 2, 0));
  REQUIRE(f2.factors.size() == 2);
  CHECK(norm(f2.factors[0].first.elem) == Int(2));
  CHECK(norm(f2.factors[1].first.elem) == Int(2));
  CHECK(f2.factors[0].first.elem != f2.factors[1].first.elem);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> U(-3000, 3000);
  for (int d : kFields)
    for (int k = 0; k < 150; ++k) {
      Elem x = E(d, U(rng), U(rng));
      if (x.is_zero()) continue;
      auto f = factor(x);
      CHECK(f.product() == x);
      CHECK(is_unit(f.unit));
      for (size_t i = 0; i < f.factors.size(); ++i) {
        CHECK(is_primary(f.factors[i].first.elem));
        if (i) CHECK(canonical_less(f.factors[i - 1].first.elem, f.factors[i].first.elem));
      }
    }
  Elem huge(-1, Int::from_string("100000000000000000000"), Int(1));
  CHECK_THROWS_AS(factor(huge), FactorBudgetExceeded);
}

TEST_CASE("gcd") {
  CHECK(gcd(E(-1, 1, 1), E(-1, 2, 0)) == E(-1, 1, 1));
  CHECK(gcd(E(-1, 7, 3), E(-1, 1, 0)) == E(-1, 1, 0));
  CHECK(gcd(E(-1, -1, 2), E(-1, -1, -2)) == E(-1, 1, 0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> U(-60, 60);
  for (int d : kFields)
    for (int k = 0; k < 150; ++k) {
      Elem c = E(d, U(rng), U(rng)), x = E(d, U(rng), U(rng)) * c, y = E(d, U(rng), U(rng)) * c;
      if (x.is_zero() || y.is_zero()) continue;
      Elem g = gcd(x, y);
      CHECK(divides(g, x));
      CHECK(divides(g, y));
      CHECK(divides(c, g));
      CHECK(is_primary(g));
    }
}

TEST_CASE("splitting of rational primes below 10^4") {
  for (int d : kFields) {
    int D = field_data(d).D;
    for (int64_t p = 2; p < 10000; ++p) {
      if (!is_prime_u64(uint64_t(p))) continue;
      auto ps = primes_above(d, p);
      int k = kronecker(D, p);
      if (k == 1) {
        REQUIRE(ps.size() == 2);
        CHECK(norm(ps[0]) == Int(p));
        CHECK(norm(ps[1]) == Int(p));
        CHECK_FALSE(divides(ps[0], ps[1]));
      } else if (k == 0) {
        REQUIRE(ps.size() == 1);
        CHECK(norm(ps[0]) == Int(p));
      } else {
        REQUIRE(ps.size() == 1);
        CHECK(norm(ps[0]) == Int(p * p));
      }
    }
  }
}

TEST_CASE("norm range enumeration") {
  CHECK(enumerate_norm_range(-1, 1, 1).size() == 4);
  CHECK(enumerate_norm_range(-1, 1, 2).size() == 8);
  for (int d : kFields) {
    auto got = enumerate_norm_range(d, 3, 400);
    auto want = naive_range(d, 3, 400);
    CHECK(got == want);
  }
  const int64_t R = 100000;
  double cnt = double(enumerate_norm_range(-1, 1, R).size());
  CHECK(std::abs(cnt - std::numbers::pi * R) < 10 * std::sqrt(double(R)));
}

TEST_CASE("zeta_K against the direct lattice sum") {
  // sum over elements / |U|, tail beyond R replaced by its leading term r_K R^{1-s}/(s-1)
  const int64_t R = 200000;
  for (int d : kFields) {
    const auto& F = field_data(d);
    auto els = enumerate_norm_range(d, 1, R);
    for (double s : {2.0, 3.0, 4.0}) {
      double sum = 0;
      for (auto it = els.rbegin(); it != els.rend(); ++it) sum += std::pow(norm(*it).to_double(), -s);
      sum /= F.unit_count();
      sum += F.r_K * std::pow(double(R), 1 - s) / (s - 1);
      CHECK(std::abs(sum - zeta_K(d, s).real()) < 1e-8);
    }
    double h = 1e-4;
    double lim = 0.5 * (h * zeta_K(d, 1 + h).real() - h * zeta_K(d, 1 - h).real());
    CHECK(std::abs(lim - F.r_K) < 1e-6);
    CHECK(std::abs(h * zeta_K(d, 1 + h).real() - F.r_K) < 1e-3);
  }
}
