#include "iqf/verify.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "iqf/gauss.hpp"
#include "iqf/lfunc.hpp"
#include "iqf/symbols.hpp"

namespace iqf {

void SweepResult::fail(const std::string& what) {
  ++violations;
  if (first_failure.empty()) first_failure = what;
}

void SweepResult::error(double e, double tol, const std::string& what) {
  ++checks;
  if (std::isnan(e) || e > max_err) max_err = std::isnan(e) ? INFINITY : e;
  if (!(e <= tol)) {
    std::ostringstream os;
    os << what << " err=" << e;
    fail(os.str());
  }
}

std::vector<Elem> primary_elements(int d, int64_t R, PrimaryKind kind) {
  std::vector<Elem> v;
  for (const Elem& x : enumerate_norm_range(d, 1, R))
    if (is_primary(x, kind)) v.push_back(x);
  return v;
}

bool is_prime_element(const Elem& x) {
  auto f = factor(x);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

namespace {

std::string fmt(const cplx& z) {
  std::ostringstream os;
  os.precision(15);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

// Odd primary elements (coprime to 6 when d = -3) for the quadratic Gauss sums, units excluded.
std::vector<Elem> odd_primaries(int d, int64_t R) {
  std::vector<Elem> v;
  for (const Elem& x : primary_elements(d, R, default_kind(d, 2))) {
    int64_t N = norm(x).to_int64();
    if (N % 2 == 0 || is_unit(x) || (d == -3 && N % 3 == 0)) continue;
    v.push_back(x);
  }
  return v;
}

}  // namespace

SweepResult reciprocity_sweep(int d, int j, int64_t R) {
  check_order(d, j);
  SweepResult r;
  r.name = "reciprocity d=" + std::to_string(d) + " j=" + std::to_string(j);
  auto P = primary_elements(d, R, default_kind(d, j));
  const int64_t bad_mod = (d == -3 && j != 3) ? 6 : (d == -3 ? 3 : 2);
  std::erase_if(P, [&](const Elem& x) { return std::gcd(norm(x).to_int64(), bad_mod) != 1 || is_unit(x); });
  const Elem one = Elem::integer(d, 1);
  for (size_t x = 0; x < P.size(); ++x)
    for (size_t y = x + 1; y < P.size(); ++y) {
      if (gcd(P[x], P[y]) != one) continue;
      ++r.checks;
      if (!reciprocity_check(P[x], P[y], j)) r.fail("n=" + P[x].str() + " m=" + P[y].str());
    }
  return r;
}

SweepResult supplementary_sweep(int d, int64_t R) {
  SweepResult r;
  r.name = "supplementary d=" + std::to_string(d);
  auto one = [&](SuppArg v, const Elem& n, int j) {
    ++r.checks;
    RootOfUnity closed = supplementary(v, n, j), def = symbol(supp_elem(v, d), n, j);
    if (!(closed == def))
      r.fail("arg=" + supp_elem(v, d).str() + " n=" + n.str() + " j=" + std::to_string(j) + " closed=" +
             std::to_string(closed.exponent) + "/" + std::to_string(closed.order) + " definition=" +
             std::to_string(def.exponent) + "/" + std::to_string(def.order));
  };
  if (d == -1) {
    for (const Elem& n : primary_elements(-1, R, PrimaryKind::primary)) {
      if (!norm(n).is_odd() || is_unit(n)) continue;
      for (int j : {2, 4})
        for (SuppArg v : {SuppArg::i, SuppArg::one_plus_i}) one(v, n, j);
    }
  } else if (d == -3) {
    for (const Elem& n : primary_elements(-3, R, PrimaryKind::primary)) {
      if (norm(n).to_int64() % 3 == 0 || is_unit(n)) continue;
      for (SuppArg v : {SuppArg::rho, SuppArg::one_minus_rho}) one(v, n, 3);
    }
    for (const Elem& n : primary_elements(-3, R, PrimaryKind::e_primary)) {
      if (std::gcd(norm(n).to_int64(), int64_t(6)) != 1 || is_unit(n)) continue;
      for (SuppArg v : {SuppArg::one_minus_rho, SuppArg::two}) {
        one(v, n, 2);
        if (is_primary(n, PrimaryKind::primary)) one(v, n, 6);
      }
    }
  }
  return r;
}

SweepResult gauss_prime_sweep(int d, int64_t R, bool with_unit_factor) {
  SweepResult r;
  r.name = std::string("gauss prime closed form") + (with_unit_factor ? " (with (i/pi)_2)" : "") + " d=" +
           std::to_string(d);
  const Elem B = Elem::integer(d, field_data(d).B), one = Elem::integer(d, 1);
  for (const Elem& pi : primary_elements(d, R, default_kind(d, 2))) {
    if (is_unit(pi) || gcd(pi, B) != one || !is_prime_element(pi)) continue;
    cplx g = gauss_quadratic(one, pi);
    cplx want = gauss_prime_value(pi);
    if (with_unit_factor && d == -1) want *= supplementary(SuppArg::i, pi, 2).value();
    r.error(std::abs(g - want), 1e-10, "pi=" + pi.str() + " direct=" + fmt(g) + " closed=" + fmt(want));
  }
  return r;
}

SweepResult gauss_multiplicative_sweep(int d, int64_t R) {
  SweepResult r;
  r.name = "G multiplicativity d=" + std::to_string(d);
  auto P = odd_primaries(d, R / 5);
  const Elem one = Elem::integer(d, 1);
  const std::vector<Elem> ks{one, Elem(d, 2, 1), Elem(d, 0, 3), Elem()};
  std::vector<std::vector<cplx>> single(P.size());
  for (size_t i = 0; i < P.size(); ++i)
    for (const Elem& k : ks) single[i].push_back(gauss_G(k, P[i]));
  for (size_t a = 0; a < P.size(); ++a)
    for (size_t b = a + 1; b < P.size(); ++b) {
      if (norm(P[a]) * norm(P[b]) > Int(R) || gcd(P[a], P[b]) != one) continue;
      Elem mn = P[a] * P[b];
      for (size_t k = 0; k < ks.size(); ++k) {
        cplx lhs = gauss_G(ks[k], mn), rhs = single[a][k] * single[b][k];
        r.error(std::abs(lhs - rhs), 1e-9, "m=" + P[a].str() + " n=" + P[b].str() + " k=" + ks[k].str());
      }
    }
  return r;
}

SweepResult gauss_twist_sweep(int d, int64_t R, int samples, uint64_t seed) {
  SweepResult r;
  r.name = "G twist d=" + std::to_string(d);
  auto P = odd_primaries(d, R);
  std::mt19937_64 rng(seed);
  const int64_t c = int64_t(std::sqrt(double(R)));
  std::uniform_int_distribution<int64_t> U(-c, c);
  const Elem one = Elem::integer(d, 1);
  int done = 0;
  for (int guard = 0; done < samples && guard < 100 * samples; ++guard) {
    const Elem& n = P[size_t(rng() % P.size())];
    Elem rr(d, U(rng), U(rng)), s(d, U(rng), U(rng));
    if (s.is_zero() || norm(rr) > Int(R) || norm(s) > Int(R) || gcd(s, n) != one) continue;
    ++done;
    r.error(std::abs(gauss_G_twist(rr, s, n) - gauss_G(rr * s, n)), 1e-9,
            "r=" + rr.str() + " s=" + s.str() + " n=" + n.str());
  }
  return r;
}

SweepResult gauss_primepower_sweep(int d, int64_t R) {
  SweepResult r;
  r.name = "G prime powers d=" + std::to_string(d);
  const Elem one = Elem::integer(d, 1);
  for (const Elem& pi : odd_primaries(d, R)) {
    if (!is_prime_element(pi)) continue;
    const int64_t N = norm(pi).to_int64();
    // a residue (1) and a non-residue coprime to pi when one exists among small elements
    std::vector<Elem> units{one};
    for (const Elem& x : enumerate_norm_range(d, 2, 60)) {
      RootOfUnity s = symbol(x, pi, 2);
      if (!s.is_zero && s.exponent == 1) {
        units.push_back(x);
        break;
      }
    }
    int64_t Nl = N;
    for (int l = 1; Nl <= R; ++l, Nl *= N) {
      Elem q = pow(pi, unsigned(l));
      std::vector<Elem> ks{Elem(d, 0, 0)};
      for (int h = 0; h <= l + 1; ++h)
        for (const Elem& u : units) ks.push_back(u * pow(pi, unsigned(h)));
      for (const Elem& k : ks) {
        cplx direct = gauss_G(k, q), closed = gauss_G_primepower(k, pi, l);
        r.error(std::abs(direct - closed), 1e-9,
                "pi=" + pi.str() + " l=" + std::to_string(l) + " k=" + k.str() + " direct=" + fmt(direct) +
                    " closed=" + fmt(closed));
      }
    }
  }
  return r;
}

std::vector<HeckeChar> sample_characters(int d, size_t want, int64_t max_norm) {
  std::vector<HeckeChar> out;
  for (const Elem& q : enumerate_norm_range(d, 2, max_norm)) {
    if (out.size() >= want) break;
    auto f = factor(q);
    if (f.factors.size() != 1 || f.factors[0].second != 1 || f.factors[0].first.elem != q) continue;
    RayClassGroup g(d, q);
    for (int64_t c = 1; c < g.size() && out.size() < want; ++c) out.push_back(g.character(c));
  }
  return out;
}

SweepResult fe_sweep(int d, size_t characters, const std::vector<cplx>& s_list) {
  SweepResult r;
  r.name = "functional equation d=" + std::to_string(d);
  auto chars = sample_characters(d, characters);
  if (chars.size() < characters) r.fail("only " + std::to_string(chars.size()) + " characters available");
  for (const HeckeChar& psi : chars) {
    PrimitiveData pd = conductor(psi);
    if (pd.principal) {
      r.fail(psi.label() + " is principal");
      continue;
    }
    r.error(std::abs(std::abs(pd.W) - 1), 1e-10, psi.label() + " |W|");
    for (cplx s : s_list) r.error(fe_residual(pd, s).diff, 1e-8, psi.label() + " s=" + fmt(s));
  }
  return r;
}

SweepResult theta_sweep(int d, size_t characters, const std::vector<double>& y_list) {
  SweepResult r;
  r.name = "theta identity d=" + std::to_string(d);
  auto chars = sample_characters(d, characters);
  if (chars.size() < characters) r.fail("only " + std::to_string(chars.size()) + " characters available");
  for (const HeckeChar& psi : chars)
    for (double y : y_list) r.error(theta_identity_check(psi, y).diff, 1e-10, psi.label() + " y=" + std::to_string(y));
  return r;
}

SweepResult dual_sweep(int d, size_t characters, cplx s) {
  SweepResult r;
  r.name = "dual series d=" + std::to_string(d);
  // smallest prime element, used to make the modulus imprimitive
  Elem P;
  for (const Elem& x : enumerate_norm_range(d, 2, 50))
    if (is_prime_element(x)) {
      P = x;
      break;
    }
  size_t done = 0;
  for (const HeckeChar& chi : sample_characters(d, 4 * characters, 200)) {
    if (done >= characters) break;
    HeckeChar psi = chi * HeckeChar::principal(d, P);
    if (norm(psi.modulus()) > Int(200) || norm(conductor(psi).conductor) == norm(psi.modulus())) continue;
    ++done;
    CheckResult c = dual_series_check(psi, s);
    r.error(c.diff, 1e-6, psi.label() + " lhs=" + fmt(c.lhs) + " rhs=" + fmt(c.rhs));
  }
  if (done < characters) r.fail("only " + std::to_string(done) + " imprimitive characters of modulus norm <= 200");
  return r;
}

SweepResult zeta_sweep(int d, double s, int64_t R) {
  SweepResult r;
  r.name = "zeta_K d=" + std::to_string(d);
  const auto& F = field_data(d);
  auto reps = ideal_reps(d, R);
  // sum from the largest norm down
  double sum = 0;
  for (size_t i = reps->norm.size(); i-- > 0;)
    if (reps->norm[i] <= R) sum += std::pow(double(reps->norm[i]), -s);
  double tail = F.r_K * std::pow(double(R), 1 - s) / (s - 1);
  double z = zeta_K(d, s).real();
  r.error(std::abs(sum + tail - z), 1e-8, "s=" + std::to_string(s) + " partial=" + std::to_string(sum));
  const double h = 1e-4;
  double lim = 0.5 * (h * zeta_K(d, 1 + h).real() - h * zeta_K(d, 1 - h).real());
  r.error(std::abs(lim - F.r_K), 1e-6, "r_K");
  return r;
}

}  // namespace iqf
