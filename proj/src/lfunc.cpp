#include "iqf/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "iqf/gauss.hpp"
#include "iqf/special.hpp"

namespace iqf {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// Neumaier summation
struct CSum {
  cplx s = 0, c = 0;
  void add(cplx x) {
    cplx t = s + x;
    double cr = std::abs(s.real()) >= std::abs(x.real()) ? (s.real() - t.real()) + x.real()
                                                         : (x.real() - t.real()) + s.real();
    double ci = std::abs(s.imag()) >= std::abs(x.imag()) ? (s.imag() - t.imag()) + x.imag()
                                                         : (x.imag() - t.imag()) + s.imag();
    c += cplx(cr, ci);
    s = t;
  }
  cplx value() const { return s + c; }
};

std::shared_ptr<IdealReps> build_reps(int d, int64_t R) {
  const FieldData& F = field_data(d);
  const int64_t D = std::abs(F.D);
  auto out = std::make_shared<IdealReps>();
  out->d = d;
  out->bound = R;
  std::vector<std::pair<int64_t, int64_t>> units;
  for (const Elem& u : F.units) units.emplace_back(u.a.small(), u.b.small());
  auto nrm = [&](int64_t a, int64_t b) { return F.omega_half ? a * a + a * b + F.c * b * b : a * a + F.c * b * b; };
  auto mul = [&](int64_t a1, int64_t b1, int64_t a2, int64_t b2) {
    return std::pair<int64_t, int64_t>{a1 * a2 - F.c * b1 * b2, a1 * b2 + a2 * b1 + (F.omega_half ? b1 * b2 : 0)};
  };
  struct Row {
    int64_t n, a, b;
  };
  std::vector<Row> rows;
  const int64_t bmax = int64_t(std::sqrt(4.0 * double(R) / double(D))) + 1;
  for (int64_t b = -bmax; b <= bmax; ++b) {
    // half: (a + b/2)^2 + |D| b^2 / 4 <= R; root: a^2 + c b^2 <= R
    double rem = double(R) - double(D) * double(b) * double(b) / 4.0;
    if (rem < 0) continue;
    double center = F.omega_half ? -double(b) / 2 : 0.0;
    int64_t lo = int64_t(std::floor(center - std::sqrt(rem))) - 1, hi = int64_t(std::ceil(center + std::sqrt(rem))) + 1;
    for (int64_t a = lo; a <= hi; ++a) {
      if (a == 0 && b == 0) continue;
      int64_t n = nrm(a, b);
      if (n > R) continue;
      // keep the (a, b)-lexicographically smallest associate
      bool rep = true;
      for (size_t i = 1; i < units.size() && rep; ++i) {
        auto [ua, ub] = mul(a, b, units[i].first, units[i].second);
        if (ua < a || (ua == a && ub < b)) rep = false;
      }
      if (rep) rows.push_back({n, a, b});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.n, x.a, x.b) < std::tie(y.n, y.a, y.b);
  });
  out->norm.reserve(rows.size());
  out->a.reserve(rows.size());
  out->b.reserve(rows.size());
  for (const Row& r : rows) {
    out->norm.push_back(r.n);
    out->a.push_back(r.a);
    out->b.push_back(r.b);
  }
  return out;
}

std::mutex g_reps_mu;
std::map<int, std::shared_ptr<const IdealReps>> g_reps;

// Table of e(t / L) for a character's exponents.
std::vector<cplx> root_table(int L) {
  std::vector<cplx> r(static_cast<size_t>(L));
  for (int t = 0; t < L; ++t) r[size_t(t)] = unit_root(t, L);
  return r;
}

cplx euler_product(const PrimitiveData& pd, cplx s) {
  cplx e = 1;
  const int L = pd.primitive.order();
  for (const auto& [P, t] : pd.euler) e *= 1.0 - unit_root(t, L) * std::pow(norm(P).to_double(), -s);
  return e;
}

double smooth_cutoff(double t) {
  // 1 on [0, 1], 0 on [2, inf), C-infinity in between
  if (t <= 1) return 1;
  if (t >= 2) return 0;
  double a = std::exp(-1 / (2 - t)), b = std::exp(-1 / (t - 1));
  return a / (a + b);
}

// g(k, psi) over O/q memoised by the residue class of k.
class GaussTable {
 public:
  explicit GaussTable(const HeckeChar& psi) : psi_(psi), ring_(psi.modulus()), vals_(size_t(ring_.size())), have_(size_t(ring_.size()), 0) {}
  cplx operator()(int64_t a, int64_t b) {
    int64_t idx = ring_.index(a, b);
    if (!have_[size_t(idx)]) {
      vals_[size_t(idx)] = gauss_direct_serial(ring_.element(idx), psi_, psi_.modulus());
      have_[size_t(idx)] = 1;
    }
    return vals_[size_t(idx)];
  }

 private:
  const HeckeChar& psi_;
  ResidueRing ring_;
  std::vector<cplx> vals_;
  std::vector<char> have_;
};

}  // namespace

std::shared_ptr<const IdealReps> ideal_reps(int d, int64_t bound) {
  {
    std::lock_guard<std::mutex> lk(g_reps_mu);
    auto it = g_reps.find(d);
    if (it != g_reps.end() && it->second->bound >= bound) return it->second;
  }
  int64_t R = 1024;
  while (R < bound) R *= 2;
  auto built = build_reps(d, R);
  std::lock_guard<std::mutex> lk(g_reps_mu);
  auto& slot = g_reps[d];
  if (!slot || slot->bound < R) slot = built;
  return slot;
}

cplx gamma_l_primitive(const PrimitiveData& pd, cplx s, const LOptions& opt) {
  if (pd.principal) throw std::invalid_argument("gamma_l_primitive: principal character");
  const HeckeChar& psi = pd.primitive;
  const int d = psi.d();
  const FieldData& F = field_data(d);
  const double D = std::abs(F.D), Nf = norm(pd.conductor).to_double();
  const double y0 = opt.split / std::sqrt(D * Nf);
  const double xmax = std::max(40.0, -std::log(opt.eps) + 12.0);
  const double R1 = xmax / (kTwoPi * y0), R2 = xmax * D * Nf * y0 / kTwoPi;
  if (std::max(R1, R2) > 4e8) throw std::length_error("l_value: truncation budget exceeded");
  auto reps = ideal_reps(d, int64_t(std::max(R1, R2)) + 1);
  const auto roots = root_table(psi.order());
  CSum direct, dual;
  const size_t n = reps->norm.size();
  for (size_t i = 0; i < n;) {
    const int64_t nu = reps->norm[i];
    if (double(nu) > R1 && double(nu) > R2) break;
    cplx c = 0;
    for (; i < n && reps->norm[i] == nu; ++i) {
      int t = psi.exponent_ab(d, reps->a[i], reps->b[i]);
      if (t >= 0) c += roots[size_t(t)];
    }
    if (c == 0.0) continue;
    if (double(nu) <= R1) direct.add(c * std::pow(kTwoPi * double(nu), -s) * upper_gamma(s, kTwoPi * double(nu) * y0));
    if (double(nu) <= R2) {
      double A = kTwoPi * double(nu) / (D * Nf);
      dual.add(std::conj(c) * std::pow(A, s - 1.0) * upper_gamma(1.0 - s, A / y0));
    }
  }
  cplx total = direct.value() + pd.gauss1 / (std::sqrt(D) * Nf) * dual.value();
  return std::pow(kTwoPi, s) * total;
}

cplx gamma_times_l(const PrimitiveData& pd, cplx s, const LOptions& opt) {
  if (pd.principal) return cgamma(s) * zeta_K(pd.primitive.d(), s) * euler_product(pd, s);
  return gamma_l_primitive(pd, s, opt) * euler_product(pd, s);
}

cplx l_value(const PrimitiveData& pd, cplx s, const LOptions& opt) {
  if (pd.principal) return zeta_K(pd.primitive.d(), s) * euler_product(pd, s);
  return rgamma(s) * gamma_l_primitive(pd, s, opt) * euler_product(pd, s);
}

cplx l_value(const HeckeChar& psi, cplx s, double eps) {
  LOptions opt;
  opt.eps = eps;
  return l_value(conductor(psi), s, opt);
}

cplx lambda_completed(const PrimitiveData& pd, cplx s, const LOptions& opt) {
  const double D = std::abs(field_data(pd.primitive.d()).D), Nf = norm(pd.conductor).to_double();
  cplx gl = pd.principal ? cgamma(s) * zeta_K(pd.primitive.d(), s) : gamma_l_primitive(pd, s, opt);
  return std::pow(D * Nf, s / 2.0) * std::pow(kTwoPi, -s) * gl;
}

std::vector<cplx> l_values(const std::vector<const PrimitiveData*>& chars, cplx s, const LOptions& opt) {
  std::vector<cplx> out(chars.size());
  const int64_t n = int64_t(chars.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t i = 0; i < n; ++i) out[size_t(i)] = l_value(*chars[size_t(i)], s, opt);
  return out;
}

cplx direct_series(const HeckeChar& psi, cplx s, int64_t max_norm) {
  auto reps = ideal_reps(psi.d(), max_norm);
  const auto roots = root_table(psi.order());
  CSum sum;
  for (size_t i = 0; i < reps->norm.size() && reps->norm[i] <= max_norm;) {
    const int64_t nu = reps->norm[i];
    cplx c = 0;
    for (; i < reps->norm.size() && reps->norm[i] == nu; ++i) {
      int t = psi.exponent_ab(psi.d(), reps->a[i], reps->b[i]);
      if (t >= 0) c += roots[size_t(t)];
    }
    if (c != 0.0) sum.add(c * std::pow(double(nu), -s));
  }
  return sum.value();
}

CheckResult fe_residual(const PrimitiveData& pd, cplx s) {
  PrimitiveData cj = conductor(pd.primitive.conj());
  LOptions a, b;
  b.split = 1.3;
  CheckResult r;
  r.lhs = lambda_completed(pd, s, a);
  r.rhs = pd.W * lambda_completed(cj, 1.0 - s, b);
  r.diff = std::abs(r.lhs - r.rhs);
  return r;
}

CheckResult theta_identity_check(const HeckeChar& psi, double y) {
  if (!(y > 0)) throw std::invalid_argument("theta_identity_check needs y > 0");
  if (psi.is_principal()) throw std::invalid_argument("theta_identity_check needs a non-principal character");
  const int d = psi.d();
  const FieldData& F = field_data(d);
  const double D = std::abs(F.D), Nq = norm(psi.modulus()).to_double(), U = F.unit_count();
  const double xmax = 45;
  const double R1 = xmax / (kTwoPi * y), R2 = xmax * D * y * Nq / kTwoPi;
  auto reps = ideal_reps(d, int64_t(std::max(R1, R2)) + 1);
  const auto roots = root_table(psi.order());
  GaussTable g(psi);
  CSum lhs, rhs;
  for (size_t i = 0; i < reps->norm.size(); ++i) {
    const double nu = double(reps->norm[i]);
    if (nu > R1 && nu > R2) break;
    if (nu <= R1) {
      int t = psi.exponent_ab(d, reps->a[i], reps->b[i]);
      if (t >= 0) lhs.add(U * roots[size_t(t)] * std::exp(-kTwoPi * y * nu));
    }
    if (nu <= R2) rhs.add(U * g(reps->a[i], reps->b[i]) * std::exp(-kTwoPi * nu / (D * y * Nq)));
  }
  CheckResult r;
  r.lhs = lhs.value();
  r.rhs = rhs.value() / (std::sqrt(D) * y * Nq);
  r.diff = std::abs(r.lhs - r.rhs);
  return r;
}

CheckResult dual_series_check(const HeckeChar& psi, cplx s) {
  if (s.real() >= -0.5) throw std::invalid_argument("dual_series_check needs Re s < -1/2");
  if (psi.is_principal()) throw std::invalid_argument("dual_series_check needs a non-principal character");
  const int d = psi.d();
  const FieldData& F = field_data(d);
  const double D = std::abs(F.D), Nq = norm(psi.modulus()).to_double();
  PrimitiveData pd = conductor(psi);
  GaussTable g(psi);
  // the k-sum over elements is |U| times the sum over ideal generators, since g(uk) = g(k)
  auto partial = [&](double R) {
    auto reps = ideal_reps(d, int64_t(2 * R) + 1);
    CSum sum;
    for (size_t i = 0; i < reps->norm.size(); ++i) {
      const double nu = double(reps->norm[i]);
      if (nu >= 2 * R) break;
      sum.add(g(reps->a[i], reps->b[i]) * std::pow(nu, s - 1.0) * smooth_cutoff(nu / R));
    }
    return sum.value();
  };
  const cplx pre = std::pow(Nq, -s) * std::pow(kTwoPi / std::sqrt(D), 2.0 * s - 1.0) * cgamma(1.0 - s);
  double R = std::max(2000.0, 50 * Nq);
  cplx prev = partial(R), cur = prev;
  for (int it = 0; it < 6; ++it) {
    R *= 2;
    cur = partial(R);
    if (std::abs(cur - prev) * std::abs(pre) < 1e-9) break;
    prev = cur;
  }
  CheckResult r;
  r.lhs = gamma_times_l(pd, s);
  r.rhs = pre * cur;
  r.diff = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace iqf
