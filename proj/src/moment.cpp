#include "iqf/moment.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "iqf/special.hpp"
#include "iqf/symbols.hpp"

namespace iqf {

namespace {

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

void validate(const MomentConfig& cfg) {
  check_order(cfg.d, cfg.j);
  if (!(cfg.alpha.real() > 0 && cfg.alpha.real() < 0.5))
    throw std::invalid_argument("alpha must satisfy 0 < Re(alpha) < 1/2");
  if (cfg.j > 2) {
    int64_t S = cfg.S ? cfg.S : int64_t(cfg.j) * cfg.j;
    if (S % (int64_t(cfg.j) * cfg.j) != 0) throw std::invalid_argument("S must be divisible by j^2");
    if (S * S > cfg.max_S_residues)
      throw std::length_error("S = " + std::to_string(S) + " exceeds the residue budget (raise max_S_residues)");
  }
}

int64_t ray_modulus(const MomentConfig& cfg) { return cfg.S ? cfg.S : int64_t(cfg.j) * cfg.j; }

// Distinct characters with the weights attached to them, in first-seen order.
struct Family {
  std::vector<HeckeChar> chars;
  std::vector<std::pair<double, size_t>> terms;  // (Phi weight, character index), canonical n-order
  std::unordered_map<std::string, size_t> index;
  size_t add(HeckeChar psi) {
    std::string sig = psi.signature();
    auto it = index.find(sig);
    if (it != index.end()) return it->second;
    chars.push_back(std::move(psi));
    index.emplace(std::move(sig), chars.size() - 1);
    return chars.size() - 1;
  }
};

std::vector<cplx> evaluate(const std::vector<HeckeChar>& chars, cplx s, const MomentConfig& cfg) {
  LOptions opt;
  opt.eps = cfg.eps;
  opt.split = cfg.split;
  std::vector<cplx> out(chars.size());
  const int64_t n = int64_t(chars.size());
  auto one = [&](int64_t i) {
    try {
      out[size_t(i)] = l_value(conductor(chars[size_t(i)]), s, opt);
    } catch (const std::exception& e) {
      throw std::runtime_error("L-value failed for " + chars[size_t(i)].label() + ": " + e.what());
    }
  };
  if (cfg.serial) {
    for (int64_t i = 0; i < n; ++i) one(i);
    return out;
  }
  std::string err;
#pragma omp parallel for schedule(dynamic, 1)
  for (int64_t i = 0; i < n; ++i) {
    try {
      one(i);
    } catch (const std::exception& e) {
#pragma omp critical
      if (err.empty()) err = e.what();
    }
  }
  if (!err.empty()) throw std::runtime_error(err);
  return out;
}

std::vector<Elem> window_elements(int d, double X, double lo, double hi, int64_t& count) {
  double a = std::max(X, lo), b = std::min(2 * X, hi);
  count = 0;
  std::vector<Elem> out;
  if (a > b) return out;
  int64_t n0 = int64_t(std::floor(a)), n1 = int64_t(std::ceil(b));
  for (Elem& n : enumerate_norm_range(d, std::max<int64_t>(n0, 1), n1)) {
    double N = norm(n).to_double();
    if (N <= X || N >= 2 * X || N < lo || N > hi) continue;
    out.push_back(std::move(n));
  }
  count = int64_t(out.size());
  return out;
}

cplx finish(const Family& fam, const std::vector<cplx>& vals, double scale) {
  CSum sum;
  for (const auto& [w, idx] : fam.terms) sum.add(w * vals[idx]);
  return scale * sum.value();
}

}  // namespace

TestFunction TestFunction::bump() {
  return {"bump", [](double x) { return std::exp(-1.0 / ((x - 1.0) * (2.0 - x))); }};
}

cplx mellin_phi(const TestFunction& phi, cplx s) {
  using boost::math::quadrature::gauss_kronrod;
  auto re = [&](double t) { return phi(t) * std::pow(cplx(t), s - 1.0).real(); };
  auto im = [&](double t) { return phi(t) * std::pow(cplx(t), s - 1.0).imag(); };
  double r = gauss_kronrod<double, 61>::integrate(re, 1.0, 2.0, 30, 1e-13);
  double i = gauss_kronrod<double, 61>::integrate(im, 1.0, 2.0, 30, 1e-13);
  return {r, i};
}

cplx lhs_quadratic_window(const MomentConfig& cfg, double X, const TestFunction& phi, double lo, double hi,
                          MomentStats* stats) {
  validate(cfg);
  if (cfg.j != 2) throw std::invalid_argument("lhs_quadratic needs j = 2");
  const int d = cfg.d;
  const Elem tw[2] = {family_twist_element(d, 0), family_twist_element(d, 1)};
  int64_t count = 0;
  Family fam;
  for (const Elem& n : window_elements(d, X, lo, hi, count)) {
    double w = phi(norm(n).to_double() / X);
    for (const Elem& t : tw) fam.terms.emplace_back(w, fam.add(HeckeChar::symbol_char(t * n, 2)));
  }
  auto vals = evaluate(fam.chars, 0.5 + cfg.alpha, cfg);
  if (stats) {
    stats->n_count = count;
    stats->l_evaluations = int64_t(fam.chars.size());
  }
  return finish(fam, vals, 0.5);
}

cplx lhs_quadratic(const MomentConfig& cfg, double X, const TestFunction& phi, MomentStats* stats) {
  return lhs_quadratic_window(cfg, X, phi, X, 2 * X, stats);
}

QuadraticMainTerms mt_quadratic(int d, cplx alpha, double X, const TestFunction& phi) {
  const FieldData& F = field_data(d);
  const double U = F.unit_count(), rK = F.r_K, D = std::abs(F.D);
  cplx prod1 = 1, prod1_plus = 1, prod2 = 1;
  for (const auto& [pe, e] : factor(Elem::integer(d, F.B)).factors) {
    (void)e;
    double N = norm(pe.elem).to_double();
    cplx x = std::pow(N, -1.0 - 2.0 * alpha), den = 1.0 - std::pow(N, -2.0 - 2.0 * alpha);
    prod1 *= (1.0 - x) / den;
    prod1_plus *= (1.0 + x) / den;
    prod2 /= 1.0 + 1.0 / N;
  }
  QuadraticMainTerms m;
  const cplx head = X * mellin_phi(phi, 1.0) * U * rK * zeta_K(d, 1.0 + 2.0 * alpha) / zeta_K(d, 2.0 + 2.0 * alpha);
  m.mt1 = head * prod1;
  m.mt1_plus_sign = head * prod1_plus;
  cplx gam = cgamma(1.0 - 2.0 * alpha) * cgamma(alpha) / (cgamma(1.0 - alpha) * cgamma(2.0 * alpha));
  m.mt2 = std::pow(X, 1.0 - alpha) * mellin_phi(phi, 1.0 - alpha) * (U * rK / 2) *
          std::pow(2 * std::numbers::pi / std::sqrt(D), 2.0 * alpha) * gam * zeta_K(d, 1.0 - 2.0 * alpha) /
          zeta_K(d, 2.0) * prod2;
  return m;
}

cplx lhs_higher(const MomentConfig& cfg, double X, const TestFunction& phi, MomentStats* stats) {
  validate(cfg);
  if (cfg.j == 2) throw std::invalid_argument("lhs_higher needs j > 2");
  const int d = cfg.d, j = cfg.j;
  RayClassGroup G = ray_class_group(d, ray_modulus(cfg));
  auto chis = G.characters();
  int64_t count = 0;
  Family fam;
  for (const Elem& n : window_elements(d, X, X, 2 * X, count)) {
    double w = phi(norm(n).to_double() / X);
    HeckeChar base = HeckeChar::symbol_char(n, j);
    for (const HeckeChar& chi : chis) fam.terms.emplace_back(w, fam.add(chi * base));
  }
  auto vals = evaluate(fam.chars, 0.5 + cfg.alpha, cfg);
  if (stats) {
    stats->n_count = count;
    stats->l_evaluations = int64_t(fam.chars.size());
  }
  return finish(fam, vals, 1.0 / double(G.size()));
}

HigherMainTerms mt_higher(const MomentConfig& cfg, double X, const TestFunction& phi) {
  validate(cfg);
  const int d = cfg.d, j = cfg.j;
  const FieldData& F = field_data(d);
  RayClassGroup G = ray_class_group(d, ray_modulus(cfg));
  std::vector<HeckeChar> pows;
  for (int64_t c = 0; c < G.size(); ++c) pows.push_back(G.character(c).pow(j));
  const cplx jw = double(j) * (0.5 + cfg.alpha);
  auto a = evaluate(pows, jw, cfg), b = evaluate(pows, 1.0 + jw, cfg);
  CSum ratio, prod;
  for (size_t i = 0; i < pows.size(); ++i) {
    ratio.add(a[i] / b[i]);
    prod.add(a[i] * b[i]);
  }
  const cplx pre = X * mellin_phi(phi, 1.0) * F.r_K / double(G.size());
  HigherMainTerms m;
  m.ratio_form = pre * double(F.unit_count()) * ratio.value();
  m.product_form = pre * prod.value();
  m.characters = G.size();
  return m;
}

MomentReport run_experiment(const MomentConfig& cfg, const TestFunction& phi) {
  validate(cfg);
  MomentReport rep;
  rep.config = cfg;
  rep.test_function = phi.name;
  for (double X : cfg.X_list) {
    auto t0 = std::chrono::steady_clock::now();
    MomentRow row;
    row.X = X;
    MomentStats st;
    if (cfg.j == 2) {
      row.lhs = lhs_quadratic(cfg, X, phi, &st);
      auto m = mt_quadratic(cfg.d, cfg.alpha, X, phi);
      row.mt1 = m.mt1;
      row.mt2 = m.mt2;
      row.ratio = row.lhs / (m.mt1 + m.mt2);
      row.mt_alt = m.mt1_plus_sign + m.mt2;
      row.ratio_alt = row.lhs / row.mt_alt;
    } else {
      row.lhs = lhs_higher(cfg, X, phi, &st);
      auto m = mt_higher(cfg, X, phi);
      row.mt1 = m.ratio_form;
      row.mt_alt = m.product_form;
      row.ratio = row.lhs / m.ratio_form;
      row.ratio_alt = row.lhs / m.product_form;
    }
    row.n_count = st.n_count;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.rows.push_back(row);
    rep.abs_err.push_back(std::abs(row.ratio - 1.0));
  }
  for (size_t i = 1; i < rep.abs_err.size(); ++i)
    if (rep.abs_err[i] > 1.2 * rep.abs_err[i - 1]) rep.non_increasing = false;
  return rep;
}

std::string field_name(int d) { return "Q(sqrt(" + std::to_string(d) + "))"; }

namespace {
std::string g15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}
}  // namespace

std::string report_csv(const MomentReport& r, bool timing) {
  std::ostringstream os;
  os << "field,d,j,alpha_re,alpha_im,X,lhs_re,lhs_im,mt1_re,mt1_im,mt2_re,mt2_im,mt_alt_re,mt_alt_im,"
        "ratio_re,ratio_im,ratio_alt_re,ratio_alt_im,n_count,seconds\n";
  const auto& c = r.config;
  for (const MomentRow& w : r.rows) {
    os << field_name(c.d) << ',' << c.d << ',' << c.j << ',' << g15(c.alpha.real()) << ',' << g15(c.alpha.imag())
       << ',' << g15(w.X);
    for (cplx v : {w.lhs, w.mt1, w.mt2, w.mt_alt, w.ratio, w.ratio_alt}) os << ',' << g15(v.real()) << ',' << g15(v.imag());
    os << ',' << w.n_count << ',' << g15(timing ? w.seconds : 0.0) << '\n';
  }
  return os.str();
}

std::string report_json(const MomentReport& r, bool timing) {
  using nlohmann::json;
  auto cj = [](cplx v) { return json::array({v.real(), v.imag()}); };
  const auto& c = r.config;
  json j;
  j["config"] = {{"field", field_name(c.d)}, {"d", c.d}, {"j", c.j}, {"alpha", cj(c.alpha)}, {"X_list", c.X_list},
                 {"S", c.j > 2 ? ray_modulus(c) : 0}, {"eps", c.eps}, {"split", c.split}, {"test_function", r.test_function}};
  j["rows"] = json::array();
  for (const MomentRow& w : r.rows)
    j["rows"].push_back({{"X", w.X}, {"lhs", cj(w.lhs)}, {"mt1", cj(w.mt1)}, {"mt2", cj(w.mt2)}, {"mt_alt", cj(w.mt_alt)},
                         {"ratio", cj(w.ratio)}, {"ratio_alt", cj(w.ratio_alt)}, {"n_count", w.n_count},
                         {"seconds", timing ? w.seconds : 0.0}});
  j["abs_err"] = r.abs_err;
  j["non_increasing"] = r.non_increasing;
  j["main_term_reading"] = c.j == 2 ? "MT1 + MT2; mt_alt = MT1 with (1 + N^{-1-2a}) at primes of B_K, plus MT2" : "ratio form (mt1); product form reported as mt_alt";
  return j.dump(2);
}

}  // namespace iqf
