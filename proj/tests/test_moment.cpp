#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "iqf/moment.hpp"
#include "iqf/special.hpp"

using namespace iqf;

TEST_CASE("Mellin transform of the bump") {
  TestFunction phi = TestFunction::bump();
  // trapezoid oracle for the integral of Phi (smooth, vanishing to all orders at both ends)
  const int n = 20000;
  double trap = 0;
  for (int i = 1; i < n; ++i) trap += phi(1.0 + double(i) / n);
  trap /= n;
  CHECK(std::abs(mellin_phi(phi, 1.0) - trap) < 1e-12);
  cplx v = mellin_phi(phi, 0.75);
  CHECK(std::abs(v.imag()) < 1e-15);
  CHECK(v.real() > 0);
  // four integrations by parts: |Phi^(s)| <= int |Phi''''(t)| t^{Re s + 3} dt / |s (s+1) (s+2) (s+3)|
  const cplx s(1.0, 50.0);
  const double h = 1e-3;
  double c4 = 0;
  for (int i = 1; i < 1000; ++i) {
    double t = 1.0 + i * 1e-3;
    double d4 = (phi(t - 2 * h) - 4 * phi(t - h) + 6 * phi(t) - 4 * phi(t + h) + phi(t + 2 * h)) / std::pow(h, 4);
    c4 += std::abs(d4) * std::pow(t, 4.0) * 1e-3;
  }
  double bound = c4 / std::abs(s * (s + 1.0) * (s + 2.0) * (s + 3.0));
  CAPTURE(bound);
  CHECK(std::abs(mellin_phi(phi, s)) <= bound);
}

TEST_CASE("quadratic moment: window additivity and reality") {
  MomentConfig cfg;
  cfg.d = -1;
  TestFunction phi = TestFunction::bump();
  const double X = 60;
  MomentStats st;
  cplx all = lhs_quadratic(cfg, X, phi, &st);
  cplx a = lhs_quadratic_window(cfg, X, phi, X, 1.5 * X);
  cplx b = lhs_quadratic_window(cfg, X, phi, std::nextafter(1.5 * X, 1e9), 2 * X);
  CHECK(std::abs(all - (a + b)) < 1e-12 * std::abs(all));
  CHECK(std::abs(all.imag()) < 1e-8);
  // elements of norm in (X, 2X): about pi X in Q(i)
  CHECK(std::abs(double(st.n_count) / (std::numbers::pi * X) - 1) < 0.15);
  CHECK(st.l_evaluations > 0);
}

TEST_CASE("quadratic moment is independent of the theta split") {
  for (int d : {-1, -3}) {
    MomentConfig cfg;
    cfg.d = d;
    MomentConfig other = cfg;
    other.split = 0.7;
    other.serial = true;
    TestFunction phi = TestFunction::bump();
    cplx a = lhs_quadratic(cfg, 50, phi), b = lhs_quadratic(other, 50, phi);
    CHECK(std::abs(a - b) < 1e-6 * std::abs(a));
  }
}

TEST_CASE("quadratic main terms") {
  TestFunction phi = TestFunction::bump();
  auto m1 = mt_quadratic(-1, 0.25, 100, phi), m2 = mt_quadratic(-1, 0.25, 300, phi);
  CHECK(std::abs(m2.mt1 - 3.0 * m1.mt1) < 1e-12 * std::abs(m2.mt1));
  CHECK(std::abs(m2.mt2 - std::pow(3.0, 0.75) * m1.mt2) < 1e-12 * std::abs(m2.mt2));
  // Q(i): B_K = -4 has the single prime 1 + i, so the two readings differ by (1 - x)/(1 + x), x = 2^{-3/2}
  const double x = std::pow(2.0, -1.5);
  CHECK(std::abs(m1.mt1 / m1.mt1_plus_sign - (1 - x) / (1 + x)) < 1e-13);
  // real alpha gives real terms
  CHECK(std::abs(m1.mt1.imag()) < 1e-14 * std::abs(m1.mt1));
  CHECK(std::abs(m1.mt2.imag()) < 1e-14 * std::abs(m1.mt2));
}

TEST_CASE("higher order family over Q(sqrt -3)") {
  MomentConfig cfg;
  cfg.d = -3;
  cfg.j = 3;
  cfg.S = 9;
  TestFunction phi = TestFunction::bump();
  HigherMainTerms m = mt_higher(cfg, 60, phi);
  CHECK(m.characters == 9);
  MomentStats st;
  cplx lhs = lhs_higher(cfg, 60, phi, &st);
  // family closed under conjugation, so a real alpha gives a real average
  CHECK(std::abs(lhs.imag()) < 1e-8);
  CHECK(std::abs(m.ratio_form.imag()) < 1e-10 * std::abs(m.ratio_form));
  // elements of norm in (X, 2X) number about 2 pi X / sqrt 3
  CHECK(std::abs(double(st.n_count) / (2 * std::numbers::pi * 60 / std::sqrt(3.0)) - 1) < 0.15);
  MomentConfig ser = cfg;
  ser.serial = true;
  CHECK(lhs_higher(ser, 60, phi) == lhs);
}

TEST_CASE("configuration checks") {
  MomentConfig cfg;
  cfg.d = -7;
  cfg.j = 4;
  cfg.X_list = {100};
  CHECK_THROWS(run_experiment(cfg));
  cfg.j = 2;
  cfg.alpha = 0.5;
  CHECK_THROWS(run_experiment(cfg));
  MomentConfig h;
  h.d = -3;
  h.j = 3;
  h.S = 12;
  h.X_list = {100};
  CHECK_THROWS(run_experiment(h));
  h.S = 900;
  CHECK_THROWS_AS(run_experiment(h), std::length_error);
}

TEST_CASE("report formats") {
  MomentConfig cfg;
  cfg.d = -1;
  cfg.X_list = {30, 60};
  MomentReport r = run_experiment(cfg);
  REQUIRE(r.rows.size() == 2);
  std::string csv = report_csv(r, false);
  CHECK(csv.rfind("field,d,j,alpha_re", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(report_csv(run_experiment(cfg), false) == csv);
  std::string js = report_json(r, false);
  CHECK(js.find("\"rows\"") != std::string::npos);
}
