#pragma once
// Smoothed first moments of the quadratic and higher order families, brute force against main terms.

#include <functional>
#include <string>
#include <vector>

#include "iqf/hecke.hpp"
#include "iqf/lfunc.hpp"

namespace iqf {

// Phi >= 0 supported in (1, 2).
struct TestFunction {
  std::string name;
  std::function<double(double)> phi;
  double operator()(double x) const { return (x <= 1 || x >= 2) ? 0.0 : phi(x); }
  // exp(-1/((x-1)(2-x)))
  static TestFunction bump();
};

// int_1^2 Phi(t) t^{s-1} dt by adaptive Gauss-Kronrod, tolerance 1e-13 relative.
cplx mellin_phi(const TestFunction& phi, cplx s);

struct MomentConfig {
  int d = -1;
  int j = 2;
  cplx alpha = 0.25;
  std::vector<double> X_list;
  int64_t S = 0;            // ray modulus for j > 2; 0 means j^2
  double eps = 1e-14;       // L-value truncation
  double split = 1.0;       // theta split point scale (any value gives the same L)
  int64_t max_S_residues = 30000;  // budget on N(S); S = 144 needs 20736
  bool serial = false;      // use the serial reference path
};

struct MomentStats {
  int64_t n_count = 0;      // elements n with X < N(n) < 2X
  int64_t l_evaluations = 0;
};

// (1/2) sum_{chi in C_K} sum_{X < N(n) < 2X} L(1/2 + alpha, chi chi^{(n)}_2) Phi(N(n)/X)
cplx lhs_quadratic(const MomentConfig& cfg, double X, const TestFunction& phi, MomentStats* stats = nullptr);
// Same sum with an explicit norm window [lo, hi] (intersected with (X, 2X)).
cplx lhs_quadratic_window(const MomentConfig& cfg, double X, const TestFunction& phi, double lo, double hi,
                          MomentStats* stats = nullptr);

struct QuadraticMainTerms {
  // Local factor at each prime of B_K: (1 - N^{-1-2a}) / (1 - N^{-2-2a}), which removes the B_K-part of
  // zeta_K(1+2a)/zeta_K(2+2a) exactly as the diagonal m = k^2, (k, B_K) = 1 requires.
  cplx mt1 = 0, mt2 = 0;
  // Same with (1 + N^{-1-2a}) in the numerator, the other sign reading of this factor.
  cplx mt1_plus_sign = 0;
};
QuadraticMainTerms mt_quadratic(int d, cplx alpha, double X, const TestFunction& phi);

// (1/#h) sum_{chi mod S} sum_n L(1/2 + alpha, chi chi^{(n)}_j) Phi(N(n)/X)
cplx lhs_higher(const MomentConfig& cfg, double X, const TestFunction& phi, MomentStats* stats = nullptr);

struct HigherMainTerms {
  // X Phi^(1) |U| r_K / #h sum_chi L(jw, chi^j) / L(1 + jw, chi^j), w = 1/2 + alpha
  cplx ratio_form = 0;
  // X Phi^(1) r_K / #h sum_chi L(jw, chi^j) L(1 + jw, chi^j), the product read literally at s = 1
  cplx product_form = 0;
  int64_t characters = 0;
};
HigherMainTerms mt_higher(const MomentConfig& cfg, double X, const TestFunction& phi);

// j = 2: mt_alt = mt1_plus_sign + mt2. j > 2: mt_alt = product form.
struct MomentRow {
  double X = 0;
  cplx lhs = 0, mt1 = 0, mt2 = 0, mt_alt = 0, ratio = 0, ratio_alt = 0;
  int64_t n_count = 0;
  double seconds = 0;
};

struct MomentReport {
  MomentConfig config;
  std::string test_function;
  std::vector<MomentRow> rows;
  std::vector<double> abs_err;  // |ratio - 1| per row
  bool non_increasing = true;   // |ratio - 1| non-increasing with 20% slack per step
};

MomentReport run_experiment(const MomentConfig& cfg, const TestFunction& phi = TestFunction::bump());

// Header + one row per X. With timing = false the seconds column is written as 0.
std::string report_csv(const MomentReport& r, bool timing = true);
std::string report_json(const MomentReport& r, bool timing = true);

std::string field_name(int d);

}  // namespace iqf
