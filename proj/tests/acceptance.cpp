// Acceptance runner: one PASS/FAIL line per criterion, details indented below it.
// Exit status is the number of failed criteria (capped at 1 for ctest).

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "iqf/moment.hpp"
#include "iqf/symbols.hpp"
#include "iqf/verify.hpp"

using namespace iqf;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void add(const SweepResult& r) {
    std::ostringstream os;
    os << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.violations
       << " violations, max err " << r.max_err;
    if (!r.first_failure.empty()) os << "; first: " << r.first_failure;
    details.push_back(os.str());
    pass = pass && r.ok();
  }
  void note(const std::string& s) { details.push_back(s); }
};

std::string g(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Outcome c1() {
  Outcome o;
  for (int d : kFields)
    for (int j : {2, 3, 4, 6})
      if (order_supported(d, j)) o.add(reciprocity_sweep(d, j, 500));
  return o;
}

Outcome c2() {
  Outcome o;
  o.add(supplementary_sweep(-1, 2000));
  o.add(supplementary_sweep(-3, 2000));
  return o;
}

Outcome c3() {
  Outcome o;
  for (int d : kFields) o.add(gauss_prime_sweep(d, 500));
  for (int d : kFields) {
    o.add(gauss_multiplicative_sweep(d, 3000));
    o.add(gauss_twist_sweep(d, 300, 40, 20260101));
    o.add(gauss_primepower_sweep(d, 2000));
  }
  SweepResult corrected = gauss_prime_sweep(-1, 500, true);
  o.note("info: d=-1 prime values with the extra factor (i/pi)_2: " + std::to_string(corrected.checks) + " checks, " +
         std::to_string(corrected.violations) + " violations (not part of the verdict)");
  return o;
}

Outcome c4() {
  Outcome o;
  for (int d : kFields) o.add(fe_sweep(d, 20, {0.3, 0.5, cplx(0.5, 0.7), 1.2}));
  return o;
}

Outcome c5() {
  Outcome o;
  for (int d : kFields) o.add(theta_sweep(d, 10, {0.5, 1.0, 2.0}));
  return o;
}

Outcome c6() {
  Outcome o;
  for (int d : kFields) o.add(dual_sweep(d, 5, -1.0));
  return o;
}

Outcome c7() {
  Outcome o;
  for (int d : kFields) o.add(zeta_sweep(d, 2.0, 1000000));
  return o;
}

MomentConfig quad_config(int d) {
  MomentConfig c;
  c.d = d;
  c.j = 2;
  c.alpha = 0.25;
  c.X_list = {100, 200, 500};
  return c;
}

MomentConfig cubic_config() {
  MomentConfig c;
  c.d = -3;
  c.j = 3;
  c.S = 9;
  c.alpha = 0.25;
  c.X_list = {100, 300};
  return c;
}

std::string trend(const MomentReport& r) {
  std::string s;
  for (size_t i = 0; i < r.rows.size(); ++i)
    s += (i ? ", " : "") + std::string("X=") + g(r.rows[i].X) + " ratio=" + g(r.rows[i].ratio.real(), 8) +
         " |ratio-1|=" + g(r.abs_err[i], 4);
  return s;
}

std::vector<std::string> reports_for_determinism;

Outcome c8() {
  Outcome o;
  for (int d : {-1, -3}) {
    auto t0 = std::chrono::steady_clock::now();
    MomentReport r = run_experiment(quad_config(d));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    reports_for_determinism.push_back(report_csv(r, false));
    bool final_ok = r.abs_err.back() <= 0.10;
    bool ok = final_ok && r.non_increasing;
    o.pass = o.pass && ok;
    o.note(std::string(ok ? "ok   " : "FAIL ") + field_name(d) + ": " + trend(r) + "; final within 0.10: " +
           (final_ok ? "yes" : "no") + "; non-increasing with 20% slack: " + (r.non_increasing ? "yes" : "no") +
           "; " + g(secs, 3) + " s");
    std::string alt;
    for (const MomentRow& w : r.rows) alt += (alt.empty() ? "" : ", ") + g(w.ratio_alt.real(), 6);
    o.note("info: " + field_name(d) + " ratio against MT1 with (1 + N^{-1-2a}) at primes of B_K: " + alt);
  }
  return o;
}

Outcome c9() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  MomentReport r = run_experiment(cubic_config());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  reports_for_determinism.push_back(report_csv(r, false));
  bool final_ok = r.abs_err.back() <= 0.15;
  // ratio form must fit strictly better than the product form at every X
  bool better = true;
  std::string cmp;
  for (const MomentRow& w : r.rows) {
    double e1 = std::abs(w.ratio - 1.0), e2 = std::abs(w.ratio_alt - 1.0);
    better = better && e1 < e2;
    cmp += (cmp.empty() ? "" : ", ") + std::string("X=") + g(w.X) + " ratio-form err " + g(e1, 4) +
           " vs product-form err " + g(e2, 4);
  }
  o.pass = final_ok && better;
  o.note(std::string(final_ok ? "ok   " : "FAIL ") + "Q(sqrt(-3)) j=3 S=9: " + trend(r) + "; " + g(secs, 3) + " s");
  o.note(std::string(better ? "ok   " : "FAIL ") + cmp);
  return o;
}

Outcome c10() {
  Outcome o;
  const int saved = omp_get_max_threads();
  std::vector<std::string> base = reports_for_determinism;
  if (base.size() != 3) {
    o.pass = false;
    o.note("criteria 8 and 9 did not both produce reports");
    return o;
  }
  for (int t : {1, 4, 8}) {
    omp_set_num_threads(t);
    std::vector<std::string> got{report_csv(run_experiment(quad_config(-1)), false),
                                 report_csv(run_experiment(quad_config(-3)), false),
                                 report_csv(run_experiment(cubic_config()), false)};
    bool same = got == base;
    o.pass = o.pass && same;
    o.note(std::string(same ? "ok   " : "FAIL ") + std::to_string(t) + " threads: outputs " +
           (same ? "bit-identical" : "differ"));
  }
  omp_set_num_threads(saved);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "reciprocity sweep, norms <= 500", c1},
      {2, "supplementary laws, norms <= 2000", c2},
      {3, "Gauss sum closed forms against direct sums", c3},
      {4, "functional equation and |W| = 1", c4},
      {5, "theta identity", c5},
      {6, "dual series at s = -1", c6},
      {7, "zeta_K(2) and r_K", c7},
      {8, "quadratic first moment convergence", c8},
      {9, "cubic first moment convergence and main term reading", c9},
      {10, "determinism across 1, 4, 8 threads", c10},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << g(secs, 3)
              << " s)\n";
    for (const std::string& s : o.details) std::cout << "    " << s << "\n";
    std::cout.flush();
    failed += !o.pass;
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed ? 1 : 0;
}
