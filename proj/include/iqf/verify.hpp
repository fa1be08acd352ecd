#pragma once
// Exhaustive and sampled verification sweeps shared by the CLI and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "iqf/hecke.hpp"
#include "iqf/primary.hpp"

namespace iqf {

struct SweepResult {
  std::string name;
  int64_t checks = 0;
  int64_t violations = 0;
  double max_err = 0;
  std::string first_failure;  // empty when there is none
  bool ok() const { return violations == 0 && checks > 0; }
  void fail(const std::string& what);
  void error(double e, double tol, const std::string& what);
};

// Nonzero elements of norm <= R with a primary (kind) generator, in canonical order.
std::vector<Elem> primary_elements(int d, int64_t R, PrimaryKind kind);
bool is_prime_element(const Elem& x);

// Reciprocity law of order j over coprime primary pairs (E-primary for j in {2, 6}, d = -3), norms <= R.
SweepResult reciprocity_sweep(int d, int j, int64_t R);
// Supplementary closed forms against the exponentiation definition for the field d, norms <= R.
// Fields without supplementary laws give an empty (checks = 0) result.
SweepResult supplementary_sweep(int d, int64_t R);

// Closed form for g(1, chi_{2,pi}) against the direct sum at primary primes coprime to B_K, norms <= R.
// With with_unit_factor the d = -1 values carry the extra (i/pi)_2 that the direct sums show.
SweepResult gauss_prime_sweep(int d, int64_t R, bool with_unit_factor = false);
// G(k, mn) = G(k, m) G(k, n) for coprime odd primary m, n with N(m) N(n) <= R.
SweepResult gauss_multiplicative_sweep(int d, int64_t R);
// G(rs, n) = conj((s/n)_2) G(r, n), random r, s and odd primary n of norm <= R.
SweepResult gauss_twist_sweep(int d, int64_t R, int samples, uint64_t seed);
// Closed form of G(k, pi^l) against direct sums for all primary prime powers of norm <= R.
SweepResult gauss_primepower_sweep(int d, int64_t R);

// Non-principal ray class characters modulo prime elements of norm <= max_norm, in canonical order.
std::vector<HeckeChar> sample_characters(int d, size_t want, int64_t max_norm = 400);

// |Lambda(s) - W Lambda(1-s, conj)| < 1e-8 and ||W| - 1| < 1e-10 over the s list.
SweepResult fe_sweep(int d, size_t characters, const std::vector<cplx>& s_list);
SweepResult theta_sweep(int d, size_t characters, const std::vector<double>& y_list);
// psi = chi * principal(P), modulus norm <= 200, compared at s.
SweepResult dual_sweep(int d, size_t characters, cplx s);
// zeta_K(s) against the ideal sum up to R plus its leading tail r_K R^{1-s}/(s-1); r_K against the
// symmetric difference quotient of (s-1) zeta_K(s) at 1.
SweepResult zeta_sweep(int d, double s, int64_t R);

}  // namespace iqf
