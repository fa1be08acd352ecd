#pragma once
// L(s, psi) for Hecke characters of trivial infinite type, via the theta functional equation.
// L is normalised as a sum over ideals: L(s, psi) = sum_a psi(a) N(a)^{-s}.

#include <memory>
#include <vector>

#include "iqf/hecke.hpp"

namespace iqf {

// One generator per nonzero ideal, sorted by (norm, a, b); covers all norms <= bound.
struct IdealReps {
  int d = 0;
  int64_t bound = 0;
  std::vector<int64_t> norm, a, b;
};
std::shared_ptr<const IdealReps> ideal_reps(int d, int64_t bound);

struct LOptions {
  double eps = 1e-14;
  // y0 = split / sqrt(|D| N(f)); any split > 0 gives the same value.
  double split = 1.0;
};

// Gamma(s) L(s, psi-hat) for a non-principal primitive character, from
//   |U|(2 pi)^{-s} Gamma(s) L = sum_m psi(m)(2 pi N m)^{-s} Gamma(s, 2 pi N(m) y0)
//     + g(1, psi)/(sqrt|D| N f) sum_k conj psi(k) A_k^{s-1} Gamma(1-s, A_k / y0),  A_k = 2 pi N(k)/(|D| N f).
cplx gamma_l_primitive(const PrimitiveData& pd, cplx s, const LOptions& opt = {});

// L(s, psi) for psi mod q (Euler factors at primes of q not dividing f included).
// Principal characters go through zeta_K.
cplx l_value(const PrimitiveData& pd, cplx s, const LOptions& opt = {});
cplx l_value(const HeckeChar& psi, cplx s, double eps = 1e-14);
// Gamma(s) L(s, psi); finite at the non-positive integers for non-principal psi.
cplx gamma_times_l(const PrimitiveData& pd, cplx s, const LOptions& opt = {});

// (|D| N f)^{s/2} (2 pi)^{-s} Gamma(s) L(s, psi-hat)
cplx lambda_completed(const PrimitiveData& pd, cplx s, const LOptions& opt = {});

// Batched evaluation, parallel over characters; output order follows input order.
std::vector<cplx> l_values(const std::vector<const PrimitiveData*>& chars, cplx s, const LOptions& opt = {});

// sum over ideals of norm <= max_norm of psi(a) N(a)^{-s}
cplx direct_series(const HeckeChar& psi, cplx s, int64_t max_norm);

struct CheckResult {
  cplx lhs = 0, rhs = 0;
  double diff = 0;
};

// Lambda(s, psi-hat) against W Lambda(1-s, conj psi-hat); the conjugate side uses a different split
// point so the comparison is not an identity of the evaluation scheme.
CheckResult fe_residual(const PrimitiveData& pd, cplx s);

// sum_m psi(m) e^{-2 pi y N(m)} against (sqrt|D| y N(q))^{-1} sum_{k != 0} g(k, psi) e^{-2 pi N(k)/(|D| y N(q))},
// psi read as a character mod q = psi.modulus(); both sums over elements.
CheckResult theta_identity_check(const HeckeChar& psi, double y);

// For Re s < -1/2:
//   L(s, psi) = N(q)^{-s} (2 pi / sqrt|D|)^{2s-1} Gamma(1-s) / (|U| Gamma(s)) sum_{k != 0} g(k, psi) N(k)^{s-1}.
// Both sides are multiplied by Gamma(s), which keeps them nonzero at s = -1, -2, ...
// The k-sum uses a smooth cutoff at norm R, R doubled until two successive values agree.
CheckResult dual_series_check(const HeckeChar& psi, cplx s);

}  // namespace iqf
