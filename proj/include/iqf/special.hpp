#pragma once
// Complex special functions: Gamma, upper incomplete Gamma, Riemann/Hurwitz zeta, L(s, chi_D).

#include <complex>

namespace iqf {

using cplx = std::complex<double>;

// Stirling series after shifting to |z| >= 15, reflection for Re z < 1/2.
// Series coefficients are B_{2k} / (2k (2k-1)), B_{2k} the Bernoulli numbers.
cplx log_gamma(cplx z);
cplx cgamma(cplx z);
// 1/Gamma(z), entire (exactly 0 at non-positive integers).
cplx rgamma(cplx z);

// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt for real x > 0, any complex s.
cplx upper_gamma(cplx s, double x);
// Exponential integral E1(x), x > 0.
double expint_e1(double x);

cplx riemann_zeta(cplx s);
// sum_{n >= 0} (n + a)^{-s}, 0 < a <= 1.
cplx hurwitz_zeta(cplx s, double a);
// L(s, chi_D) for the Kronecker character (D / .).
cplx kronecker_L(int D, cplx s);

}  // namespace iqf
