#pragma once
// Gauss sums g(k, chi) = sum_{x mod n} chi(x) e~(k x / n) and the corrected quadratic sums G.

#include "iqf/field.hpp"
#include "iqf/residues.hpp"

namespace iqf {

// e~(z) = exp(2 pi i Tr(z / sqrt D)). Tr(z / sqrt D) is the omega-coordinate of z, so for
// z = num / den this is e((num * conj den).b / N(den)), reduced exactly before the exponential.
cplx e_tilde(const Elem& num, const Elem& den);
inline cplx e_tilde(const Elem& z) { return e_tilde(z, Elem::integer(z.d, 1)); }

// Direct sum over the residue system of ResidueRing(n). chi must be periodic modulo n.
// The parallel version sums fixed-size index blocks and adds block totals in order, so the result
// does not depend on the thread count.
cplx gauss_direct(const Elem& k, const ResidueCharacter& chi, const Elem& n);
cplx gauss_direct_serial(const Elem& k, const ResidueCharacter& chi, const Elem& n);

// Quadratic Gauss sum g(1, chi_{2, pi}) for a primary prime coprime to B_K, in closed form.
cplx gauss_prime_value(const Elem& pi);

// g(k, chi_{2,n}) by direct summation.
cplx gauss_quadratic(const Elem& k, const Elem& n);
// G(k, chi_{2,n}) = ((1-i)/2 + (-1/n)_2 (1+i)/2) g(k, chi_{2,n}), n odd.
cplx gauss_G(const Elem& k, const Elem& n);
// Closed form of G(k, chi_{2, pi^l}) for a primary prime pi coprime to 2 (6 when d = -3).
cplx gauss_G_primepower(const Elem& k, const Elem& pi, int l);
// conj((s/n)_2) G(r, chi_{2,n}); requires (s, n) = 1.
cplx gauss_G_twist(const Elem& r, const Elem& s, const Elem& n);

// #(O/n)^x
Int phi_K(const Elem& n);

}  // namespace iqf
