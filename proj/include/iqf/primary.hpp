#pragma once
// Canonical ("primary" / "E-primary") generators of ideals.

#include <utility>
#include <vector>

#include "iqf/field.hpp"

namespace iqf {

struct ParityData {
  int t = 0;
  int t_prime = 0;
};

// Quadratic and sextic work in Q(sqrt -3) uses E-primary generators; everything else uses primary.
PrimaryKind default_kind(int d, int j);

// Primes that are declared primary outright (stripped before the congruence test).
std::vector<Elem> special_primes(int d, PrimaryKind kind);

// Throws std::invalid_argument for e_primary outside d = -3.
bool is_primary(const Elem& x, PrimaryKind kind = PrimaryKind::primary);

// x = u * y with u a unit and y primary of the requested kind.
std::pair<Elem, Elem> canonical_primary(const Elem& x, PrimaryKind kind = PrimaryKind::primary);

// (t, t') for odd x in fields other than d = -1, -3; looked up from x mod 4 in coordinates.
ParityData t_pair(const Elem& x);

// Coordinates for d = -3 in the basis {1, rho}: a + b*rho with rho = omega_K - 1 a primitive cube root of unity.
std::pair<Int, Int> rho_coords(const Elem& x);
Elem from_rho_coords(const Int& a, const Int& b);

}  // namespace iqf
