#pragma once
// j-th power residue symbols (a / n)_j for j in {2, 3, 4, 6}.

#include <stdexcept>
#include <string>
#include <vector>

#include "iqf/field.hpp"
#include "iqf/residues.hpp"

namespace iqf {

struct IncompatibleOrder : std::invalid_argument {
  IncompatibleOrder(int d, int j);
};

// j = 2 everywhere, j = 4 only for d = -1, j = 3, 6 only for d = -3.
bool order_supported(int d, int j);
void check_order(int d, int j);
// Human-readable table of the allowed (d, j) pairs.
std::string compatibility_table();

// e(exponent / order), or 0.
struct RootOfUnity {
  int exponent = 0;
  int order = 1;
  bool is_zero = false;

  static RootOfUnity zero(int j) { return {0, j, true}; }
  static RootOfUnity one(int j) { return {0, j, false}; }
  cplx value() const { return is_zero ? cplx(0) : unit_root(exponent, order); }
  RootOfUnity pow(long long k) const;
  RootOfUnity conj() const { return pow(-1); }
  // Same value seen as a root of order L (order | L).
  RootOfUnity as_order(int L) const;
  bool operator==(const RootOfUnity& o) const;
};
RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y);

// The generator e(1/j) of the j-th roots of unity as a ring element.
Elem zeta_elem(int d, int j);

// (a / pi)_j at a prime, from a^{(N(pi)-1)/j} mod pi.
RootOfUnity symbol_prime(const Elem& a, const Elem& pi, int j);
// Multiplicative extension over the prime factorisation of n; n must be coprime to j.
RootOfUnity symbol(const Elem& a, const Elem& n, int j);

// u^{(N(n)-1)/j} for a unit u, read as the j-th root of unity congruent to it modulo n.
// For d = -3 this needs (n, 6) = 1; other n are rejected.
RootOfUnity unit_symbol(const Elem& u, const Elem& n, int j);

// Checks the reciprocity law of order j for coprime primary n, m (E-primary where required).
bool reciprocity_check(const Elem& n, const Elem& m, int j);

enum class SuppArg { i, one_plus_i, rho, one_minus_rho, two };
// Closed-form supplementary laws. For d = -3 the element rho is the cube root of unity omega_K - 1,
// and the coordinates a, b are taken in the basis {1, rho}.
RootOfUnity supplementary(SuppArg v, const Elem& n, int j);
Elem supp_elem(SuppArg v, int d);

// The character x -> (x / n)_j on O/n, tabulated per prime of n.
class DenominatorSymbol : public ResidueCharacter {
 public:
  DenominatorSymbol(const Elem& n, int j);
  int order() const override { return j_; }
  int exponent(const Elem& x) const override;
  int exponent_ab(int d, int64_t a, int64_t b) const override;

 private:
  struct Part {
    PrimeResidueField field;
    int mult;
    std::vector<int8_t> table;
  };
  int j_;
  std::vector<Part> parts_;
};

// Discrete-log table of x -> x^{(N-1)/j} over O/pi, -1 at 0.
std::vector<int8_t> power_residue_table(const PrimeResidueField& fld, int j);

}  // namespace iqf
