#pragma once
// Hecke characters of trivial infinite type on O_K (class number one), their conductors,
// and ray class groups modulo an integral element.

#include <memory>
#include <string>
#include <vector>

#include "iqf/field.hpp"
#include "iqf/residues.hpp"

namespace iqf {

// Rational integer M such that x -> (a/x)_j, restricted to x coprime to M, is periodic modulo
// M * prod{pi | a, pi not dividing M}. Checked against the symbol definition in the test suite.
int64_t reciprocity_modulus(int d, int j);

struct PrimitiveData;
class HeckeChar;
PrimitiveData conductor(const HeckeChar& psi);

// A character psi mod q, psi(x) = 0 unless (x, q) = 1. Values are e(t / order()).
//
// Storage: a table over O/M for a modulus M, plus one table over O/pi for each extra prime pi
// (with a multiplicity). For x coprime to q the exponent is tabM[x mod M] + sum mult * T_pi[x mod pi].
class HeckeChar final : public ResidueCharacter {
 public:
  struct Part {
    Elem pi;
    std::shared_ptr<const PrimeResidueField> field;
    std::shared_ptr<const std::vector<int8_t>> table;  // exponent mod jp, -1 at 0
    int jp = 1;
    int mult = 0;  // in [0, jp)
  };

  HeckeChar() = default;

  static HeckeChar principal(int d, const Elem& q);
  // x -> (a/x)_j on x coprime to a and to reciprocity_modulus(d, j).
  static HeckeChar symbol_char(const Elem& a, int j);
  // Residue table over O/q (exponents mod order, -1 where the value is 0). Must vanish exactly
  // off (x, q) = 1 and be trivial on the units; both are checked.
  static HeckeChar from_table(const Elem& q, int order, std::vector<int16_t> table, std::string label);

  HeckeChar operator*(const HeckeChar& o) const;
  HeckeChar pow(long long k) const;
  HeckeChar conj() const { return pow(-1); }

  int d() const { return d_; }
  int order() const override { return L_; }
  const Elem& modulus() const { return q_; }
  const Elem& table_modulus() const { return M_; }
  const std::vector<Part>& parts() const { return parts_; }
  const std::string& label() const { return label_; }

  int exponent(const Elem& x) const override;
  int exponent_ab(int d, int64_t a, int64_t b) const override;
  cplx value(const Elem& x) const;

  // True when psi is 1 on every residue coprime to q.
  bool is_principal() const;
  // Byte string that is equal for two characters built on the same tables iff they are the same function.
  std::string signature() const;

 private:
  friend struct PrimitiveData;
  friend PrimitiveData conductor(const HeckeChar&);
  void finish();

  int d_ = -1;
  int L_ = 1;
  Elem M_, q_;
  std::shared_ptr<const ResidueRing> ringM_;
  std::shared_ptr<const std::vector<int16_t>> tabM_;
  std::vector<Part> parts_;
  std::string label_;
};

// psi(x) = twist(x) * (n/x)_j; with no twist the modulus is that of the symbol character.
HeckeChar char_from_symbol(const Elem& n, int j, const HeckeChar* twist = nullptr);

struct PrimitiveData {
  Elem conductor;          // f, a product of the local conductors
  HeckeChar primitive;     // psi-hat mod f
  cplx gauss1 = 0;         // g(1, psi-hat) over O/f
  cplx W = 0;              // gauss1 / sqrt N(f)
  // Primes dividing q but not f, with psi-hat there (exponent mod order). These give the factors
  // (1 - psi-hat(P) N(P)^{-s}) that turn L(s, psi-hat) into L(s, psi).
  std::vector<std::pair<Elem, int>> euler;
  bool principal = false;  // f = 1
};

PrimitiveData conductor(const HeckeChar& psi);

// (O/S)^x modulo the image of the units, with independent generators.
class RayClassGroup {
 public:
  RayClassGroup(int d, const Elem& S, int64_t budget = 200000);

  int d() const { return d_; }
  const Elem& modulus() const { return S_; }
  const std::vector<int>& orders() const { return orders_; }
  const std::vector<Elem>& generators() const { return gens_; }
  int64_t size() const { return size_; }              // #h
  int64_t unit_image_size() const { return unit_image_; }
  int64_t phi() const { return phi_; }
  int exponent() const { return exponent_; }          // lcm of the orders

  // Mixed-radix class label of x (digit i = discrete log along generator i), -1 if (x, S) != 1.
  int64_t label(const Elem& x) const;
  std::vector<int> dlog(const Elem& x) const;

  // Character number c in [0, size()): x -> e(sum_i c_i log_i(x) / o_i) with c in mixed radix.
  HeckeChar character(int64_t c) const;
  std::vector<HeckeChar> characters() const;

 private:
  int d_;
  Elem S_;
  std::shared_ptr<const ResidueRing> ring_;
  std::vector<int> orders_;
  std::vector<Elem> gens_;
  std::vector<int64_t> labels_;  // per residue index
  int64_t size_ = 1, unit_image_ = 1, phi_ = 0;
  int exponent_ = 1;
};

RayClassGroup ray_class_group(int d, int64_t S);

// Direct g(k, psi) over O/q (thin wrapper over gauss_direct).
cplx gauss_hecke(const Elem& k, const HeckeChar& psi);

// The two twists of the quadratic family: x -> (B^2/x)_2 and x -> (eps B^2/x)_2 with eps = i for
// d = -1 and -1 otherwise.
std::vector<HeckeChar> c_k_family(int d);
// eps * B^2
Elem family_twist_element(int d, int which);

}  // namespace iqf
