#pragma once
// Residue rings O/n in coordinates, residue fields O/pi, and the character interface used by Gauss sums.

#include <cstdint>
#include <vector>

#include "iqf/field.hpp"

namespace iqf {

// Finite field O/pi for a prime element pi. Degree one primes map omega to an integer r mod p;
// inert primes keep pairs u + v*omega in F_{p^2}.
class PrimeResidueField {
 public:
  struct F {
    int64_t u = 0, v = 0;
    bool operator==(const F&) const = default;
  };

  explicit PrimeResidueField(const Elem& pi);

  const Elem& prime() const { return pi_; }
  int64_t p() const { return p_; }
  bool degree_one() const { return deg1_; }
  int64_t size() const { return deg1_ ? p_ : p_ * p_; }
  int64_t root() const { return r_; }  // image of omega when degree_one()

  F reduce(const Elem& x) const;
  F reduce(int64_t a, int64_t b) const;
  int64_t index(const F& f) const { return f.u + p_ * f.v; }
  int64_t index(int64_t a, int64_t b) const { return index(reduce(a, b)); }
  F from_index(int64_t i) const { return F{i % p_, i / p_}; }
  Elem lift(const F& f) const { return Elem(d_, f.u, f.v); }

  F mul(const F& x, const F& y) const;
  F pow(F x, uint64_t e) const;
  F inv(const F& x) const;  // x != 0
  bool is_zero(const F& x) const { return x.u == 0 && x.v == 0; }

 private:
  Elem pi_;
  int d_;
  int64_t p_ = 0, r_ = 0, c_ = 0;
  bool deg1_ = true, half_ = false;
};

// O/n with the Hermite normal form basis {(e, 0), (c, f)} of the lattice n*O, e*f = N(n).
// A residue x1 + x2*omega is canonical when 0 <= x1 < e, 0 <= x2 < f; index = x2*e + x1.
class ResidueRing {
 public:
  explicit ResidueRing(const Elem& n);

  const Elem& modulus() const { return n_; }
  int64_t size() const { return e_ * f_; }
  int64_t e() const { return e_; }
  int64_t f() const { return f_; }
  int64_t c() const { return c_; }

  int64_t index(const Elem& x) const;
  int64_t index(int64_t a, int64_t b) const;
  Elem element(int64_t idx) const { return Elem(n_.d, idx % e_, idx / e_); }

 private:
  Elem n_;
  int64_t e_ = 1, f_ = 1, c_ = 0;
};

// A function on O that is periodic modulo some ideal and multiplicative where nonzero,
// reported as an exponent of e(1/order), or -1 for the value 0.
struct ResidueCharacter {
  virtual ~ResidueCharacter() = default;
  virtual int order() const = 0;
  virtual int exponent(const Elem& x) const = 0;
  // Same value for x = a + b*omega with small coordinates; override to skip building an Elem.
  virtual int exponent_ab(int d, int64_t a, int64_t b) const { return exponent(Elem(d, a, b)); }
};

// exp(2 pi i k / L)
cplx unit_root(int64_t k, int64_t L);

}  // namespace iqf
