#pragma once
// Ring of integers O_K = Z + Z*omega for the nine imaginary quadratic fields of class number one.

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iqf/bigint.hpp"

namespace iqf {

using cplx = std::complex<double>;

inline constexpr std::array<int, 9> kFields = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
bool is_valid_field(int d);

struct FieldId {
  int d;
  explicit FieldId(int d_);
};

struct FieldMismatch : std::invalid_argument {
  FieldMismatch() : std::invalid_argument("elements belong to different fields") {}
};
struct FactorBudgetExceeded : std::runtime_error {
  explicit FactorBudgetExceeded(const std::string& m) : std::runtime_error(m) {}
};

// a + b*omega, omega = (1+sqrt d)/2 for d = 1 mod 4, sqrt d otherwise.
struct Elem {
  Int a, b;
  int d = -1;
  Elem() = default;
  Elem(int d_, Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)), d(d_) {}
  static Elem integer(int d, Int v) { return Elem(d, std::move(v), Int(0)); }
  static Elem omega(int d) { return Elem(d, Int(0), Int(1)); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  std::string str() const;
};

bool operator==(const Elem& x, const Elem& y);
inline bool operator!=(const Elem& x, const Elem& y) { return !(x == y); }
Elem operator+(const Elem& x, const Elem& y);
Elem operator-(const Elem& x, const Elem& y);
Elem operator-(const Elem& x);
Elem operator*(const Elem& x, const Elem& y);
Elem operator*(const Int& k, const Elem& x);
Elem pow(const Elem& x, unsigned e);

Int norm(const Elem& x);
Elem conj(const Elem& x);
Int trace(const Elem& x);
Elem add(const Elem& x, const Elem& y);
Elem mul(const Elem& x, const Elem& y);
cplx to_complex(const Elem& x);
bool is_unit(const Elem& x);

// y | x
bool divides(const Elem& y, const Elem& x);
// x / y, throws std::domain_error when not exact.
Elem exact_div(const Elem& x, const Elem& y);
// x = q*y + r with q a nearest lattice point to x/y; exact ties go to the smaller coordinate.
std::pair<Elem, Elem> divrem(const Elem& x, const Elem& y);

// Canonical total order: (norm, a, b).
bool canonical_less(const Elem& x, const Elem& y);
struct CanonicalLess {
  bool operator()(const Elem& x, const Elem& y) const { return canonical_less(x, y); }
};
struct ElemHash {
  size_t operator()(const Elem& x) const { return x.a.hash() * 1000003u ^ x.b.hash() ^ size_t(x.d); }
};

enum class SplitType { ramified, split, inert };
const char* to_string(SplitType t);

struct PrimeElem {
  Elem elem;
  int64_t p = 0;
  SplitType split = SplitType::split;
};

// Normalisation family for generators; e_primary exists only for d = -3.
enum class PrimaryKind { primary, e_primary };

struct FieldData {
  int d = 0;
  int D = 0;               // discriminant
  bool omega_half = false; // d = 1 mod 4
  std::vector<Elem> units;
  Int B;                   // auxiliary modulus of the quadratic family
  Elem eta;                // unit constant in the prime-power Gauss sum
  double r_K = 0;          // residue of zeta_K at s = 1
  bool euclidean = false;
  int64_t c = 0;           // N(x + y w) = x^2 + xy + c y^2 (half) or x^2 + c y^2 (root)

  int unit_count() const { return int(units.size()); }
  Elem one() const { return Elem::integer(d, 1); }
  Elem zero() const { return Elem::integer(d, 0); }
  Elem w() const { return Elem::omega(d); }
};

const FieldData& field_data(FieldId id);
inline const FieldData& field_data(int d) { return field_data(FieldId(d)); }

int kronecker(int64_t a, int64_t n);
SplitType split_type(int d, int64_t p);
// Raw generators (not normalised) of the primes above p.
std::vector<Elem> primes_above(int d, int64_t p);

// Factorisation of a nonzero rational integer (Miller-Rabin + Pollard rho).
std::vector<std::pair<uint64_t, int>> factor_integer(uint64_t n);
bool is_prime_u64(uint64_t n);

struct Factorization {
  Elem unit;
  std::vector<std::pair<PrimeElem, int>> factors;
  Elem product() const;  // unit * prod prime^exp
};
// Primes returned as canonical primary generators of the requested kind.
Factorization factor(const Elem& x, PrimaryKind kind = PrimaryKind::primary);
// Generator of (x, y), canonical primary associate.
Elem gcd(const Elem& x, const Elem& y);

// All nonzero elements with lo <= N <= hi, in canonical order.
std::vector<Elem> enumerate_norm_range(int d, int64_t lo, int64_t hi);

// zeta_K(s) = zeta(s) L(s, chi_D); throws std::domain_error within 1e-6 of s = 1.
cplx zeta_K(int d, cplx s);

}  // namespace iqf
