#pragma once
// Integer that stays in an int64 until an operation overflows, then moves to GMP.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace iqf {

class Int {
 public:
  Int() = default;
  Int(int v) : s_(v) {}
  Int(long v) : s_(v) {}
  Int(long long v) : s_(static_cast<int64_t>(v)) {}
  explicit Int(const mpz_class& z);
  static Int from_string(const std::string& s);

  bool is_small() const { return !big_; }
  // Only valid when is_small().
  int64_t small() const { return s_; }
  bool fits_int64() const { return !big_; }
  int64_t to_int64() const;  // throws std::overflow_error
  mpz_class to_mpz() const;
  double to_double() const;
  std::string to_string() const;

  int sign() const;
  bool is_zero() const { return !big_ && s_ == 0; }
  bool is_odd() const;

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b);
  friend std::strong_ordering operator<=>(const Int& a, const Int& b);

  // Floor division and the matching non-negative-for-positive-divisor remainder.
  static Int floor_div(const Int& a, const Int& b);
  static Int floor_mod(const Int& a, const Int& b);
  // Exact division; throws std::domain_error if b does not divide a.
  static Int exact_div(const Int& a, const Int& b);
  static bool divides(const Int& b, const Int& a);  // b | a
  static Int gcd(const Int& a, const Int& b);
  static Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }
  size_t hash() const;

 private:
  int64_t s_ = 0;
  std::shared_ptr<const mpz_class> big_;
  static Int normalize(mpz_class z);
};

std::ostream& operator<<(std::ostream& os, const Int& v);

}  // namespace iqf
