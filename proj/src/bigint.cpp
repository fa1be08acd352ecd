#include "iqf/bigint.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace iqf {

namespace {
mpz_class mpz_from_i64(int64_t v) {
  mpz_class z;
  // mpz_set_si takes long, which is 64-bit on the supported targets.
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}
}  // namespace

Int::Int(const mpz_class& z) { *this = normalize(z); }

Int Int::from_string(const std::string& s) { return normalize(mpz_class(s)); }

Int Int::normalize(mpz_class z) {
  Int r;
  if (mpz_fits_slong_p(z.get_mpz_t())) {
    r.s_ = mpz_get_si(z.get_mpz_t());
  } else {
    r.big_ = std::make_shared<const mpz_class>(std::move(z));
  }
  return r;
}

int64_t Int::to_int64() const {
  if (big_) throw std::overflow_error("Int does not fit in int64");
  return s_;
}

mpz_class Int::to_mpz() const { return big_ ? *big_ : mpz_from_i64(s_); }

double Int::to_double() const { return big_ ? big_->get_d() : static_cast<double>(s_); }

std::string Int::to_string() const { return big_ ? big_->get_str() : std::to_string(s_); }

int Int::sign() const {
  if (big_) return sgn(*big_);
  return (s_ > 0) - (s_ < 0);
}

bool Int::is_odd() const {
  if (big_) return mpz_odd_p(big_->get_mpz_t());
  return (s_ & 1) != 0;
}

Int Int::operator-() const {
  if (!big_ && s_ != std::numeric_limits<int64_t>::min()) return Int(-s_);
  return normalize(-to_mpz());
}

Int& Int::operator+=(const Int& o) {
  int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(s_, o.s_, &r)) {
    s_ = r;
    return *this;
  }
  *this = normalize(to_mpz() + o.to_mpz());
  return *this;
}

Int& Int::operator-=(const Int& o) {
  int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(s_, o.s_, &r)) {
    s_ = r;
    return *this;
  }
  *this = normalize(to_mpz() - o.to_mpz());
  return *this;
}

Int& Int::operator*=(const Int& o) {
  int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(s_, o.s_, &r)) {
    s_ = r;
    return *this;
  }
  *this = normalize(to_mpz() * o.to_mpz());
  return *this;
}

bool operator==(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.s_ == b.s_;
  return a.to_mpz() == b.to_mpz();
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) return a.s_ <=> b.s_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Int Int::floor_div(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_ && !(a.s_ == std::numeric_limits<int64_t>::min() && b.s_ == -1)) {
    int64_t q = a.s_ / b.s_, r = a.s_ % b.s_;
    if (r != 0 && ((r < 0) != (b.s_ < 0))) --q;
    return Int(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return normalize(q);
}

Int Int::floor_mod(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    if (b.s_ == -1) return Int(0);
    int64_t r = a.s_ % b.s_;
    if (r != 0 && ((r < 0) != (b.s_ < 0))) r += b.s_;
    return Int(r);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return normalize(r);
}

bool Int::divides(const Int& b, const Int& a) {
  if (b.is_zero()) return a.is_zero();
  return floor_mod(a, b).is_zero();
}

Int Int::exact_div(const Int& a, const Int& b) {
  if (!divides(b, a)) throw std::domain_error("inexact integer division");
  return floor_div(a, b);
}

Int Int::gcd(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_ && a.s_ != std::numeric_limits<int64_t>::min() &&
      b.s_ != std::numeric_limits<int64_t>::min()) {
    int64_t x = a.s_ < 0 ? -a.s_ : a.s_, y = b.s_ < 0 ? -b.s_ : b.s_;
    while (y) {
      int64_t t = x % y;
      x = y;
      y = t;
    }
    return Int(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return normalize(g);
}

size_t Int::hash() const {
  if (!big_) return std::hash<int64_t>()(s_);
  return std::hash<std::string>()(big_->get_str(16));
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

}  // namespace iqf
