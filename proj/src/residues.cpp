#include "iqf/residues.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace iqf {

namespace {

using i128 = __int128;

int64_t mod(i128 a, int64_t m) {
  i128 r = a % m;
  return int64_t(r < 0 ? r + m : r);
}

int64_t inv_mod(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, aa = mod(a, m);
  while (aa) {
    int64_t q = g / aa;
    std::tie(g, aa) = std::make_pair(aa, g - q * aa);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::domain_error("not invertible");
  return mod(x, m);
}

// Extended gcd: returns g = s*a + t*b >= 0.
int64_t ext_gcd(int64_t a, int64_t b, int64_t& s, int64_t& t) {
  int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1) {
    int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return r0;
}

}  // namespace

cplx unit_root(int64_t k, int64_t L) {
  int64_t r = ((k % L) + L) % L;
  double t = 2 * std::numbers::pi * double(r) / double(L);
  return {std::cos(t), std::sin(t)};
}

PrimeResidueField::PrimeResidueField(const Elem& pi) : pi_(pi), d_(pi.d) {
  const FieldData& F = field_data(pi.d);
  half_ = F.omega_half;
  Int N = norm(pi);
  int64_t n = N.to_int64();
  if (is_prime_u64(uint64_t(n))) {
    p_ = n;
    deg1_ = true;
    // pi = a + b omega, omega = -a/b mod p
    int64_t a = Int::floor_mod(pi.a, Int(p_)).small(), b = Int::floor_mod(pi.b, Int(p_)).small();
    r_ = mod(-i128(a) * inv_mod(b, p_), p_);
  } else {
    auto s = int64_t(std::llround(std::sqrt(double(n))));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    if (s * s != n || !is_prime_u64(uint64_t(s))) throw std::invalid_argument("not a prime element: " + pi.str());
    p_ = s;
    deg1_ = false;
    c_ = mod(F.c, p_);
  }
}

PrimeResidueField::F PrimeResidueField::reduce(int64_t a, int64_t b) const {
  if (deg1_) return F{mod(i128(a) + i128(b) * r_, p_), 0};
  return F{mod(a, p_), mod(b, p_)};
}

PrimeResidueField::F PrimeResidueField::reduce(const Elem& x) const {
  Int P(p_);
  int64_t a = Int::floor_mod(x.a, P).small(), b = Int::floor_mod(x.b, P).small();
  return reduce(a, b);
}

PrimeResidueField::F PrimeResidueField::mul(const F& x, const F& y) const {
  if (deg1_) return F{mod(i128(x.u) * y.u, p_), 0};
  i128 vv = i128(x.v) * y.v % p_;
  i128 cross = (i128(x.u) * y.v + i128(x.v) * y.u) % p_;
  if (half_) {
    // omega^2 = omega - c
    return F{mod(i128(x.u) * y.u - vv * c_, p_), mod(cross + vv, p_)};
  }
  // omega^2 = d = -c
  return F{mod(i128(x.u) * y.u - vv * c_, p_), mod(cross, p_)};
}

PrimeResidueField::F PrimeResidueField::pow(F x, uint64_t e) const {
  F r{1 % p_, 0};
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

PrimeResidueField::F PrimeResidueField::inv(const F& x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero in residue field");
  return pow(x, uint64_t(size() - 2));
}

ResidueRing::ResidueRing(const Elem& n) : n_(n) {
  if (n.is_zero()) throw std::domain_error("residue ring modulo 0");
  const FieldData& F = field_data(n.d);
  int64_t a = n.a.to_int64(), b = n.b.to_int64();
  // n and n*omega in coordinates
  int64_t a2, b2;
  if (F.omega_half) {
    a2 = -b * F.c;
    b2 = a + b;
  } else {
    a2 = b * n.d;
    b2 = a;
  }
  int64_t s, t;
  f_ = ext_gcd(b, b2, s, t);
  int64_t N = norm(n).to_int64();
  e_ = N / f_;
  i128 c0 = i128(s) * a + i128(t) * a2;
  c_ = mod(c0, e_);
}

int64_t ResidueRing::index(int64_t a, int64_t b) const {
  int64_t k = (b >= 0) ? b / f_ : -((-b + f_ - 1) / f_);
  int64_t y = b - k * f_;
  int64_t x = mod(i128(a) - i128(k) * c_, e_);
  return y * e_ + x;
}

int64_t ResidueRing::index(const Elem& x) const {
  if (x.a.is_small() && x.b.is_small() && std::abs(x.a.small()) < (int64_t(1) << 62) &&
      std::abs(x.b.small()) < (int64_t(1) << 62))
    return index(x.a.small(), x.b.small());
  Int F(f_);
  Int k = Int::floor_div(x.b, F);
  int64_t y = (x.b - k * F).small();
  int64_t xx = Int::floor_mod(x.a - k * Int(c_), Int(e_)).small();
  return y * e_ + xx;
}

}  // namespace iqf
