#include "iqf/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "iqf/primary.hpp"
#include "iqf/special.hpp"

namespace iqf {

namespace {

using i128 = __int128;

bool half_type(int d) { return ((d % 4) + 4) % 4 == 1; }
int64_t norm_c(int d) { return half_type(d) ? (1 - d) / 4 : -d; }

void same_field(const Elem& x, const Elem& y) {
  if (x.d != y.d) throw FieldMismatch();
}

// Round p/q (q > 0) to the nearest integer, exact halves going down.
Int round_half_down(const Int& p, const Int& q) {
  // ceil((2p - q) / (2q)) = -floor((q - 2p) / (2q))
  return -Int::floor_div(q - Int(2) * p, Int(2) * q);
}

int64_t isqrt64(int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && i128(r) * r > n) --r;
  while (i128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return uint64_t((unsigned __int128)a * b % m); }
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Square root of a modulo an odd prime p (Tonelli-Shanks); a must be a square.
uint64_t sqrt_mod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    uint64_t b = c;
    for (uint64_t k = 0; k + i + 1 < m; ++k) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

uint64_t pollard_brent(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t y = 2, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = f(y);
      uint64_t k = 0;
      do {
        ys = y;
        for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t f = pollard_brent(n);
  factor_rec(f, out);
  factor_rec(n / f, out);
}

struct Q2 {
  int64_t x, y;
};

}  // namespace

bool is_valid_field(int d) { return std::find(kFields.begin(), kFields.end(), d) != kFields.end(); }

FieldId::FieldId(int d_) : d(d_) {
  if (!is_valid_field(d_)) throw std::invalid_argument("unsupported field d=" + std::to_string(d_));
}

std::string Elem::str() const {
  std::ostringstream os;
  if (b.is_zero()) {
    os << a;
  } else {
    if (!a.is_zero()) os << a << (b.sign() > 0 ? "+" : "-");
    else if (b.sign() < 0) os << "-";
    Int ab = Int::abs(b);
    if (ab != Int(1)) os << ab;
    os << "w";
  }
  return os.str();
}

bool operator==(const Elem& x, const Elem& y) { return x.d == y.d && x.a == y.a && x.b == y.b; }

Elem operator+(const Elem& x, const Elem& y) {
  same_field(x, y);
  return Elem(x.d, x.a + y.a, x.b + y.b);
}
Elem operator-(const Elem& x, const Elem& y) {
  same_field(x, y);
  return Elem(x.d, x.a - y.a, x.b - y.b);
}
Elem operator-(const Elem& x) { return Elem(x.d, -x.a, -x.b); }

Elem operator*(const Elem& x, const Elem& y) {
  same_field(x, y);
  Int bb = x.b * y.b;
  Int cross = x.a * y.b + x.b * y.a;
  if (half_type(x.d)) return Elem(x.d, x.a * y.a - Int(norm_c(x.d)) * bb, cross + bb);
  return Elem(x.d, x.a * y.a + Int(x.d) * bb, cross);
}

Elem operator*(const Int& k, const Elem& x) { return Elem(x.d, k * x.a, k * x.b); }

Elem pow(const Elem& x, unsigned e) {
  Elem r = Elem::integer(x.d, 1), base = x;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Elem add(const Elem& x, const Elem& y) { return x + y; }
Elem mul(const Elem& x, const Elem& y) { return x * y; }

Int norm(const Elem& x) {
  Int c(norm_c(x.d));
  if (half_type(x.d)) return x.a * x.a + x.a * x.b + c * x.b * x.b;
  return x.a * x.a + c * x.b * x.b;
}

Elem conj(const Elem& x) {
  if (half_type(x.d)) return Elem(x.d, x.a + x.b, -x.b);
  return Elem(x.d, x.a, -x.b);
}

Int trace(const Elem& x) { return half_type(x.d) ? Int(2) * x.a + x.b : Int(2) * x.a; }

cplx to_complex(const Elem& x) {
  double s = std::sqrt(double(-x.d));
  cplx w = half_type(x.d) ? cplx(0.5, 0.5 * s) : cplx(0.0, s);
  return x.a.to_double() + x.b.to_double() * w;
}

bool is_unit(const Elem& x) { return norm(x) == Int(1); }

bool divides(const Elem& y, const Elem& x) {
  same_field(x, y);
  if (y.is_zero()) return x.is_zero();
  Elem p = x * conj(y);
  Int n = norm(y);
  return Int::divides(n, p.a) && Int::divides(n, p.b);
}

Elem exact_div(const Elem& x, const Elem& y) {
  same_field(x, y);
  if (y.is_zero()) throw std::domain_error("division by zero element");
  Elem p = x * conj(y);
  Int n = norm(y);
  if (!Int::divides(n, p.a) || !Int::divides(n, p.b)) throw std::domain_error("inexact element division");
  return Elem(x.d, Int::exact_div(p.a, n), Int::exact_div(p.b, n));
}

std::pair<Elem, Elem> divrem(const Elem& x, const Elem& y) {
  same_field(x, y);
  if (y.is_zero()) throw std::domain_error("division by zero element");
  Elem p = x * conj(y);
  Int n = norm(y);
  Int t0 = Int::floor_div(p.b, n);
  bool half = half_type(x.d);
  Elem best_q;
  Int best_norm;
  bool have = false;
  for (int dt = 0; dt < 2; ++dt) {
    Int t = t0 + Int(dt);
    Int s = half ? round_half_down(Int(2) * p.a + p.b - t * n, Int(2) * n) : round_half_down(p.a, n);
    Elem scaled(x.d, p.a - s * n, p.b - t * n);
    Int nr = norm(scaled);
    if (!have || nr < best_norm) {
      have = true;
      best_norm = nr;
      best_q = Elem(x.d, s, t);
    }
    if (!half) break;
  }
  if (!half) {
    best_q = Elem(x.d, round_half_down(p.a, n), round_half_down(p.b, n));
  }
  return {best_q, x - best_q * y};
}

bool canonical_less(const Elem& x, const Elem& y) {
  Int nx = norm(x), ny = norm(y);
  if (nx != ny) return nx < ny;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

const char* to_string(SplitType t) {
  switch (t) {
    case SplitType::ramified: return "ramified";
    case SplitType::split: return "split";
    case SplitType::inert: return "inert";
  }
  return "?";
}

const FieldData& field_data(FieldId id) {
  static const std::array<FieldData, 9> table = [] {
    std::array<FieldData, 9> t{};
    for (size_t i = 0; i < kFields.size(); ++i) {
      int d = kFields[i];
      FieldData f;
      f.d = d;
      f.omega_half = half_type(d);
      f.D = f.omega_half ? d : 4 * d;
      f.c = norm_c(d);
      Elem one = Elem::integer(d, 1);
      if (d == -1) {
        f.units = {one, Elem(d, 0, 1), -one, Elem(d, 0, -1)};
      } else if (d == -3) {
        Elem w = Elem::omega(d);  // a primitive sixth root of unity
        for (unsigned k = 0; k < 6; ++k) f.units.push_back(pow(w, k));
      } else {
        f.units = {one, -one};
      }
      f.B = (d % 2 == 0) ? Int(2 * f.D) : Int((1 - d) * f.D / 2);
      if (d == -1) f.eta = Elem(d, 0, 1);
      else if (d == -7) f.eta = one;
      else f.eta = -one;
      f.r_K = 2 * std::numbers::pi / (double(f.units.size()) * std::sqrt(double(-f.D)));
      f.euclidean = (d == -1 || d == -2 || d == -3 || d == -7 || d == -11);
      t[i] = f;
    }
    return t;
  }();
  for (size_t i = 0; i < kFields.size(); ++i)
    if (kFields[i] == id.d) return table[i];
  throw std::invalid_argument("unsupported field");
}

int kronecker(int64_t a, int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int res = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) res = -res;
  }
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v > 0) {
    if ((a & 1) == 0) return 0;
    int64_t am8 = ((a % 8) + 8) % 8;
    if ((v & 1) && (am8 == 3 || am8 == 5)) res = -res;
  }
  // Jacobi symbol (a/n) for odd n > 0.
  int64_t aa = ((a % n) + n) % n;
  while (aa != 0) {
    while ((aa & 1) == 0) {
      aa >>= 1;
      int64_t r = n % 8;
      if (r == 3 || r == 5) res = -res;
    }
    std::swap(aa, n);
    if (aa % 4 == 3 && n % 4 == 3) res = -res;
    aa %= n;
  }
  return n == 1 ? res : 0;
}

SplitType split_type(int d, int64_t p) {
  int k = kronecker(field_data(d).D, p);
  return k == 0 ? SplitType::ramified : (k == 1 ? SplitType::split : SplitType::inert);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t dd = n - 1;
  int s = 0;
  while ((dd & 1) == 0) {
    dd >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, dd, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, int>> factor_integer(uint64_t n) {
  if (n == 0) throw std::domain_error("factor_integer(0)");
  std::vector<uint64_t> ps;
  for (uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ps.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, ps);
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p : ps) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.push_back({p, 1});
  }
  return out;
}

std::vector<Elem> primes_above(int d, int64_t p) {
  const FieldData& F = field_data(d);
  SplitType st = split_type(d, p);
  if (st == SplitType::inert) return {Elem::integer(d, p)};
  // Root t of the minimal polynomial of omega mod p; the prime ideal is (p, omega - t).
  int64_t t = -1;
  if (p == 2) {
    for (int64_t c = 0; c < 2; ++c) {
      int64_t v = F.omega_half ? c * c - c + F.c : c * c + F.c;
      if (((v % 2) + 2) % 2 == 0) {
        t = c;
        break;
      }
    }
  } else {
    uint64_t dm = uint64_t(((int64_t(d) % p) + p) % p);
    uint64_t s = sqrt_mod(dm, uint64_t(p));
    if (F.omega_half) {
      uint64_t inv2 = uint64_t((p + 1) / 2);
      t = int64_t(mulmod((1 + s) % uint64_t(p), inv2, uint64_t(p)));
    } else {
      t = int64_t(s);
    }
  }
  if (t < 0) throw std::logic_error("no root of the minimal polynomial");
  auto Q = [&](const Q2& v) -> i128 {
    i128 x = v.x, y = v.y;
    return F.omega_half ? x * x + x * y + i128(F.c) * y * y : x * x + i128(F.c) * y * y;
  };
  auto B2 = [&](const Q2& u, const Q2& v) -> i128 {  // Q(u+v) - Q(u) - Q(v)
    i128 a = i128(u.x) * v.x * 2 + i128(F.c) * u.y * v.y * 2;
    if (F.omega_half) a += i128(u.x) * v.y + i128(u.y) * v.x;
    return a;
  };
  Q2 u{p, 0}, v{-t, 1};
  if (Q(u) > Q(v)) std::swap(u, v);
  for (int guard = 0; guard < 200; ++guard) {
    // mu = round(B(u,v)/Q(u)) with B = B2/2
    i128 num = B2(u, v), den = 2 * Q(u);
    i128 mu = num >= 0 ? (2 * num + den) / (2 * den) : -((-2 * num + den) / (2 * den));
    v = Q2{int64_t(v.x - mu * u.x), int64_t(v.y - mu * u.y)};
    if (Q(v) >= Q(u)) break;
    std::swap(u, v);
  }
  Elem pi(d, u.x, u.y);
  if (norm(pi) != Int(p)) throw std::logic_error("prime generator search failed");
  if (st == SplitType::ramified) return {pi};
  return {pi, conj(pi)};
}

Elem Factorization::product() const {
  Elem r = unit;
  for (const auto& [pe, e] : factors) r = r * pow(pe.elem, unsigned(e));
  return r;
}

Factorization factor(const Elem& x, PrimaryKind kind) {
  if (x.is_zero()) throw std::domain_error("factor(0)");
  Int N = norm(x);
  if (!N.fits_int64()) throw FactorBudgetExceeded("norm " + N.to_string() + " exceeds the factoring budget");
  Elem rem = x;
  std::vector<std::pair<PrimeElem, int>> raw;
  for (auto [p, e] : factor_integer(uint64_t(N.small()))) {
    int64_t pp = int64_t(p);
    SplitType st = split_type(x.d, pp);
    auto ps = primes_above(x.d, pp);
    if (st == SplitType::inert) {
      int k = e / 2;
      for (int i = 0; i < k; ++i) rem = exact_div(rem, ps[0]);
      raw.push_back({PrimeElem{ps[0], pp, st}, k});
    } else if (st == SplitType::ramified) {
      for (int i = 0; i < e; ++i) rem = exact_div(rem, ps[0]);
      raw.push_back({PrimeElem{ps[0], pp, st}, e});
    } else {
      int k1 = 0;
      while (k1 < e && divides(ps[0], rem)) {
        rem = exact_div(rem, ps[0]);
        ++k1;
      }
      for (int i = k1; i < e; ++i) rem = exact_div(rem, ps[1]);
      if (k1 > 0) raw.push_back({PrimeElem{ps[0], pp, st}, k1});
      if (e - k1 > 0) raw.push_back({PrimeElem{ps[1], pp, st}, e - k1});
    }
  }
  if (!is_unit(rem)) throw std::logic_error("factorisation left a non-unit cofactor");
  Factorization f;
  Elem prod = Elem::integer(x.d, 1);
  for (auto& [pe, e] : raw) {
    pe.elem = canonical_primary(pe.elem, kind).second;
    prod = prod * pow(pe.elem, unsigned(e));
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& l, const auto& r) { return canonical_less(l.first.elem, r.first.elem); });
  f.factors = std::move(raw);
  f.unit = exact_div(x, prod);
  return f;
}

Elem gcd(const Elem& x, const Elem& y) {
  same_field(x, y);
  if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd(0,0)");
  if (x.is_zero()) return canonical_primary(y, PrimaryKind::primary).second;
  if (y.is_zero()) return canonical_primary(x, PrimaryKind::primary).second;
  const FieldData& F = field_data(x.d);
  if (F.euclidean) {
    Elem a = x, b = y;
    for (int guard = 0; !b.is_zero(); ++guard) {
      if (guard > 10000) throw std::logic_error("euclidean gcd did not terminate");
      Elem r = divrem(a, b).second;
      a = b;
      b = r;
    }
    return canonical_primary(a, PrimaryKind::primary).second;
  }
  Factorization fx = factor(x), fy = factor(y);
  Elem g = F.one();
  for (const auto& [px, ex] : fx.factors) {
    for (const auto& [py, ey] : fy.factors) {
      if (px.elem == py.elem) g = g * pow(px.elem, unsigned(std::min(ex, ey)));
    }
  }
  return g;
}

std::vector<Elem> enumerate_norm_range(int d, int64_t lo, int64_t hi) {
  std::vector<Elem> out;
  if (hi < 1 || lo > hi) return out;
  const FieldData& F = field_data(d);
  struct Raw {
    int64_t n, a, b;
  };
  std::vector<Raw> raw;
  int64_t ad = -d;
  int64_t bmax = F.omega_half ? isqrt64(4 * hi / ad) + 1 : isqrt64(hi / ad) + 1;
  for (int64_t b = -bmax; b <= bmax; ++b) {
    int64_t amin, amax;
    if (F.omega_half) {
      int64_t R = 4 * hi - ad * b * b;
      if (R < 0) continue;
      int64_t s = isqrt64(R);
      amin = -((s + b) >> 1) - 1;
      amax = ((s - b) >> 1) + 1;
    } else {
      int64_t R = hi - ad * b * b;
      if (R < 0) continue;
      int64_t s = isqrt64(R);
      amin = -s;
      amax = s;
    }
    for (int64_t a = amin; a <= amax; ++a) {
      int64_t n = F.omega_half ? a * a + a * b + F.c * b * b : a * a + F.c * b * b;
      if (n >= std::max<int64_t>(lo, 1) && n <= hi) raw.push_back({n, a, b});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& l, const Raw& r) {
    if (l.n != r.n) return l.n < r.n;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
  out.reserve(raw.size());
  for (const auto& r : raw) out.emplace_back(d, r.a, r.b);
  return out;
}

cplx zeta_K(int d, cplx s) {
  if (std::abs(s - 1.0) < 1e-6) throw std::domain_error("zeta_K evaluated too close to s = 1");
  return riemann_zeta(s) * kronecker_L(field_data(d).D, s);
}

}  // namespace iqf
