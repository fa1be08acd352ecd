#include "iqf/gauss.hpp"

#include <cmath>
#include <numbers>
#include <omp.h>
#include <vector>

#include "iqf/primary.hpp"
#include "iqf/symbols.hpp"

namespace iqf {

namespace {

using i128 = __int128;
constexpr double kTwoPi = 2 * std::numbers::pi;

int64_t mod(i128 a, int64_t m) {
  i128 r = a % m;
  return int64_t(r < 0 ? r + m : r);
}

// e(p / N) as T1[p / B] * T2[p % B]; O(sqrt N) memory, error ~ 2 ulp.
class PhaseTable {
 public:
  explicit PhaseTable(int64_t N) : N_(N) {
    B_ = int64_t(std::ceil(std::sqrt(double(N))));
    if (B_ < 1) B_ = 1;
    hi_.resize(size_t(N / B_ + 1));
    lo_.resize(size_t(B_));
    for (size_t h = 0; h < hi_.size(); ++h) hi_[h] = unit_root(int64_t(h) * B_, N);
    for (size_t l = 0; l < lo_.size(); ++l) lo_[l] = unit_root(int64_t(l), N);
  }
  cplx operator()(int64_t p) const { return hi_[size_t(p / B_)] * lo_[size_t(p % B_)]; }

 private:
  int64_t N_, B_;
  std::vector<cplx> hi_, lo_;
};

// Phase numerators: e~(k x / n) = e((x1*beta1 + x2*beta2) / N(n)) for x = x1 + x2*omega.
struct PhaseSetup {
  int64_t N, beta1, beta2;
  ResidueRing ring;
};

PhaseSetup phase_setup(const Elem& k, const Elem& n) {
  ResidueRing ring(n);
  Elem kk = ring.element(ring.index(k));
  Int Nn = norm(n);
  if (!Nn.fits_int64() || Nn > Int(int64_t(1) << 40)) throw std::domain_error("gauss sum modulus too large");
  int64_t N = Nn.small();
  Elem beta = kk * conj(n);
  Elem beta_w = beta * Elem::omega(n.d);
  int64_t b1 = Int::floor_mod(beta.b, Nn).small(), b2 = Int::floor_mod(beta_w.b, Nn).small();
  return {N, b1, b2, ring};
}

void require_primary_prime(const Elem& pi) {
  auto f = factor(pi);
  if (f.factors.size() != 1 || f.factors[0].second != 1) throw std::invalid_argument("expected a prime: " + pi.str());
  if (!is_primary(pi, default_kind(pi.d, 2))) throw std::invalid_argument("expected a primary prime: " + pi.str());
}

}  // namespace

cplx e_tilde(const Elem& num, const Elem& den) {
  if (den.is_zero()) throw std::domain_error("e_tilde with zero denominator");
  Int N = norm(den);
  Int p = Int::floor_mod((num * conj(den)).b, N);
  // p / N is already reduced to [0, 1)
  if (p.fits_int64() && N.fits_int64()) return unit_root(p.small(), N.small());
  double t = (p.to_double() / N.to_double());
  return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}

cplx gauss_direct_serial(const Elem& k, const ResidueCharacter& chi, const Elem& n) {
  PhaseSetup ps = phase_setup(k, n);
  const int64_t N = ps.N, e = ps.ring.e(), f = ps.ring.f();
  const int64_t L = chi.order();
  cplx sum = 0;
  for (int64_t x2 = 0; x2 < f; ++x2)
    for (int64_t x1 = 0; x1 < e; ++x1) {
      int t = chi.exponent_ab(n.d, x1, x2);
      if (t < 0) continue;
      int64_t p = mod(i128(x1) * ps.beta1 + i128(x2) * ps.beta2, N);
      // single exponential of t/L + p/N over the common denominator L*N
      i128 num = (i128(t) * N + i128(p) * L) % (i128(L) * N);
      double ang = kTwoPi * double(num) / (double(L) * double(N));
      sum += cplx(std::cos(ang), std::sin(ang));
    }
  return sum;
}

cplx gauss_direct(const Elem& k, const ResidueCharacter& chi, const Elem& n) {
  PhaseSetup ps = phase_setup(k, n);
  const int64_t N = ps.N, e = ps.ring.e();
  const int L = chi.order();
  PhaseTable ph(N);
  std::vector<cplx> roots(static_cast<size_t>(L));
  for (int t = 0; t < L; ++t) roots[size_t(t)] = unit_root(t, L);

  constexpr int64_t kBlock = 1 << 14;
  const int64_t nblocks = (N + kBlock - 1) / kBlock;
  std::vector<cplx> block_sum(static_cast<size_t>(nblocks));
#pragma omp parallel for schedule(dynamic, 4) if (nblocks > 4)
  for (int64_t blk = 0; blk < nblocks; ++blk) {
    std::vector<cplx> bucket(static_cast<size_t>(L));
    int64_t lo = blk * kBlock, hi = std::min(N, lo + kBlock);
    int64_t x1 = lo % e, x2 = lo / e;
    int64_t p = mod(i128(x1) * ps.beta1 + i128(x2) * ps.beta2, N);
    const int64_t step_row = mod(ps.beta2 - i128(e) * ps.beta1, N);  // x1: e-1 -> 0, x2 += 1
    for (int64_t idx = lo; idx < hi; ++idx) {
      int t = chi.exponent_ab(n.d, x1, x2);
      if (t >= 0) bucket[size_t(t)] += ph(p);
      if (++x1 == e) {
        x1 = 0;
        ++x2;
        p += step_row + ps.beta1;
      } else {
        p += ps.beta1;
      }
      p %= N;
    }
    cplx s = 0;
    for (int t = 0; t < L; ++t) s += roots[size_t(t)] * bucket[size_t(t)];
    block_sum[size_t(blk)] = s;
  }
  cplx total = 0;
  for (const cplx& s : block_sum) total += s;
  return total;
}

cplx gauss_prime_value(const Elem& pi) {
  require_primary_prime(pi);
  const FieldData& F = field_data(pi.d);
  if (gcd(pi, Elem::integer(pi.d, F.B)) != F.one()) throw std::invalid_argument("gauss_prime_value: prime divides B_K");
  Int N = norm(pi);
  double r = std::sqrt(N.to_double());
  if (Int::floor_mod(N, Int(4)) == Int(1)) return r;
  if (Int::floor_mod(N, Int(4)) != Int(3)) throw std::invalid_argument("gauss_prime_value: even norm");
  return pi.d == -7 ? cplx(0, r) : cplx(0, -r);
}

cplx gauss_quadratic(const Elem& k, const Elem& n) {
  DenominatorSymbol chi(n, 2);
  return gauss_direct(k, chi, n);
}

cplx gauss_G(const Elem& k, const Elem& n) {
  if (!norm(n).is_odd()) throw std::invalid_argument("gauss_G needs n coprime to 2");
  RootOfUnity m1 = symbol(Elem::integer(n.d, -1), n, 2);
  double s = m1.exponent ? -1.0 : 1.0;
  cplx pre = cplx(0.5, -0.5) + s * cplx(0.5, 0.5);
  return pre * gauss_quadratic(k, n);
}

cplx gauss_G_primepower(const Elem& k, const Elem& pi, int l) {
  if (l < 1) throw std::invalid_argument("gauss_G_primepower needs l >= 1");
  require_primary_prime(pi);
  Int N = norm(pi);
  if (!N.is_odd() || (pi.d == -3 && Int::divides(Int(3), N)))
    throw std::invalid_argument("gauss_G_primepower: prime must be coprime to 2 (6 for d=-3)");
  // h = largest power of pi dividing k, infinity for k = 0
  int h = 0;
  Elem kr = k;
  const bool inf = k.is_zero();
  if (!inf)
    while (divides(pi, kr)) {
      kr = exact_div(kr, pi);
      ++h;
    }
  double Nd = N.to_double();
  if (inf || l <= h) {
    if (l % 2) return 0.0;
    return std::pow(Nd, l) - std::pow(Nd, l - 1);
  }
  if (l >= h + 2) return 0.0;
  if (l % 2 == 0) return -std::pow(Nd, l - 1);
  RootOfUnity s = symbol(field_data(pi.d).eta * kr, pi, 2);
  return (s.exponent ? -1.0 : 1.0) * std::pow(Nd, l - 0.5);
}

cplx gauss_G_twist(const Elem& r, const Elem& s, const Elem& n) {
  RootOfUnity t = symbol(s, n, 2);
  if (t.is_zero) throw std::invalid_argument("gauss_G_twist needs (s, n) = 1");
  return std::conj(t.value()) * gauss_G(r, n);
}

Int phi_K(const Elem& n) {
  Int r(1);
  for (const auto& [pe, e] : factor(n).factors) {
    Int N = norm(pe.elem), q(1);
    for (int i = 1; i < e; ++i) q *= N;
    r *= q * (N - Int(1));
  }
  return r;
}

}  // namespace iqf
