#include "iqf/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "iqf/field.hpp"

namespace iqf {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2, B_4, ..., B_30
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6,          -1.0 / 30,           1.0 / 42,          -1.0 / 30,
    5.0 / 66,         -691.0 / 2730,       7.0 / 6,           -3617.0 / 510,
    43867.0 / 798,    -174611.0 / 330,     854513.0 / 138,    -236364091.0 / 2730,
    8553103.0 / 6,    -23749461029.0 / 870, 8615841276005.0 / 14322};

bool near_nonpositive_integer(cplx z, double tol, int& n) {
  double r = std::round(z.real());
  if (r > 0.5 || std::abs(z.imag()) > tol || std::abs(z.real() - r) > tol) return false;
  n = int(-r);
  return true;
}

cplx log_gamma_right(cplx z) {
  // Re z >= 1/2
  cplx shift_log = 0.0;
  cplx prod = 1.0;
  int count = 0;
  while (std::abs(z) < 15.0) {
    prod *= z;
    if (++count == 8) {
      shift_log += std::log(prod);
      prod = 1.0;
      count = 0;
    }
    z += 1.0;
  }
  shift_log += std::log(prod);
  cplx inv = 1.0 / z, inv2 = inv * inv, term = inv;
  cplx series = 0.0;
  for (int k = 1; k <= 10; ++k) {
    series += kBernoulli[k - 1] / double(2 * k * (2 * k - 1)) * term;
    term *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * kPi) + series - shift_log;
}

}  // namespace

cplx log_gamma(cplx z) {
  int n;
  if (near_nonpositive_integer(z, 0.0, n)) throw std::domain_error("log_gamma at a pole");
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(kPi / std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

cplx cgamma(cplx z) {
  int n;
  if (near_nonpositive_integer(z, 0.0, n)) throw std::domain_error("gamma at a pole");
  if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
  return kPi / (std::sin(kPi * z) * std::exp(log_gamma_right(1.0 - z)));
}

cplx rgamma(cplx z) {
  int n;
  if (near_nonpositive_integer(z, 0.0, n)) return 0.0;
  if (z.real() >= 0.5) return std::exp(-log_gamma_right(z));
  return std::sin(kPi * z) / kPi * std::exp(log_gamma_right(1.0 - z));
}

double expint_e1(double x) {
  if (x <= 0) throw std::domain_error("E1 needs x > 0");
  if (x <= 1.0) {
    double sum = 0, term = 1;
    for (int k = 1; k < 60; ++k) {
      term *= -x / k;
      sum += term / k;
      if (std::abs(term / k) < 1e-18) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
  }
  // Lentz continued fraction
  double b = x + 1, c = 1e300, d = 1 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    double an = -double(i) * i;
    b += 2;
    d = 1 / (an * d + b);
    c = b + an / c;
    double del = c * d;
    h *= del;
    if (std::abs(del - 1) < 1e-16) break;
  }
  return h * std::exp(-x);
}

cplx upper_gamma(cplx s, double x) {
  if (!(x > 0)) throw std::domain_error("upper_gamma needs x > 0");
  int n;
  if (near_nonpositive_integer(s, 1e-10, n)) {
    // Gamma(-n, x) = (-1)^n/n! [E1(x) - e^{-x} sum_{k<n} (-1)^k k! / x^{k+1}]
    double acc = 0, fact = 1;
    for (int k = 0; k < n; ++k) {
      if (k > 0) fact *= k;
      acc += ((k % 2) ? -1.0 : 1.0) * fact / std::pow(x, k + 1);
    }
    double nf = 1;
    for (int k = 2; k <= n; ++k) nf *= k;
    return ((n % 2) ? -1.0 : 1.0) / nf * (expint_e1(x) - std::exp(-x) * acc);
  }
  cplx logpre = s * std::log(x) - x;
  if (x < std::abs(s) + 1.0) {
    cplx sum = 1.0 / s, term = 1.0 / s;
    for (int k = 1; k < 100000; ++k) {
      term *= x / (s + double(k));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return cgamma(s) - std::exp(logpre) * sum;
  }
  // Modified Lentz on the continued fraction of Gamma(s, x)
  const double tiny = 1e-300;
  cplx b = x + 1.0 - s, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 100000; ++i) {
    cplx an = -double(i) * (double(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    cplx del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(logpre) * h;
}

cplx hurwitz_zeta(cplx s, double a) {
  if (std::abs(s - 1.0) < 1e-14) throw std::domain_error("hurwitz_zeta pole at s = 1");
  int N = 30 + int(std::abs(s.imag())) + 2 * int(std::max(0.0, -s.real()));
  cplx sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::pow(double(k) + a, -s);
  double w = N + a;
  cplx wps = std::pow(w, -s);
  sum += w * wps / (s - 1.0) + 0.5 * wps;
  // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * w^{-s-2k+1}
  cplx poch = s, wpow = wps / w;
  double fact = 2;
  for (int k = 1; k <= 15; ++k) {
    cplx t = kBernoulli[k - 1] / fact * poch * wpow;
    sum += t;
    if (std::abs(t) < 1e-18 * std::abs(sum)) break;
    poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
    wpow /= w * w;
    fact *= double(2 * k + 1) * double(2 * k + 2);
  }
  return sum;
}

cplx riemann_zeta(cplx s) {
  if (s.real() >= 0) return hurwitz_zeta(s, 1.0);
  // reflection keeps the Euler-Maclaurin head sum free of cancellation
  return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * cgamma(1.0 - s) *
         hurwitz_zeta(1.0 - s, 1.0);
}

cplx kronecker_L(int D, cplx s) {
  int q = std::abs(D);
  cplx sum = 0.0;
  for (int a = 1; a <= q; ++a) {
    int c = kronecker(D, a);
    if (c != 0) sum += double(c) * hurwitz_zeta(s, double(a) / q);
  }
  return std::pow(double(q), -s) * sum;
}

}  // namespace iqf
