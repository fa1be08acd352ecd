#include "iqf/symbols.hpp"

#include <numeric>
#include <sstream>

#include "iqf/primary.hpp"

namespace iqf {

namespace {

int lmod(long long a, long long m) { return int(((a % m) + m) % m); }
int pmod(const Int& a, int m) { return int(Int::floor_mod(a, Int(m)).small()); }

// Exponent t with zeta_j^t = v in the residue field, -1 if v is not a j-th root of unity.
int match_root(const PrimeResidueField& fld, const PrimeResidueField::F& v, int d, int j) {
  auto z = fld.reduce(zeta_elem(d, j));
  PrimeResidueField::F acc{1, 0};
  int found = -1;
  for (int t = 0; t < j; ++t) {
    if (acc == v) {
      if (found >= 0) throw std::logic_error("roots of unity not distinct modulo the prime");
      found = t;
    }
    acc = fld.mul(acc, z);
  }
  return found;
}

void require_coprime_to_order(const Int& N, int j, const char* what) {
  if (pmod(N - Int(1), j) != 0) throw std::invalid_argument(std::string(what) + ": denominator not coprime to the order");
}

}  // namespace

IncompatibleOrder::IncompatibleOrder(int d, int j)
    : std::invalid_argument("residue symbol of order " + std::to_string(j) + " is not defined for d=" +
                            std::to_string(d)) {}

bool order_supported(int d, int j) {
  if (!is_valid_field(d)) return false;
  if (j == 2) return true;
  if (j == 4) return d == -1;
  if (j == 3 || j == 6) return d == -3;
  return false;
}

void check_order(int d, int j) {
  if (!order_supported(d, j)) throw IncompatibleOrder(d, j);
}

std::string compatibility_table() {
  std::ostringstream os;
  os << "d      j=2  j=3  j=4  j=6\n";
  for (int d : kFields) {
    os << d;
    for (int k = std::to_string(d).size(); k < 7; ++k) os << ' ';
    for (int j : {2, 3, 4, 6}) os << (order_supported(d, j) ? "yes  " : " -   ");
    os << '\n';
  }
  return os.str();
}

RootOfUnity RootOfUnity::pow(long long k) const {
  if (is_zero) return *this;
  return {lmod((long long)exponent * (k % order), order), order, false};
}

RootOfUnity RootOfUnity::as_order(int L) const {
  if (L % order != 0) throw std::invalid_argument("as_order: order does not divide target");
  return {exponent * (L / order), L, is_zero};
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
  if (is_zero || o.is_zero) return is_zero == o.is_zero;
  // compare as fractions exponent/order
  return (long long)exponent * o.order == (long long)o.exponent * order;
}

RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
  int L = std::lcm(x.order, y.order);
  if (x.is_zero || y.is_zero) return RootOfUnity::zero(L);
  return {(x.exponent * (L / x.order) + y.exponent * (L / y.order)) % L, L, false};
}

Elem zeta_elem(int d, int j) {
  check_order(d, j);
  switch (j) {
    case 2: return Elem::integer(d, -1);
    case 4: return Elem::omega(d);             // i
    case 3: return Elem(d, -1, 1);             // omega_K - 1 = e(1/3)
    default: return Elem::omega(d);            // omega_K = e(1/6)
  }
}

std::vector<int8_t> power_residue_table(const PrimeResidueField& fld, int j) {
  const int64_t N = fld.size();
  if ((N - 1) % j != 0) throw std::invalid_argument("power residue table: prime not coprime to the order");
  std::vector<int8_t> tab(size_t(N), -1);
  const int d = fld.prime().d;
  auto pf = factor_integer(uint64_t(N - 1));
  PrimeResidueField::F g{};
  for (int64_t i = 1; i < N; ++i) {
    auto cand = fld.from_index(i);
    bool ok = true;
    for (auto [q, e] : pf) {
      (void)e;
      auto t = fld.pow(cand, uint64_t((N - 1) / int64_t(q)));
      if (t == PrimeResidueField::F{1, 0}) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  int base = match_root(fld, fld.pow(g, uint64_t((N - 1) / j)), d, j);
  if (base < 0) throw std::logic_error("power residue table: no root match");
  PrimeResidueField::F x{1, 0};
  for (int64_t k = 0; k < N - 1; ++k) {
    tab[size_t(fld.index(x))] = int8_t((base * (k % j)) % j);
    x = fld.mul(x, g);
  }
  return tab;
}

RootOfUnity symbol_prime(const Elem& a, const Elem& pi, int j) {
  check_order(a.d, j);
  PrimeResidueField fld(pi);
  require_coprime_to_order(Int(fld.size()), j, "symbol");
  auto r = fld.reduce(a);
  if (fld.is_zero(r)) return RootOfUnity::zero(j);
  auto v = fld.pow(r, uint64_t((fld.size() - 1) / j));
  int t = match_root(fld, v, a.d, j);
  if (t < 0) throw std::logic_error("power residue is not a root of unity");
  return {t, j, false};
}

RootOfUnity symbol(const Elem& a, const Elem& n, int j) {
  check_order(a.d, j);
  if (n.is_zero()) throw std::domain_error("symbol with zero denominator");
  if (is_unit(n)) return RootOfUnity::one(j);
  Factorization f = factor(n);
  for (const auto& [pe, e] : f.factors) {
    (void)e;
    require_coprime_to_order(norm(pe.elem), j, "symbol");
  }
  RootOfUnity r = RootOfUnity::one(j);
  for (const auto& [pe, e] : f.factors) {
    RootOfUnity s = symbol_prime(a, pe.elem, j);
    if (s.is_zero) return RootOfUnity::zero(j);
    r = r * s.pow(e);
  }
  return r;
}

RootOfUnity unit_symbol(const Elem& u, const Elem& n, int j) {
  check_order(u.d, j);
  if (!is_unit(u)) throw std::invalid_argument("unit_symbol needs a unit");
  Int N = norm(n);
  require_coprime_to_order(N, j, "unit_symbol");
  // Counterexamples otherwise: n = 3, j = 2 gives omega^4 = rho^2, not +-1 mod 3;
  // n = 4, j = 3 gives omega^5 = -rho, not a cube root of unity mod 4.
  if (u.d == -3 && Int::gcd(N, Int(6)) != Int(1))
    throw std::invalid_argument("unit_symbol: closed form needs (n, 6) = 1 for d=-3");
  const FieldData& F = field_data(u.d);
  if (is_unit(n)) return RootOfUnity::one(j);
  int e = pmod(Int::exact_div(N - Int(1), Int(j)), F.unit_count());
  Elem w = pow(u, unsigned(e));
  // match modulo n; the j-th roots of unity are distinct modulo n since n is coprime to j
  Elem z = zeta_elem(u.d, j), acc = F.one();
  for (int t = 0; t < j; ++t) {
    if (divides(n, w - acc)) return {t, j, false};
    acc = acc * z;
  }
  throw std::logic_error("unit power is not a j-th root of unity modulo n");
}

bool reciprocity_check(const Elem& n, const Elem& m, int j) {
  const int d = n.d;
  check_order(d, j);
  PrimaryKind kind = default_kind(d, j);
  if (!is_primary(n, kind) || !is_primary(m, kind)) throw std::invalid_argument("reciprocity_check needs primary arguments");
  if (gcd(n, m) != field_data(d).one()) throw std::invalid_argument("reciprocity_check needs coprime arguments");
  Int Nn = norm(n), Nm = norm(m);
  int bad = (j == 3) ? 3 : ((d == -3) ? 6 : 2);
  if (Int::gcd(Nn, Int(bad)) != Int(1) || Int::gcd(Nm, Int(bad)) != Int(1))
    throw std::invalid_argument("reciprocity_check needs arguments coprime to the order");
  RootOfUnity nm = symbol(n, m, j), mn = symbol(m, n, j);
  auto half_par = [](const Int& N, int k) { return pmod(Int::exact_div(N - Int(1), Int(k)), 2); };
  // parity of ((Nn-1)/2)((Nm-1)/2); only used where both norms are odd
  auto sign2 = [&] { return RootOfUnity{half_par(Nn, 2) * half_par(Nm, 2), 2, false}; };
  switch (j) {
    case 2:
      if (d == -1) return nm * mn == RootOfUnity::one(2);
      return nm * mn == sign2();
    case 4: {
      RootOfUnity s{half_par(Nn, 4) * half_par(Nm, 4), 2, false};
      return mn == nm * s;
    }
    case 3: return nm == mn;
    default: return nm == mn * sign2();
  }
}

Elem supp_elem(SuppArg v, int d) {
  switch (v) {
    case SuppArg::i: return Elem::omega(d);
    case SuppArg::one_plus_i: return Elem(d, 1, 1);
    case SuppArg::rho: return Elem(d, -1, 1);
    case SuppArg::one_minus_rho: return Elem(d, 2, -1);
    case SuppArg::two: return Elem::integer(d, 2);
  }
  throw std::logic_error("bad SuppArg");
}

RootOfUnity supplementary(SuppArg v, const Elem& n, int j) {
  const int d = n.d;
  check_order(d, j);
  auto need = [](bool c, const char* msg) {
    if (!c) throw std::invalid_argument(std::string("supplementary: ") + msg);
  };
  Int N = norm(n);
  if (v == SuppArg::i || v == SuppArg::one_plus_i) {
    need(d == -1 && (j == 2 || j == 4), "law needs d=-1 and j in {2,4}");
    need(N.is_odd() && is_primary(n), "n must be odd and primary");
    const Int &a = n.a, &b = n.b;
    int e4 = (v == SuppArg::i) ? pmod(Int::exact_div(Int(1) - a, Int(2)), 4)
                               : pmod(Int::exact_div(a - b - Int(1) - b * b, Int(4)), 4);
    // the quadratic laws are the squares: (-1)^{same exponent}
    return j == 4 ? RootOfUnity{e4, 4, false} : RootOfUnity{e4 % 2, 2, false};
  }
  need(d == -3, "law needs d=-3");
  auto [a, b] = rho_coords(n);
  if (j == 3) {
    need(pmod(N, 3) != 0 && is_primary(n, PrimaryKind::primary), "n must be primary and coprime to 3");
    if (v == SuppArg::rho) return {pmod(Int::exact_div(Int(1) - a - b, Int(3)), 3), 3, false};
    if (v == SuppArg::one_minus_rho) return {pmod(Int::exact_div(a - Int(1), Int(3)), 3), 3, false};
    throw std::invalid_argument("supplementary: no cubic law for this argument");
  }
  need(Int::gcd(N, Int(6)) == Int(1) && is_primary(n, PrimaryKind::e_primary), "n must be E-primary and coprime to 6");
  if (j == 2) {
    if (v == SuppArg::one_minus_rho) return {kronecker(pmod(a, 3), 3) == -1 ? 1 : 0, 2, false};
    if (v == SuppArg::two) return {kronecker(2, pmod(N, 8)) == -1 ? 1 : 0, 2, false};
    throw std::invalid_argument("supplementary: no quadratic law for this argument");
  }
  if (j == 6) {
    need(is_primary(n, PrimaryKind::primary), "sextic supplements need n both primary and E-primary");
    if (v == SuppArg::one_minus_rho) {
      int k = pmod(Int::exact_div(a - Int(1), Int(3)), 3);
      int s = kronecker(pmod(a, 3), 3) == -1 ? 3 : 0;
      return {lmod(-2 * k + s, 6), 6, false};
    }
    if (v == SuppArg::two) {
      RootOfUnity c = symbol(n, Elem::integer(d, 2), 3);
      int s = kronecker(2, pmod(N, 8)) == -1 ? 3 : 0;
      return {lmod(-2 * c.exponent + s, 6), 6, false};
    }
    throw std::invalid_argument("supplementary: no sextic law for this argument");
  }
  throw std::invalid_argument("supplementary: unsupported order");
}

DenominatorSymbol::DenominatorSymbol(const Elem& n, int j) : j_(j) {
  check_order(n.d, j);
  if (n.is_zero()) throw std::domain_error("DenominatorSymbol modulo 0");
  if (is_unit(n)) return;
  for (const auto& [pe, e] : factor(n).factors) {
    PrimeResidueField fld(pe.elem);
    parts_.push_back(Part{fld, e, power_residue_table(fld, j)});
  }
}

int DenominatorSymbol::exponent(const Elem& x) const {
  int acc = 0;
  for (const auto& part : parts_) {
    int t = part.table[size_t(part.field.index(part.field.reduce(x)))];
    if (t < 0) return -1;
    acc += t * part.mult;
  }
  return acc % j_;
}

int DenominatorSymbol::exponent_ab(int, int64_t a, int64_t b) const {
  int acc = 0;
  for (const auto& part : parts_) {
    int t = part.table[size_t(part.field.index(a, b))];
    if (t < 0) return -1;
    acc += t * part.mult;
  }
  return acc % j_;
}

}  // namespace iqf
