#include "iqf/primary.hpp"

#include <array>
#include <stdexcept>

namespace iqf {

namespace {

int mod4(const Int& v) { return int(Int::floor_mod(v, Int(4)).small()); }
int mod3(const Int& v) { return int(Int::floor_mod(v, Int(3)).small()); }

// Odd residues mod 4 (coordinates in basis 1, omega_K) in the columns with t' = t.
// Columns 2 and 4 for d = 4k+1, k odd, both stacked rows taken together.
std::vector<std::array<int, 2>> primary_classes(int d) {
  auto m = [](int v) { return ((v % 4) + 4) % 4; };
  if (d == -2) return {{1, 0}, {3, 2}, {1, 1}, {3, 1}};
  if (d == -7) return {{1, 0}, {1, 2}};
  int k = (d - 1) / 4;
  return {{1, 0}, {m(k), 1}, {m(k + 1), 3}, {1, 2}, {m(-k), 1}, {m(-k + 1), 1}};
}

// Column index 2..5 of the residue table, or 0 if x is not a listed odd class.
int table_column(const Elem& x) {
  int a = mod4(x.a), b = mod4(x.b);
  int col = 0;
  auto cls = primary_classes(x.d);
  // classes 0..(n/2 - 1) are column 2, the rest column 4 (n = 4 or 6 or 2)
  size_t half = cls.size() / 2;
  for (size_t i = 0; i < cls.size(); ++i) {
    const auto& c = cls[i];
    int col_pos = i < half ? 2 : 4;
    if (c[0] == a && c[1] == b) col = col_pos;
    if (((4 - c[0]) % 4) == a && ((4 - c[1]) % 4) == b) col = col_pos + 1;
  }
  return col;
}

bool odd_part_ok(const Elem& y, PrimaryKind kind) {
  int d = y.d;
  if (d == -1) return divides(Elem(d, -2, 2), y - Elem::integer(d, 1));
  if (d == -3) {
    if (kind == PrimaryKind::primary) return Int::divides(Int(3), y.a - Int(1)) && Int::divides(Int(3), y.b);
    auto [a, b] = rho_coords(y);
    if (mod3(b) != 0 || mod3(a) == 0) return false;  // n = +-1 mod 3
    bool ea = !a.is_odd(), eb = !b.is_odd();
    if (eb) return mod4(a + b) == 1;
    if (ea) return mod4(b) == 1;
    return mod4(a) == 3;
  }
  int col = table_column(y);
  return col == 2 || col == 4;
}

// Splits x into (special prime exponents, remaining part).
Elem strip(const Elem& x, const std::vector<Elem>& sp, std::vector<int>& exps) {
  Elem r = x;
  exps.assign(sp.size(), 0);
  for (size_t i = 0; i < sp.size(); ++i) {
    while (divides(sp[i], r)) {
      r = exact_div(r, sp[i]);
      ++exps[i];
    }
  }
  return r;
}

void check_kind(int d, PrimaryKind kind) {
  if (kind == PrimaryKind::e_primary && d != -3)
    throw std::invalid_argument("E-primary generators exist only for d = -3");
}

}  // namespace

PrimaryKind default_kind(int d, int j) {
  return (d == -3 && (j == 2 || j == 6)) ? PrimaryKind::e_primary : PrimaryKind::primary;
}

std::pair<Int, Int> rho_coords(const Elem& x) {
  if (x.d != -3) throw std::invalid_argument("rho coordinates only for d = -3");
  // A + B omega_K = (A + B) + B rho
  return {x.a + x.b, x.b};
}

Elem from_rho_coords(const Int& a, const Int& b) { return Elem(-3, a - b, b); }

std::vector<Elem> special_primes(int d, PrimaryKind kind) {
  check_kind(d, kind);
  switch (d) {
    case -1: return {Elem(d, 1, 1)};
    case -3: {
      std::vector<Elem> v{Elem(d, 2, -1)};  // 1 - rho
      if (kind == PrimaryKind::e_primary) v.push_back(Elem::integer(d, 2));
      return v;
    }
    case -2: return {Elem::omega(d)};
    case -7: return {Elem::omega(d), Elem(d, 1, -1)};  // omega_K and its conjugate
    default: return {Elem::integer(d, 2)};
  }
}

bool is_primary(const Elem& x, PrimaryKind kind) {
  check_kind(x.d, kind);
  if (x.is_zero()) throw std::domain_error("is_primary(0)");
  std::vector<int> e;
  Elem r = strip(x, special_primes(x.d, kind), e);
  return odd_part_ok(r, kind);
}

std::pair<Elem, Elem> canonical_primary(const Elem& x, PrimaryKind kind) {
  check_kind(x.d, kind);
  if (x.is_zero()) throw std::domain_error("canonical_primary(0)");
  auto sp = special_primes(x.d, kind);
  std::vector<int> e;
  Elem r = strip(x, sp, e);
  const FieldData& F = field_data(x.d);
  Elem found;
  Elem unit;
  int hits = 0;
  for (const Elem& u : F.units) {
    Elem y = u * r;
    if (odd_part_ok(y, kind)) {
      ++hits;
      found = y;
      unit = conj(u);
    }
  }
  if (hits != 1) throw std::logic_error("primary associate not unique for " + x.str());
  Elem y = found;
  for (size_t i = 0; i < sp.size(); ++i) y = y * pow(sp[i], unsigned(e[i]));
  return {unit, y};
}

ParityData t_pair(const Elem& x) {
  if (x.d == -1 || x.d == -3) throw std::invalid_argument("t_pair is defined for d != -1, -3");
  if (divides(Elem::integer(x.d, 2), x * conj(x)) ) throw std::domain_error("t_pair needs an odd element");
  // For d = -2 the columns of +-(+-1 + sqrt d) carry t' swapped relative to the defining congruence
  // x = (1 + sqrt d)^t (-1)^t' c^2 (mod 4); the congruence wins (the test suite brute-forces it).
  bool swap = x.d == -2;
  switch (table_column(x)) {
    case 2: return {0, 0};
    case 3: return {0, 1};
    case 4: return {1, swap ? 0 : 1};
    case 5: return {1, swap ? 1 : 0};
  }
  throw std::logic_error("odd residue missing from the mod 4 table: " + x.str());
}

}  // namespace iqf
