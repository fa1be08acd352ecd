#include "iqf/hecke.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "iqf/gauss.hpp"
#include "iqf/symbols.hpp"

namespace iqf {

namespace {

int pos_mod(long long a, long long m) { return int(((a % m) + m) % m); }

std::string key_of(int d, int j, const Elem& x, const std::string& tag) {
  return tag + "|" + std::to_string(d) + "|" + std::to_string(j) + "|" + x.a.to_string() + "," + x.b.to_string();
}

int sym_exp(const Elem& g, const Elem& x, int j) {
  RootOfUnity r = symbol(g, x, j);
  return r.is_zero ? -1 : r.as_order(j).exponent;
}

std::vector<Elem> prime_divisors(const Elem& x) {
  std::vector<Elem> out;
  if (is_unit(x)) return out;
  for (const auto& [pe, e] : factor(x).factors) out.push_back(pe.elem);
  return out;
}

bool coprime_to(const Elem& z, const std::vector<Elem>& primes) {
  for (const Elem& P : primes)
    if (divides(P, z)) return false;
  return true;
}

Elem lcm_elem(const Elem& x, const Elem& y) {
  Elem g = gcd(x, y);
  return exact_div(x * y, g);
}

// Caches for tables that depend only on (d, j, element). Built outside the lock.
std::mutex g_cache_mu;
std::map<std::string, std::shared_ptr<const std::vector<int8_t>>> g_numer_tables;
struct PartTables {
  std::shared_ptr<const PrimeResidueField> field;
  std::shared_ptr<const std::vector<int8_t>> on_pi;  // x = y mod pi, x = 1 mod M
  std::shared_ptr<const std::vector<int8_t>> on_M;   // x = 1 mod pi, x = z mod M
};
std::map<std::string, PartTables> g_part_tables;
std::map<std::string, cplx> g_part_gauss;

template <class Map, class Build>
auto cached(Map& m, const std::string& key, Build build) {
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = m.find(key);
    if (it != m.end()) return it->second;
  }
  auto v = build();
  std::lock_guard<std::mutex> lk(g_cache_mu);
  return m.emplace(key, std::move(v)).first->second;
}

// z -> (g/z)_j over O/M, -1 off (z, M) = 1.
std::shared_ptr<const std::vector<int8_t>> numer_table(int d, int j, const Elem& M, const Elem& g) {
  std::string key = key_of(d, j, g, "numer" + M.str());
  return cached(g_numer_tables, key, [&] {
    ResidueRing ring(M);
    auto primes = prime_divisors(M);
    auto t = std::make_shared<std::vector<int8_t>>(size_t(ring.size()), int8_t(-1));
    for (int64_t idx = 0; idx < ring.size(); ++idx) {
      Elem z = ring.element(idx);
      if (!coprime_to(z, primes)) continue;
      (*t)[size_t(idx)] = int8_t(sym_exp(g, z, j));
    }
    return std::shared_ptr<const std::vector<int8_t>>(t);
  });
}

PartTables part_tables(int d, int j, const Elem& M, const Elem& pi) {
  std::string key = key_of(d, j, pi, "part" + M.str());
  return cached(g_part_tables, key, [&] {
    PartTables pt;
    auto fld = std::make_shared<PrimeResidueField>(pi);
    pt.field = fld;
    const auto one = fld->reduce(1, 0);
    const auto Minv = fld->inv(fld->reduce(M));
    auto sub = [&](PrimeResidueField::F x, PrimeResidueField::F y) {
      int64_t p = fld->p();
      return PrimeResidueField::F{((x.u - y.u) % p + p) % p, ((x.v - y.v) % p + p) % p};
    };
    auto on_pi = std::make_shared<std::vector<int8_t>>(size_t(fld->size()), int8_t(-1));
    for (int64_t i = 1; i < fld->size(); ++i) {
      auto y = fld->from_index(i);
      if (fld->is_zero(y)) continue;
      Elem t = fld->lift(fld->mul(sub(y, one), Minv));
      Elem x = Elem::integer(d, 1) + M * t;
      (*on_pi)[size_t(fld->index(y))] = int8_t(sym_exp(pi, x, j));
    }
    ResidueRing ringM(M);
    auto primes = prime_divisors(M);
    auto on_M = std::make_shared<std::vector<int8_t>>(size_t(ringM.size()), int8_t(-1));
    for (int64_t idx = 0; idx < ringM.size(); ++idx) {
      Elem z = ringM.element(idx);
      if (!coprime_to(z, primes)) continue;
      Elem t = fld->lift(fld->mul(sub(one, fld->reduce(z)), Minv));
      Elem x = z + M * t;
      (*on_M)[size_t(idx)] = int8_t(sym_exp(pi, x, j));
    }
    pt.on_pi = on_pi;
    pt.on_M = on_M;
    return pt;
  });
}

// Table over O/F with exponents of a fixed order.
struct TableChar final : ResidueCharacter {
  ResidueRing ring;
  const std::vector<int16_t>* tab;
  int L;
  TableChar(const ResidueRing& r, const std::vector<int16_t>* t, int l) : ring(r), tab(t), L(l) {}
  int order() const override { return L; }
  int exponent(const Elem& x) const override { return (*tab)[size_t(ring.index(x))]; }
  int exponent_ab(int, int64_t a, int64_t b) const override { return (*tab)[size_t(ring.index(a, b))]; }
};

struct PartChar final : ResidueCharacter {
  const HeckeChar::Part* part;
  explicit PartChar(const HeckeChar::Part* p) : part(p) {}
  int order() const override { return part->jp; }
  int exponent(const Elem& x) const override {
    int t = (*part->table)[size_t(part->field->index(part->field->reduce(x)))];
    return t < 0 ? -1 : pos_mod((long long)t * part->mult, part->jp);
  }
  int exponent_ab(int, int64_t a, int64_t b) const override {
    int t = (*part->table)[size_t(part->field->index(a, b))];
    return t < 0 ? -1 : pos_mod((long long)t * part->mult, part->jp);
  }
};

}  // namespace

int64_t reciprocity_modulus(int d, int j) {
  check_order(d, j);
  if (d == -3) {
    if (j == 2) return 24;
    if (j == 3) return 9;
    return 72;
  }
  return 16;
}

void HeckeChar::finish() {
  q_ = M_;
  for (const Part& p : parts_) q_ = q_ * p.pi;
}

HeckeChar HeckeChar::principal(int d, const Elem& q) {
  if (q.d != d) throw FieldMismatch();
  HeckeChar h;
  h.d_ = d;
  h.L_ = 1;
  h.M_ = q;
  h.ringM_ = std::make_shared<ResidueRing>(q);
  auto primes = prime_divisors(q);
  auto t = std::make_shared<std::vector<int16_t>>(size_t(h.ringM_->size()), int16_t(-1));
  for (int64_t idx = 0; idx < h.ringM_->size(); ++idx)
    if (coprime_to(h.ringM_->element(idx), primes)) (*t)[size_t(idx)] = 0;
  h.tabM_ = t;
  h.label_ = "principal(" + q.str() + ")";
  h.finish();
  return h;
}

HeckeChar HeckeChar::from_table(const Elem& q, int order, std::vector<int16_t> table, std::string label) {
  HeckeChar h;
  h.d_ = q.d;
  h.L_ = order;
  h.M_ = q;
  h.ringM_ = std::make_shared<ResidueRing>(q);
  if (int64_t(table.size()) != h.ringM_->size()) throw std::invalid_argument("from_table: size mismatch");
  auto primes = prime_divisors(q);
  for (int64_t idx = 0; idx < h.ringM_->size(); ++idx) {
    bool cop = coprime_to(h.ringM_->element(idx), primes);
    int16_t t = table[size_t(idx)];
    if (cop != (t >= 0) || t >= order) throw std::invalid_argument("from_table: values off (x, q) = 1 must vanish");
  }
  for (const Elem& u : field_data(q.d).units)
    if (table[size_t(h.ringM_->index(u))] > 0) throw std::invalid_argument("from_table: not trivial on units");
  h.tabM_ = std::make_shared<std::vector<int16_t>>(std::move(table));
  h.label_ = std::move(label);
  h.finish();
  return h;
}

HeckeChar HeckeChar::symbol_char(const Elem& a, int j) {
  const int d = a.d;
  check_order(d, j);
  if (a.is_zero()) throw std::invalid_argument("symbol character of 0");
  HeckeChar h;
  h.d_ = d;
  h.L_ = j;
  h.M_ = Elem::integer(d, reciprocity_modulus(d, j));
  h.ringM_ = std::make_shared<ResidueRing>(h.M_);
  const int64_t n = h.ringM_->size();
  auto acc = std::make_shared<std::vector<int16_t>>(size_t(n), int16_t(0));
  auto add = [&](const std::vector<int8_t>& t, int mult) {
    for (int64_t i = 0; i < n; ++i) {
      int16_t& s = (*acc)[size_t(i)];
      if (s < 0) continue;
      s = t[size_t(i)] < 0 ? int16_t(-1) : int16_t(pos_mod(s + (long long)mult * t[size_t(i)], j));
    }
  };
  // the coprimality pattern of M comes from the unit table
  Factorization fa = factor(a);
  add(*numer_table(d, j, h.M_, fa.unit), 1);
  for (const auto& [pe, e] : fa.factors) {
    if (divides(pe.elem, h.M_)) {
      add(*numer_table(d, j, h.M_, pe.elem), e);
      continue;
    }
    PartTables pt = part_tables(d, j, h.M_, pe.elem);
    add(*pt.on_M, e);
    h.parts_.push_back(Part{pe.elem, pt.field, pt.on_pi, j, pos_mod(e, j)});
  }
  h.tabM_ = acc;
  h.label_ = "(" + a.str() + "/.)_" + std::to_string(j);
  h.finish();
  return h;
}

HeckeChar HeckeChar::operator*(const HeckeChar& o) const {
  if (d_ != o.d_) throw FieldMismatch();
  HeckeChar h;
  h.d_ = d_;
  h.L_ = std::lcm(L_, o.L_);
  h.M_ = lcm_elem(M_, o.M_);
  h.ringM_ = std::make_shared<ResidueRing>(h.M_);
  const int64_t n = h.ringM_->size();
  auto t = std::make_shared<std::vector<int16_t>>(size_t(n));
  const int s1 = h.L_ / L_, s2 = h.L_ / o.L_;
  for (int64_t idx = 0; idx < n; ++idx) {
    Elem z = h.ringM_->element(idx);
    int a = (*tabM_)[size_t(ringM_->index(z))], b = (*o.tabM_)[size_t(o.ringM_->index(z))];
    (*t)[size_t(idx)] = (a < 0 || b < 0) ? int16_t(-1) : int16_t(pos_mod(a * s1 + b * s2, h.L_));
  }
  // parts whose prime divides the new M are folded into the table
  auto take = [&](const Part& p, int scale) {
    if (divides(p.pi, h.M_)) {
      PartChar pc(&p);
      for (int64_t idx = 0; idx < n; ++idx) {
        int16_t& s = (*t)[size_t(idx)];
        if (s < 0) continue;
        int u = pc.exponent(h.ringM_->element(idx));
        s = u < 0 ? int16_t(-1) : int16_t(pos_mod(s + (long long)u * (h.L_ / p.jp), h.L_));
      }
      return;
    }
    (void)scale;
    for (Part& q : h.parts_)
      if (q.pi == p.pi) {
        if (q.table != p.table || q.jp != p.jp) throw std::logic_error("product of characters with unrelated prime tables");
        q.mult = pos_mod(q.mult + p.mult, q.jp);
        return;
      }
    h.parts_.push_back(p);
  };
  for (const Part& p : parts_) take(p, s1);
  for (const Part& p : o.parts_) take(p, s2);
  h.tabM_ = t;
  h.label_ = label_ + "*" + o.label_;
  h.finish();
  return h;
}

HeckeChar HeckeChar::pow(long long k) const {
  HeckeChar h = *this;
  auto t = std::make_shared<std::vector<int16_t>>(*tabM_);
  for (int16_t& s : *t)
    if (s >= 0) s = int16_t(pos_mod((long long)s * k, L_));
  h.tabM_ = t;
  for (Part& p : h.parts_) p.mult = pos_mod((long long)p.mult * k, p.jp);
  h.label_ = "(" + label_ + ")^" + std::to_string(k);
  return h;
}

int HeckeChar::exponent_ab(int, int64_t a, int64_t b) const {
  int t = (*tabM_)[size_t(ringM_->index(a, b))];
  if (t < 0) return -1;
  long long acc = t;
  for (const Part& p : parts_) {
    int u = (*p.table)[size_t(p.field->index(a, b))];
    if (u < 0) return -1;
    acc += (long long)(p.mult * u % p.jp) * (L_ / p.jp);
  }
  return int(acc % L_);
}

int HeckeChar::exponent(const Elem& x) const {
  if (x.d != d_) throw FieldMismatch();
  int t = (*tabM_)[size_t(ringM_->index(x))];
  if (t < 0) return -1;
  long long acc = t;
  for (const Part& p : parts_) {
    int u = (*p.table)[size_t(p.field->index(p.field->reduce(x)))];
    if (u < 0) return -1;
    acc += (long long)(p.mult * u % p.jp) * (L_ / p.jp);
  }
  return int(acc % L_);
}

cplx HeckeChar::value(const Elem& x) const {
  int t = exponent(x);
  return t < 0 ? cplx(0) : unit_root(t, L_);
}

bool HeckeChar::is_principal() const {
  for (int16_t s : *tabM_)
    if (s > 0) return false;
  for (const Part& p : parts_)
    if (p.mult) return false;
  return true;
}

std::string HeckeChar::signature() const {
  std::string s = std::to_string(d_) + "|" + std::to_string(L_) + "|" + M_.str() + "|";
  s.append(reinterpret_cast<const char*>(tabM_->data()), tabM_->size() * sizeof(int16_t));
  for (const Part& p : parts_)
    s += "|" + p.pi.str() + ":" + std::to_string(p.jp) + ":" + std::to_string(p.mult) + ":" +
         std::to_string(reinterpret_cast<uintptr_t>(p.table.get()));
  return s;
}

HeckeChar char_from_symbol(const Elem& n, int j, const HeckeChar* twist) {
  HeckeChar s = HeckeChar::symbol_char(n, j);
  return twist ? (*twist) * s : s;
}

PrimitiveData conductor(const HeckeChar& psi) {
  const int d = psi.d_, L = psi.L_;
  const Elem one = Elem::integer(d, 1);
  struct Local {
    Elem P, F;
    int k = 0;
    std::shared_ptr<ResidueRing> ring;
    std::vector<int16_t> tab;
  };
  std::vector<Local> locals;
  std::vector<Elem> zero_primes;
  if (!is_unit(psi.M_)) {
    for (const auto& [pe, e] : factor(psi.M_).factors) {
      const Elem& P = pe.elem;
      zero_primes.push_back(P);
      Elem Q = pow(P, unsigned(e));
      Elem C = exact_div(psi.M_, Q);
      ResidueRing rq(Q);
      // idempotent: 1 mod Q, 0 mod C
      Elem eps;
      const int64_t one_idx = rq.index(one);
      for (int64_t i = 0; i < rq.size(); ++i)
        if (rq.index(C * rq.element(i)) == one_idx) {
          eps = C * rq.element(i);
          break;
        }
      if (eps.is_zero()) throw std::logic_error("conductor: no CRT idempotent");
      std::vector<int16_t> local(size_t(rq.size()), -1);
      for (int64_t i = 0; i < rq.size(); ++i) {
        Elem y = rq.element(i);
        if (divides(P, y)) continue;
        Elem z = one + (y - one) * eps;
        int v = (*psi.tabM_)[size_t(psi.ringM_->index(z))];
        if (v < 0) throw std::logic_error("conductor: table vanishes on a unit residue");
        local[size_t(i)] = int16_t(v);
      }
      int k = e;
      Elem Pk = one;
      for (int kk = 0; kk <= e; ++kk) {
        bool ok = true;
        for (int64_t i = 0; i < rq.size() && ok; ++i) {
          if (local[size_t(i)] <= 0) continue;
          if (divides(Pk, rq.element(i) - one)) ok = false;
        }
        if (ok) {
          k = kk;
          break;
        }
        Pk = Pk * P;
      }
      if (k == 0) continue;
      Local lc;
      lc.P = P;
      lc.k = k;
      lc.F = pow(P, unsigned(k));
      lc.ring = std::make_shared<ResidueRing>(lc.F);
      lc.tab.assign(size_t(lc.ring->size()), -1);
      for (int64_t i = 0; i < lc.ring->size(); ++i) {
        Elem y = lc.ring->element(i);
        if (!divides(P, y)) lc.tab[size_t(i)] = local[size_t(rq.index(y))];
      }
      locals.push_back(std::move(lc));
    }
  }

  PrimitiveData pd;
  HeckeChar& h = pd.primitive;
  h.d_ = d;
  h.L_ = L;
  h.M_ = one;
  for (const Local& lc : locals) h.M_ = h.M_ * lc.F;
  h.ringM_ = std::make_shared<ResidueRing>(h.M_);
  auto t = std::make_shared<std::vector<int16_t>>(size_t(h.ringM_->size()));
  for (int64_t idx = 0; idx < h.ringM_->size(); ++idx) {
    Elem z = h.ringM_->element(idx);
    long long acc = 0;
    bool zero = false;
    for (const Local& lc : locals) {
      int v = lc.tab[size_t(lc.ring->index(z))];
      if (v < 0) {
        zero = true;
        break;
      }
      acc += v;
    }
    (*t)[size_t(idx)] = zero ? int16_t(-1) : int16_t(acc % L);
  }
  h.tabM_ = t;
  for (const HeckeChar::Part& p : psi.parts_) {
    if (p.mult)
      h.parts_.push_back(p);
    else
      zero_primes.push_back(p.pi);
  }
  h.label_ = "prim[" + psi.label_ + "]";
  h.finish();
  pd.conductor = h.q_;
  pd.principal = is_unit(pd.conductor);

  // g(1, psi-hat) = prod_i psi_i(f / f_i) g(1, psi_i, f_i)
  cplx g = 1;
  for (const Local& lc : locals) {
    TableChar ch(*lc.ring, &lc.tab, L);
    Elem rest = exact_div(pd.conductor, lc.F);
    int tr = ch.exponent(rest);
    if (tr < 0) throw std::logic_error("conductor: cofactor not coprime");
    g *= unit_root(tr, L) * gauss_direct(one, ch, lc.F);
  }
  for (const HeckeChar::Part& p : h.parts_) {
    PartChar ch(&p);
    Elem rest = exact_div(pd.conductor, p.pi);
    int tr = ch.exponent(rest);
    if (tr < 0) throw std::logic_error("conductor: cofactor not coprime");
    std::string key = key_of(d, p.jp, p.pi, "gauss" + std::to_string(p.mult) + "|" +
                                                  std::to_string(reinterpret_cast<uintptr_t>(p.table.get())));
    cplx gp = cached(g_part_gauss, key, [&] { return gauss_direct(one, ch, p.pi); });
    g *= unit_root(tr, p.jp) * gp;
  }
  pd.gauss1 = g;
  pd.W = g / std::sqrt(norm(pd.conductor).to_double());
  for (const Elem& P : zero_primes) {
    if (divides(P, pd.conductor)) continue;
    pd.euler.emplace_back(P, h.exponent(P));
  }
  return pd;
}

RayClassGroup::RayClassGroup(int d, const Elem& S, int64_t budget) : d_(d), S_(S) {
  if (S.d != d) throw FieldMismatch();
  ring_ = std::make_shared<ResidueRing>(S);
  const ResidueRing& R = *ring_;
  const int64_t n = R.size();
  if (n > budget) throw std::length_error("ray class group: residue ring of size " + std::to_string(n) + " exceeds budget");
  const FieldData& F = field_data(d);
  auto mul = [&](int64_t i, int64_t j) {
    int64_t a1 = i % R.e(), b1 = i / R.e(), a2 = j % R.e(), b2 = j / R.e();
    int64_t a = a1 * a2 - F.c * b1 * b2;
    int64_t b = a1 * b2 + a2 * b1 + (F.omega_half ? b1 * b2 : 0);
    return R.index(a, b);
  };
  auto primes = prime_divisors(S);
  labels_.assign(size_t(n), -1);
  std::vector<char> cop(size_t(n), 0);
  for (int64_t i = 0; i < n; ++i)
    if (coprime_to(R.element(i), primes)) {
      cop[size_t(i)] = 1;
      ++phi_;
    }
  std::vector<int64_t> members;
  for (const Elem& u : F.units) {
    int64_t i = R.index(u);
    if (labels_[size_t(i)] < 0) {
      labels_[size_t(i)] = 0;
      members.push_back(i);
    }
  }
  unit_image_ = int64_t(members.size());
  const int64_t one_idx = R.index(1, 0);
  auto digits = [&](int64_t lab) {
    std::vector<int> v(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
      v[i] = int(lab % orders_[i]);
      lab /= orders_[i];
    }
    return v;
  };
  while (int64_t(members.size()) < phi_) {
    // element of maximal order in G / H
    int64_t best = -1;
    int best_o = 0;
    for (int64_t i = 0; i < n; ++i) {
      if (!cop[size_t(i)] || labels_[size_t(i)] >= 0) continue;
      int o = 1;
      int64_t x = i;
      while (labels_[size_t(x)] < 0) {
        x = mul(x, i);
        ++o;
      }
      if (o > best_o) {
        best_o = o;
        best = i;
      }
    }
    int64_t x = one_idx;
    for (int k = 0; k < best_o; ++k) x = mul(x, best);
    std::vector<int> v = digits(labels_[size_t(x)]);
    // g' = g * prod gen_i^{u_i} with o*u_i = -v_i mod o_i, so that g'^o lies in the unit image
    int64_t g = best;
    for (size_t i = 0; i < orders_.size(); ++i) {
      int u = -1;
      for (int c = 0; c < orders_[i]; ++c)
        if (pos_mod((long long)best_o * c + v[i], orders_[i]) == 0) {
          u = c;
          break;
        }
      if (u < 0) throw std::logic_error("ray class group: generator adjustment failed");
      int64_t gi = R.index(gens_[i]);
      for (int c = 0; c < u; ++c) g = mul(g, gi);
    }
    int64_t chk = one_idx;
    for (int k = 0; k < best_o; ++k) chk = mul(chk, g);
    if (labels_[size_t(chk)] != 0) throw std::logic_error("ray class group: adjusted generator has wrong order");
    const size_t old = members.size();
    int64_t gk = one_idx;
    for (int k = 1; k < best_o; ++k) {
      gk = mul(gk, g);
      for (size_t m = 0; m < old; ++m) {
        int64_t y = mul(gk, members[m]);
        labels_[size_t(y)] = labels_[size_t(members[m])] + k * size_;
        members.push_back(y);
      }
    }
    gens_.push_back(R.element(g));
    orders_.push_back(best_o);
    size_ *= best_o;
    exponent_ = std::lcm(exponent_, best_o);
  }
}

int64_t RayClassGroup::label(const Elem& x) const { return labels_[size_t(ring_->index(x))]; }

std::vector<int> RayClassGroup::dlog(const Elem& x) const {
  int64_t lab = label(x);
  if (lab < 0) return {};
  std::vector<int> v(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    v[i] = int(lab % orders_[i]);
    lab /= orders_[i];
  }
  return v;
}

HeckeChar RayClassGroup::character(int64_t c) const {
  if (c < 0 || c >= size_) throw std::out_of_range("ray class character index");
  std::vector<int> cd(orders_.size());
  int64_t cc = c;
  for (size_t i = 0; i < orders_.size(); ++i) {
    cd[i] = int(cc % orders_[i]);
    cc /= orders_[i];
  }
  std::vector<int16_t> tab(labels_.size());
  for (size_t idx = 0; idx < labels_.size(); ++idx) {
    int64_t lab = labels_[idx];
    if (lab < 0) {
      tab[idx] = -1;
      continue;
    }
    long long acc = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
      acc += (long long)cd[i] * (lab % orders_[i]) * (exponent_ / orders_[i]);
      lab /= orders_[i];
    }
    tab[idx] = int16_t(acc % exponent_);
  }
  return HeckeChar::from_table(S_, exponent_, std::move(tab), "ray(" + S_.str() + "," + std::to_string(c) + ")");
}

std::vector<HeckeChar> RayClassGroup::characters() const {
  std::vector<HeckeChar> out;
  out.reserve(size_t(size_));
  for (int64_t c = 0; c < size_; ++c) out.push_back(character(c));
  return out;
}

RayClassGroup ray_class_group(int d, int64_t S) {
  if (S < 1) throw std::invalid_argument("ray class modulus must be >= 1");
  return RayClassGroup(d, Elem::integer(d, S));
}

cplx gauss_hecke(const Elem& k, const HeckeChar& psi) { return gauss_direct(k, psi, psi.modulus()); }

Elem family_twist_element(int d, int which) {
  const FieldData& F = field_data(d);
  Elem B2 = Elem::integer(d, F.B * F.B);
  if (which == 0) return B2;
  Elem eps = d == -1 ? Elem(d, 0, 1) : Elem::integer(d, -1);
  return eps * B2;
}

std::vector<HeckeChar> c_k_family(int d) {
  return {HeckeChar::symbol_char(family_twist_element(d, 0), 2), HeckeChar::symbol_char(family_twist_element(d, 1), 2)};
}

}  // namespace iqf
