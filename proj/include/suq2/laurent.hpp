#pragma once

#include "rational.hpp"

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace suq2 {

// Laurent polynomials over Q in two commuting variables: r (real) and v
// (unimodular, conj v = 1/v). Key = (v-exponent, r-exponent) so the map's
// natural order is the lex monomial order and rbegin() is the leading term.
struct LPoly {
  std::map<std::pair<int, int>, Rat> t; // no zero coefficients stored

  bool is_zero() const { return t.empty(); }

  static LPoly zero() { return {}; }

  static LPoly mono(Rat c, int re, int ve) {
    LPoly p;
    if (c != 0) p.t[{ve, re}] = std::move(c);
    return p;
  }

  static LPoly one() { return mono(1, 0, 0); }

  void add_term(int ve, int re, const Rat& c) {
    if (c == 0) return;
    auto it = t.find({ve, re});
    if (it == t.end()) {
      t.emplace(std::make_pair(ve, re), c);
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  friend LPoly operator+(const LPoly& a, const LPoly& b) {
    LPoly s = a;
    for (const auto& [k, c] : b.t) s.add_term(k.first, k.second, c);
    return s;
  }

  friend LPoly operator-(const LPoly& a, const LPoly& b) {
    LPoly s = a;
    for (const auto& [k, c] : b.t) s.add_term(k.first, k.second, -c);
    return s;
  }

  LPoly operator-() const {
    LPoly s = *this;
    for (auto& [k, c] : s.t) c = -c;
    return s;
  }

  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly p;
    for (const auto& [ka, ca] : a.t)
      for (const auto& [kb, cb] : b.t)
        p.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return p;
  }

  void scale(const Rat& c) {
    if (c == 0) { t.clear(); return; }
    for (auto& [k, cc] : t) cc *= c;
  }

  // multiply by r^dre v^dve
  void shift(int dre, int dve) {
    if (dre == 0 && dve == 0) return;
    std::map<std::pair<int, int>, Rat> s;
    for (auto& [k, c] : t) s.emplace(std::make_pair(k.first + dve, k.second + dre), std::move(c));
    t = std::move(s);
  }

  LPoly shifted(int dre, int dve) const {
    LPoly p = *this;
    p.shift(dre, dve);
    return p;
  }

  // (min r-exponent, min v-exponent) over the support; (0,0) for zero
  std::pair<int, int> min_exps() const {
    if (t.empty()) return {0, 0};
    int mre = t.begin()->first.second, mve = t.begin()->first.first;
    for (const auto& [k, c] : t) {
      if (k.second < mre) mre = k.second;
      if (k.first < mve) mve = k.first;
    }
    return {mre, mve};
  }

  const Rat& lead_coeff() const { return t.rbegin()->second; }

  LPoly conj_v() const {
    LPoly p;
    for (const auto& [k, c] : t) p.t[{-k.first, k.second}] = c;
    return p;
  }

  bool operator==(const LPoly& o) const { return t == o.t; }

  std::complex<double> eval(std::complex<double> rv, std::complex<double> vv) const;
};

inline std::complex<double> cipow(std::complex<double> z, int e) {
  if (e < 0) return 1.0 / cipow(z, -e);
  std::complex<double> acc{1.0, 0.0};
  for (; e; --e) acc *= z;
  return acc;
}

inline std::complex<double> LPoly::eval(std::complex<double> rv, std::complex<double> vv) const {
  std::complex<double> s{0.0, 0.0};
  for (const auto& [k, c] : t) s += to_double(c) * cipow(vv, k.first) * cipow(rv, k.second);
  return s;
}

// ---- gcd machinery ---------------------------------------------------------
// Denominators are cleared up front; all gcd work runs over Z[r] and
// (Z[r])[v] with primitive pseudo-remainder sequences, so coefficient sizes
// stay near the subresultant bound instead of exploding.
namespace lp_detail {

using Int = mpz_class;
using ZPoly = std::vector<Int>; // dense in r over Z

inline void ztrim(ZPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

inline bool zzero(const ZPoly& u) { return u.empty(); }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly p(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      p[i + j] += a[i] * b[j];
  ztrim(p);
  return p;
}

inline ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

inline ZPoly zscale(ZPoly a, const Int& c) {
  for (auto& x : a) x *= c;
  return a;
}

inline Int zcont(const ZPoly& a) {
  Int g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g; // >= 0
}

inline ZPoly zsign_norm(ZPoly a) {
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

inline ZPoly zpp(const ZPoly& a) { // primitive part, positive leading coeff
  if (a.empty()) return a;
  Int c = zcont(a);
  if (a.back() < 0) c = -c;
  ZPoly p(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    mpz_divexact(p[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return p;
}

// pseudo-remainder of a by b over Z[r]; b nonzero
inline ZPoly zprem(ZPoly a, const ZPoly& b) {
  const Int& lb = b.back();
  size_t db = b.size() - 1;
  while (a.size() > db) {
    size_t da = a.size() - 1;
    Int la = a.back();
    ZPoly n(da, Int(0)); // top term cancels by construction
    for (size_t j = 0; j < da; ++j) {
      Int x = a[j] * lb;
      if (j + db >= da) x -= la * b[j - (da - db)];
      n[j] = std::move(x);
    }
    a = std::move(n);
    ztrim(a);
    if (a.empty()) break;
  }
  return a;
}

inline ZPoly zgcd(ZPoly a, ZPoly b) { // full gcd in Z[r], positive leading
  ztrim(a);
  ztrim(b);
  if (a.empty()) return zsign_norm(std::move(b));
  if (b.empty()) return zsign_norm(std::move(a));
  Int gc;
  Int ca = zcont(a), cb = zcont(b);
  mpz_gcd(gc.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = zpp(a);
  b = zpp(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) { // primitive PRS
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = zpp(r);
  }
  return zscale(std::move(a), gc);
}

// checked exact division in Z[r]
inline ZPoly zdivexact_poly(ZPoly a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("poly division by zero");
  ZPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
  while (a.size() >= b.size()) {
    Int c, rem;
    mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    if (rem != 0) throw std::logic_error("inexact poly division");
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
    ztrim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact poly division");
  return q;
}

using VZ = std::vector<ZPoly>; // [j] = Z[r] coefficient of v^j

inline void vztrim(VZ& f) {
  while (!f.empty() && zzero(f.back())) f.pop_back();
}

inline ZPoly vzcont(const VZ& f) {
  ZPoly g;
  for (const auto& u : f)
    if (!zzero(u)) g = zzero(g) ? zsign_norm(u) : zgcd(g, u);
  return g;
}

inline VZ vzdivcont(const VZ& f, const ZPoly& c) {
  VZ g(f.size());
  for (size_t j = 0; j < f.size(); ++j)
    if (!zzero(f[j])) g[j] = zdivexact_poly(f[j], c);
  return g;
}

inline VZ vzpp(VZ f) {
  vztrim(f);
  if (f.empty()) return f;
  return vzdivcont(f, vzcont(f));
}

// pseudo-remainder of A by B in (Z[r])[v]; A, B trimmed, B nonzero
inline VZ vzprem(VZ A, const VZ& B) {
  const ZPoly& lcB = B.back();
  size_t dB = B.size() - 1;
  while (A.size() > dB) {
    size_t dA = A.size() - 1;
    ZPoly lcA = A.back();
    VZ N(dA); // degree strictly drops
    for (size_t j = 0; j < dA; ++j) {
      ZPoly x = zzero(A[j]) ? ZPoly{} : zmul(A[j], lcB);
      if (j + dB >= dA) {
        const ZPoly& bj = B[j - (dA - dB)];
        if (!zzero(bj)) x = zsub(std::move(x), zmul(lcA, bj));
      }
      N[j] = std::move(x);
    }
    A = std::move(N);
    vztrim(A);
    if (A.empty()) break;
  }
  return A;
}

// primitive PRS; inputs primitive, output primitive
inline VZ vzgcd_pp(VZ A, VZ B) {
  vztrim(A);
  vztrim(B);
  if (A.empty()) return B;
  if (B.empty()) return A;
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    VZ R = vzprem(A, B);
    A = std::move(B);
    B = vzpp(std::move(R));
  }
  return A;
}

inline VZ to_vz(const LPoly& p) {
  Int L = 1;
  for (const auto& [k, c] : p.t)
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
  VZ f;
  for (const auto& [k, c] : p.t) {
    int ve = k.first, re = k.second;
    if (ve < 0 || re < 0) throw std::logic_error("gcd needs nonnegative exponents");
    Rat s = c * Rat(L);
    if ((int)f.size() <= ve) f.resize(ve + 1);
    auto& u = f[ve];
    if ((int)u.size() <= re) u.resize(re + 1, Int(0));
    u[re] = s.get_num();
  }
  return f;
}

inline LPoly from_vz(const VZ& f) {
  LPoly p;
  for (size_t j = 0; j < f.size(); ++j)
    for (size_t i = 0; i < f[j].size(); ++i)
      if (f[j][i] != 0) p.t[{(int)j, (int)i}] = Rat(f[j][i]);
  return p;
}

} // namespace lp_detail

// gcd of two nonzero based polynomials; result has lex-leading coefficient 1
inline LPoly gcd_based(const LPoly& a, const LPoly& b) {
  using namespace lp_detail;
  VZ A = to_vz(a), B = to_vz(b);
  ZPoly ca = vzcont(A), cb = vzcont(B);
  ZPoly cg = zgcd(ca, cb);
  VZ pg = vzgcd_pp(vzdivcont(A, ca), vzdivcont(B, cb));
  VZ G(pg.size());
  for (size_t j = 0; j < pg.size(); ++j)
    if (!zzero(pg[j])) G[j] = zmul(pg[j], cg);
  LPoly g = from_vz(G);
  Rat lc = g.lead_coeff();
  if (lc != 1) g.scale(1 / lc);
  return g;
}

// exact division of based polynomials; throws if not exact
inline LPoly divexact_based(LPoly n, const LPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero poly");
  LPoly q;
  const auto glt = *g.t.rbegin();
  while (!n.is_zero()) {
    const auto nlt = *n.t.rbegin();
    int ve = nlt.first.first - glt.first.first;
    int re = nlt.first.second - glt.first.second;
    if (ve < 0 || re < 0) throw std::logic_error("inexact poly division");
    Rat c = nlt.second / glt.second;
    q.add_term(ve, re, c);
    n = n - g * LPoly::mono(c, re, ve);
  }
  return q;
}

} // namespace suq2
