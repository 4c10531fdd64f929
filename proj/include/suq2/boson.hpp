#pragma once

#include "braided.hpp"

namespace suq2 {

// monomial a^n g^m g*^k z^l in the crossed product by the degree action
struct BMono {
  int n = 0, m = 0, k = 0, l = 0;
  auto operator<=>(const BMono&) const = default;
};

inline int adeg(const BMono& x) { return x.m - x.k; }
inline int bdeg(const BMono& x) { return x.m - x.k + x.l; }

template <class C>
struct BElement {
  std::map<BMono, C> t;

  static BElement zero() { return {}; }

  static BElement monomial(BMono x, C c) {
    BElement e;
    if (!c.is_zero()) e.t.emplace(x, std::move(c));
    return e;
  }

  static BElement unit() { return monomial({0, 0, 0, 0}, C::one()); }
  static BElement gen_a() { return monomial({1, 0, 0, 0}, C::one()); }
  static BElement gen_as() { return monomial({-1, 0, 0, 0}, C::one()); }
  static BElement gen_g() { return monomial({0, 1, 0, 0}, C::one()); }
  static BElement gen_gs() { return monomial({0, 0, 1, 0}, C::one()); }
  static BElement gen_z(int l = 1) { return monomial({0, 0, 0, l}, C::one()); }

  bool is_zero() const { return t.empty(); }
  bool operator==(const BElement&) const = default;

  void add_term(const BMono& x, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(x, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  friend BElement operator+(const BElement& a, const BElement& b) {
    BElement s = a;
    for (const auto& [x, c] : b.t) s.add_term(x, c);
    return s;
  }

  friend BElement operator-(const BElement& a, const BElement& b) {
    BElement s = a;
    for (const auto& [x, c] : b.t) s.add_term(x, -c);
    return s;
  }

  friend BElement operator*(const C& c, const BElement& a) {
    BElement s;
    for (const auto& [x, ac] : a.t) s.add_term(x, c * ac);
    return s;
  }

  BElement operator-() const {
    BElement s;
    for (const auto& [x, c] : t) s.t.emplace(x, -c);
    return s;
  }
};

// z^l x = zeta^{-l deg x} x z^l
template <class C>
void mul_into_b(BElement<C>& out, const BMono& x, const BMono& y, const C& c) {
  C tw = C::zeta_pow(-x.l * adeg(y));
  Element<C> ap;
  mul_into(ap, Mono{x.n, x.m, x.k}, Mono{y.n, y.m, y.k}, C::one());
  C ctw = c * tw;
  for (const auto& [mo, mc] : ap.t)
    out.add_term({mo.n, mo.m, mo.k, x.l + y.l}, ctw * mc);
}

template <class C>
BElement<C> operator*(const BElement<C>& a, const BElement<C>& b) {
  BElement<C> s;
  for (const auto& [x, cx] : a.t)
    for (const auto& [y, cy] : b.t)
      mul_into_b(s, x, y, cx * cy);
  return s;
}

template <class C>
BElement<C> star(const BElement<C>& a) {
  BElement<C> s;
  for (const auto& [x, c] : a.t) {
    Element<C> ast;
    mul_into(ast, Mono{0, x.k, x.m}, Mono{-x.n, 0, 0}, C::one());
    C coef = c.conj() * C::zeta_pow(-x.l * adeg(x));
    for (const auto& [mo, mc] : ast.t)
      s.add_term({mo.n, mo.m, mo.k, -x.l}, coef * mc);
  }
  return s;
}

template <class C>
BElement<C> kappa(const Element<C>& a) {
  BElement<C> s;
  for (const auto& [x, c] : a.t) s.t.emplace(BMono{x.n, x.m, x.k, 0}, c);
  return s;
}

template <class C>
C counit(const BElement<C>& a) {
  C s = C::zero();
  for (const auto& [x, c] : a.t)
    if (x.m == 0 && x.k == 0) s = s + c;
  return s;
}

// invariant state of the crossed product: kills every z power
template <class C>
C haar_B(const BElement<C>& a) {
  C s = C::zero();
  for (const auto& [x, c] : a.t) {
    if (x.l != 0 || x.n != 0 || x.m != x.k) continue;
    s = s + c * ((C::one() - C::r_pow(2)) / (C::one() - C::r_pow(2 * x.m + 2)));
  }
  return s;
}

// modular group of haar_B at imaginary time; fixes g and z
template <class C>
BElement<C> sigma_hB_is(const BElement<C>& a, int s2) {
  BElement<C> s;
  for (const auto& [x, c] : a.t) s.t.emplace(x, c * C::r_pow(s2 * x.n));
  return s;
}

// ordinary (untwisted) two-leg tensor over the crossed product
template <class C>
struct BTensor {
  std::map<std::pair<BMono, BMono>, C> t;

  static BTensor one() {
    BTensor b;
    b.t.emplace(std::pair<BMono, BMono>{{}, {}}, C::one());
    return b;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const BTensor&) const = default;

  void add_term(const BMono& x, const BMono& y, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(std::pair{x, y}, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  friend BTensor operator+(const BTensor& a, const BTensor& b) {
    BTensor s = a;
    for (const auto& [x, c] : b.t) s.add_term(x.first, x.second, c);
    return s;
  }

  friend BTensor operator-(const BTensor& a, const BTensor& b) {
    BTensor s = a;
    for (const auto& [x, c] : b.t) s.add_term(x.first, x.second, -c);
    return s;
  }

  friend BTensor operator*(const C& c, const BTensor& a) {
    BTensor s;
    for (const auto& [x, ac] : a.t) s.add_term(x.first, x.second, c * ac);
    return s;
  }

  friend BTensor operator*(const BTensor& a, const BTensor& b) {
    BTensor s;
    for (const auto& [X, cx] : a.t)
      for (const auto& [Y, cy] : b.t) {
        BElement<C> l, r;
        mul_into_b(l, X.first, Y.first, C::one());
        mul_into_b(r, X.second, Y.second, C::one());
        C c = cx * cy;
        for (const auto& [lm, lc] : l.t)
          for (const auto& [rm, rc] : r.t)
            s.add_term(lm, rm, c * lc * rc);
      }
    return s;
  }
};

template <class C>
BTensor<C> btp(const BElement<C>& x, const BElement<C>& y) {
  BTensor<C> s;
  for (const auto& [a, ca] : x.t)
    for (const auto& [b, cb] : y.t)
      s.add_term(a, b, ca * cb);
  return s;
}

template <class C>
BTensor<C> star(const BTensor<C>& a) {
  BTensor<C> s;
  for (const auto& [X, c] : a.t) {
    BElement<C> l = star(BElement<C>::monomial(X.first, C::one()));
    BElement<C> r = star(BElement<C>::monomial(X.second, C::one()));
    C cc = c.conj();
    for (const auto& [lm, lc] : l.t)
      for (const auto& [rm, rc] : r.t)
        s.add_term(lm, rm, cc * lc * rc);
  }
  return s;
}

// comultiplication of the crossed product, from the generator images
template <class C>
BTensor<C> delta_B(const BElement<C>& a) {
  using BT = BTensor<C>;
  auto two = [](BMono x, BMono y, C c) {
    BT t;
    t.add_term(x, y, c);
    return t;
  };
  BT da = two({1, 0, 0, 0}, {1, 0, 0, 0}, C::one()) -
          two({0, 0, 1, 1}, {0, 1, 0, 0}, C::q_pow(1));
  BT das = two({-1, 0, 0, 0}, {-1, 0, 0, 0}, C::one()) -
           two({0, 1, 0, -1}, {0, 0, 1, 0}, C::q_pow(1));
  BT dg = two({0, 1, 0, 0}, {1, 0, 0, 0}, C::one()) +
          two({-1, 0, 0, 1}, {0, 1, 0, 0}, C::one());
  BT dgs = two({0, 0, 1, 0}, {-1, 0, 0, 0}, C::one()) +
           two({1, 0, 0, -1}, {0, 0, 1, 0}, C::one());
  BT dz = two({0, 0, 0, 1}, {0, 0, 0, 1}, C::one());
  BT dzi = two({0, 0, 0, -1}, {0, 0, 0, -1}, C::one());

  BT s;
  for (const auto& [x, c] : a.t) {
    BT acc = c * BT::one();
    const BT& af = x.n >= 0 ? da : das;
    for (int i = 0; i < (x.n >= 0 ? x.n : -x.n); ++i) acc = acc * af;
    for (int i = 0; i < x.m; ++i) acc = acc * dg;
    for (int i = 0; i < x.k; ++i) acc = acc * dgs;
    const BT& zf = x.l >= 0 ? dz : dzi;
    for (int i = 0; i < (x.l >= 0 ? x.l : -x.l); ++i) acc = acc * zf;
    s = s + acc;
  }
  return s;
}

// same comultiplication through the braided square: comultiply the A part
// and shift the left leg by the right leg's degree
template <class C>
BTensor<C> delta_B_tilde(const BElement<C>& a) {
  BTensor<C> s;
  for (const auto& [x, c] : a.t) {
    Braided<C> d = delta(Element<C>::monomial({x.n, x.m, x.k}, C::one()));
    for (const auto& [D, dc] : d.t) {
      BMono left{D[0].n, D[0].m, D[0].k, deg(D[1]) + x.l};
      BMono right{D[1].n, D[1].m, D[1].k, x.l};
      s.add_term(left, right, c * dc);
    }
  }
  return s;
}

// braided square into the ordinary square of the crossed product
template <class C>
BTensor<C> psi(const Braided<C>& a) {
  if (a.order != 2) throw std::invalid_argument("psi needs order 2");
  BTensor<C> s;
  for (const auto& [A, c] : a.t)
    s.add_term(BMono{A[0].n, A[0].m, A[0].k, deg(A[1])},
               BMono{A[1].n, A[1].m, A[1].k, 0}, c);
  return s;
}

// character onto the torus: kills g, keeps the z winding
template <class C>
std::map<int, C> pi_char(const BElement<C>& a) {
  std::map<int, C> s;
  for (const auto& [x, c] : a.t) {
    if (x.m != 0 || x.k != 0) continue;
    auto [it, fresh] = s.try_emplace(x.l, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) s.erase(it);
    }
  }
  return s;
}

template <class C>
C t_const(const std::map<int, C>& f) {
  auto it = f.find(0);
  return it == f.end() ? C::zero() : it->second;
}

template <class C, class F>
BElement<C> bt_contract_right(const BTensor<C>& a, F f) {
  BElement<C> s;
  for (const auto& [X, c] : a.t) {
    C v = f(X.second);
    if (!v.is_zero()) s.add_term(X.first, c * v);
  }
  return s;
}

template <class C, class F>
BElement<C> bt_contract_left(const BTensor<C>& a, F f) {
  BElement<C> s;
  for (const auto& [X, c] : a.t) {
    C v = f(X.first);
    if (!v.is_zero()) s.add_term(X.second, c * v);
  }
  return s;
}

} // namespace suq2
