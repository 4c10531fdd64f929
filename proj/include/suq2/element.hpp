#pragma once

#include "scalar.hpp"

#include <map>
#include <optional>

namespace suq2 {

// basis monomial a^n g^m g*^k; n < 0 means (a*)^{-n}
struct Mono {
  int n = 0, m = 0, k = 0;
  auto operator<=>(const Mono&) const = default;
};

inline int deg(const Mono& x) { return x.m - x.k; }

template <class C>
struct Element {
  std::map<Mono, C> t;

  static Element zero() { return {}; }

  static Element monomial(Mono x, C c) {
    Element e;
    if (!c.is_zero()) e.t.emplace(x, std::move(c));
    return e;
  }

  static Element unit() { return monomial({0, 0, 0}, C::one()); }
  static Element gen_a() { return monomial({1, 0, 0}, C::one()); }
  static Element gen_as() { return monomial({-1, 0, 0}, C::one()); }
  static Element gen_g() { return monomial({0, 1, 0}, C::one()); }
  static Element gen_gs() { return monomial({0, 0, 1}, C::one()); }

  bool is_zero() const { return t.empty(); }
  bool operator==(const Element&) const = default;

  void add_term(const Mono& x, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(x, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  friend Element operator+(const Element& a, const Element& b) {
    Element s = a;
    for (const auto& [x, c] : b.t) s.add_term(x, c);
    return s;
  }

  friend Element operator-(const Element& a, const Element& b) {
    Element s = a;
    for (const auto& [x, c] : b.t) s.add_term(x, -c);
    return s;
  }

  Element operator-() const {
    Element s;
    for (const auto& [x, c] : t) s.t.emplace(x, -c);
    return s;
  }

  friend Element operator*(const C& c, const Element& a) {
    Element s;
    for (const auto& [x, ac] : a.t) s.add_term(x, c * ac);
    return s;
  }
};

namespace el_detail {

// append g g* to every basis monomial (multiplies degree-0 central-ish tail)
template <class C>
Element<C> inc_gg(const Element<C>& e) {
  Element<C> s;
  for (const auto& [x, c] : e.t) s.t.emplace(Mono{x.n, x.m + 1, x.k + 1}, c);
  return s;
}

// a^a (a*)^b in normal form; a a* = 1 - r^2 g* g
template <class C>
Element<C> alpha_cancel(int a, int b) {
  if (a == 0 || b == 0) return Element<C>::monomial({a - b, 0, 0}, C::one());
  Element<C> prev = alpha_cancel<C>(a - 1, b - 1);
  return prev - C::r_pow(2 * b) * inc_gg(prev);
}

// (a*)^b a^a in normal form; a* a = 1 - g* g
template <class C>
Element<C> star_cancel(int b, int a) {
  if (a == 0 || b == 0) return Element<C>::monomial({a - b, 0, 0}, C::one());
  Element<C> prev = star_cancel<C>(b - 1, a - 1);
  return prev - C::r_pow(-2 * (a - 1)) * inc_gg(prev);
}

} // namespace el_detail

// commuting a^(n2) left past g^m1 g*^k1 costs qb^{-m1 n2} q^{-k1 n2}
template <class C>
void mul_into(Element<C>& out, const Mono& x, const Mono& y, const C& c) {
  C tw = C::qbar_pow(-x.m * y.n) * C::q_pow(-x.k * y.n);
  int m = x.m + y.m, k = x.k + y.k;
  if (x.n == 0 || y.n == 0 || (x.n > 0) == (y.n > 0)) {
    out.add_term({x.n + y.n, m, k}, c * tw);
    return;
  }
  Element<C> mid = x.n > 0 ? el_detail::alpha_cancel<C>(x.n, -y.n)
                           : el_detail::star_cancel<C>(-x.n, y.n);
  C ctw = c * tw;
  for (const auto& [mo, mc] : mid.t) out.add_term({mo.n, mo.m + m, mo.k + k}, ctw * mc);
}

template <class C>
Element<C> operator*(const Element<C>& a, const Element<C>& b) {
  Element<C> s;
  for (const auto& [x, cx] : a.t)
    for (const auto& [y, cy] : b.t)
      mul_into(s, x, y, cx * cy);
  return s;
}

template <class C>
Element<C> star(const Element<C>& a) {
  Element<C> s;
  for (const auto& [x, c] : a.t)
    mul_into(s, Mono{0, x.k, x.m}, Mono{-x.n, 0, 0}, c.conj());
  return s;
}

template <class C>
C counit(const Element<C>& a) {
  C s = C::zero();
  for (const auto& [x, c] : a.t)
    if (x.m == 0 && x.k == 0) s = s + c;
  return s;
}

// invariant state: only a^0 (g g*)^m survives, with weight (1-r^2)/(1-r^{2m+2})
template <class C>
C haar(const Element<C>& a) {
  C s = C::zero();
  for (const auto& [x, c] : a.t) {
    if (x.n != 0 || x.m != x.k) continue;
    C w = (C::one() - C::r_pow(2)) / (C::one() - C::r_pow(2 * x.m + 2));
    s = s + c * w;
  }
  return s;
}

template <class C>
Element<C> antipode(const Element<C>& a) {
  Element<C> s;
  for (const auto& [x, c] : a.t) {
    int n = x.n, m = x.m, k = x.k;
    C f = C::zeta_pow(m * k - k * (k - 1) / 2 - m * (m - 1) / 2) *
          C::qbar_pow(m + n * m) * C::q_pow(-k + n * k);
    if ((m + k) & 1) f = -f;
    s.add_term({-n, m, k}, c * f);
  }
  return s;
}

// grading twist: multiplies each component by v^{deg^2}
template <class C>
Element<C> theta(const Element<C>& a, int dir = +1) {
  Element<C> s;
  for (const auto& [x, c] : a.t) {
    int d = deg(x);
    s.t.emplace(x, c * C::v_pow(dir * d * d));
  }
  return s;
}

template <class C>
Element<C> theta_inv(const Element<C>& a) { return theta(a, -1); }

// scaling group at imaginary time: tau_{is} multiplies by r^{-2 s deg};
// s is passed doubled (s2 = 2s) so half-integers stay exact
template <class C>
Element<C> tau_is(const Element<C>& a, int s2) {
  Element<C> s;
  for (const auto& [x, c] : a.t) s.t.emplace(x, c * C::r_pow(-s2 * deg(x)));
  return s;
}

// modular group at imaginary time: sigma_{is} multiplies by r^{2 s n}
template <class C>
Element<C> sigma_is(const Element<C>& a, int s2) {
  Element<C> s;
  for (const auto& [x, c] : a.t) s.t.emplace(x, c * C::r_pow(s2 * x.n));
  return s;
}

template <class C>
Element<C> unitary_R(const Element<C>& a) {
  return antipode(tau_is(theta(a), 1));
}

template <class C>
std::map<int, Element<C>> degree_split(const Element<C>& a) {
  std::map<int, Element<C>> parts;
  for (const auto& [x, c] : a.t) parts[deg(x)].t.emplace(x, c);
  return parts;
}

template <class C>
std::optional<int> hom_degree(const Element<C>& a) {
  std::optional<int> d;
  for (const auto& [x, c] : a.t) {
    if (!d) d = deg(x);
    else if (*d != deg(x)) return std::nullopt;
  }
  return d;
}

} // namespace suq2
