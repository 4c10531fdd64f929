#pragma once

#include "element.hpp"

#include <functional>
#include <vector>

namespace suq2 {

// order-n tensor with the zeta-twisted leg exchange; keys are leg vectors
template <class C>
struct Braided {
  int order = 1;
  std::map<std::vector<Mono>, C> t;

  static Braided one(int order) {
    Braided b{order, {}};
    b.t.emplace(std::vector<Mono>(order), C::one());
    return b;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const Braided&) const = default;

  void add_term(const std::vector<Mono>& legs, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(legs, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  friend Braided operator+(const Braided& a, const Braided& b) {
    Braided s = a;
    for (const auto& [x, c] : b.t) s.add_term(x, c);
    return s;
  }

  friend Braided operator-(const Braided& a, const Braided& b) {
    Braided s = a;
    for (const auto& [x, c] : b.t) s.add_term(x, -c);
    return s;
  }

  friend Braided operator*(const C& c, const Braided& a) {
    Braided s{a.order, {}};
    for (const auto& [x, ac] : a.t) s.add_term(x, c * ac);
    return s;
  }
};

// pure tensor of two one-leg monimial sums, no twist
template <class C>
Braided<C> btp(const Element<C>& x, const Element<C>& y) {
  Braided<C> s{2, {}};
  for (const auto& [a, ca] : x.t)
    for (const auto& [b, cb] : y.t)
      s.add_term({a, b}, ca * cb);
  return s;
}

// legwise product; moving c_j left past b_i (i > j) costs zeta^{-deg b_i deg c_j}
template <class C>
Braided<C> operator*(const Braided<C>& a, const Braided<C>& b) {
  if (a.order != b.order) throw std::invalid_argument("tensor order mismatch");
  int n = a.order;
  Braided<C> s{n, {}};
  for (const auto& [B, cb] : a.t)
    for (const auto& [Cv, cc] : b.t) {
      long e = 0, pref = 0;
      for (int i = 0; i < n; ++i) {
        e -= (long)deg(B[i]) * pref;
        pref += deg(Cv[i]);
      }
      C coef = cb * cc * C::zeta_pow((int)e);
      std::vector<Element<C>> legs(n);
      for (int i = 0; i < n; ++i) mul_into(legs[i], B[i], Cv[i], C::one());
      std::vector<Mono> key(n);
      std::function<void(int, C)> emit = [&](int i, C acc) {
        if (i == n) {
          s.add_term(key, acc);
          return;
        }
        for (const auto& [mo, mc] : legs[i].t) {
          key[i] = mo;
          emit(i + 1, acc * mc);
        }
      };
      emit(0, coef);
    }
  return s;
}

// legwise star; reversing the legs back into place costs
// zeta^{-sum_{i<j} deg a_i deg a_j}
template <class C>
Braided<C> star(const Braided<C>& a) {
  int n = a.order;
  Braided<C> s{n, {}};
  for (const auto& [A, c] : a.t) {
    long e = 0, suff = 0;
    for (int i = n - 1; i >= 0; --i) {
      e -= (long)deg(A[i]) * suff;
      suff += deg(A[i]);
    }
    C coef = c.conj() * C::zeta_pow((int)e);
    std::vector<Element<C>> legs(n);
    for (int i = 0; i < n; ++i)
      mul_into(legs[i], Mono{0, A[i].k, A[i].m}, Mono{-A[i].n, 0, 0}, C::one());
    std::vector<Mono> key(n);
    std::function<void(int, C)> emit = [&](int i, C acc) {
      if (i == n) {
        s.add_term(key, acc);
        return;
      }
      for (const auto& [mo, mc] : legs[i].t) {
        key[i] = mo;
        emit(i + 1, acc * mc);
      }
    };
    emit(0, coef);
  }
  return s;
}

namespace btp_detail {

template <class C>
Braided<C> delta_pow(const Braided<C>& g, int e, const Braided<C>& acc0) {
  Braided<C> acc = acc0;
  for (int i = 0; i < e; ++i) acc = acc * g;
  return acc;
}

} // namespace btp_detail

// comultiplication into the braided square:
// a -> a (x) a - q (g* (x) g), g -> g (x) a + a* (x) g
template <class C>
Braided<C> delta(const Element<C>& x) {
  using B = Braided<C>;
  auto leg = [](Mono a, Mono b, C c) {
    B t{2, {}};
    t.add_term({a, b}, c);
    return t;
  };
  B da = leg({1, 0, 0}, {1, 0, 0}, C::one()) - leg({0, 0, 1}, {0, 1, 0}, C::q_pow(1));
  B das = leg({-1, 0, 0}, {-1, 0, 0}, C::one()) - leg({0, 1, 0}, {0, 0, 1}, C::q_pow(1));
  B dg = leg({0, 1, 0}, {1, 0, 0}, C::one()) + leg({-1, 0, 0}, {0, 1, 0}, C::one());
  B dgs = leg({0, 0, 1}, {-1, 0, 0}, C::one()) + leg({1, 0, 0}, {0, 0, 1}, C::one());

  B s{2, {}};
  for (const auto& [mo, c] : x.t) {
    B acc = c * B::one(2);
    acc = btp_detail::delta_pow(mo.n >= 0 ? da : das, mo.n >= 0 ? mo.n : -mo.n, acc);
    acc = btp_detail::delta_pow(dg, mo.m, acc);
    acc = btp_detail::delta_pow(dgs, mo.k, acc);
    s = s + acc;
  }
  return s;
}

// braided flip: a (x) b -> zeta^{-deg a deg b} b (x) a on adjacent legs i, i+1
template <class C>
Braided<C> flip(const Braided<C>& a, int i = 0, int dir = -1) {
  Braided<C> s{a.order, {}};
  for (const auto& [A, c] : a.t) {
    std::vector<Mono> key = A;
    std::swap(key[i], key[i + 1]);
    s.add_term(key, c * C::zeta_pow(dir * deg(A[i]) * deg(A[i + 1])));
  }
  return s;
}

template <class C>
Braided<C> flip_inv(const Braided<C>& a, int i = 0) {
  return flip(a, i, +1);
}

// apply a degree-preserving monomial map to leg i; no re-twist is needed
// exactly because the leg degree is unchanged
template <class C, class F>
Braided<C> map_leg(const Braided<C>& a, int i, F f) {
  Braided<C> s{a.order, {}};
  for (const auto& [A, c] : a.t) {
    Element<C> img = f(Element<C>::monomial(A[i], C::one()));
    for (const auto& [mo, mc] : img.t) {
      if (deg(mo) != deg(A[i])) throw std::logic_error("map_leg needs a degree-preserving map");
      std::vector<Mono> key = A;
      key[i] = mo;
      s.add_term(key, c * mc);
    }
  }
  return s;
}

// contract leg i with a functional that vanishes off degree zero (eps, h)
template <class C, class F>
Braided<C> contract_leg(const Braided<C>& a, int i, F f) {
  if (a.order < 2) throw std::invalid_argument("cannot contract the last leg");
  Braided<C> s{a.order - 1, {}};
  for (const auto& [A, c] : a.t) {
    C v = f(Element<C>::monomial(A[i], C::one()));
    if (v.is_zero()) continue;
    std::vector<Mono> key;
    key.reserve(A.size() - 1);
    for (int j = 0; j < (int)A.size(); ++j)
      if (j != i) key.push_back(A[j]);
    s.add_term(key, c * v);
  }
  return s;
}

// comultiply leg i in place: order n -> n + 1, ordering of the legs is kept
template <class C>
Braided<C> delta_leg(const Braided<C>& a, int i) {
  Braided<C> s{a.order + 1, {}};
  for (const auto& [A, c] : a.t) {
    Braided<C> d = delta(Element<C>::monomial(A[i], C::one()));
    for (const auto& [D, dc] : d.t) {
      std::vector<Mono> key;
      key.reserve(A.size() + 1);
      for (int j = 0; j < i; ++j) key.push_back(A[j]);
      key.push_back(D[0]);
      key.push_back(D[1]);
      for (int j = i + 1; j < (int)A.size(); ++j) key.push_back(A[j]);
      s.add_term(key, c * dc);
    }
  }
  return s;
}

// multiply the two legs of an order-2 tensor
template <class C>
Element<C> mu(const Braided<C>& a) {
  if (a.order != 2) throw std::invalid_argument("mu needs order 2");
  Element<C> s;
  for (const auto& [A, c] : a.t) mul_into(s, A[0], A[1], c);
  return s;
}

template <class C>
Element<C> contract_to_element(const Braided<C>& a) {
  if (a.order != 1) throw std::invalid_argument("need order 1");
  Element<C> s;
  for (const auto& [A, c] : a.t) s.add_term(A[0], c);
  return s;
}

} // namespace suq2
