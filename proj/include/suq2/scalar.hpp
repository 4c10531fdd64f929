#pragma once

#include "laurent.hpp"
#include "session.hpp"

#include <complex>
#include <stdexcept>

namespace suq2 {

// Exact coefficient field Q(r, v): reduced fraction num/den of Laurent
// polynomials. Canonical form: den has min exponents (0,0) per variable and
// lex-leading coefficient 1; the polynomial part of num (unit r^a v^b
// stripped) is coprime to den. Equality is structural.
struct Scalar {
  LPoly num;
  LPoly den = LPoly::one();

  Scalar() = default;
  Scalar(LPoly n, LPoly d) : num(std::move(n)), den(std::move(d)) { canon(); }

  static Scalar zero() { return {}; }

  static Scalar term(Rat c, int re, int ve) {
    Scalar s;
    s.num = LPoly::mono(std::move(c), re, ve);
    return s; // single term over 1 is already canonical
  }

  static Scalar one() { return term(1, 0, 0); }
  static Scalar from_long(long n) { return term(Rat(n), 0, 0); }
  static Scalar from_ratio(long n, long d) { return term(make_rat(n, d), 0, 0); }
  static Scalar from_rat(Rat c) { return term(std::move(c), 0, 0); }

  static Scalar r_pow(int e) { return term(1, e, 0); }
  static Scalar v_pow(int e) { return term(1, 0, e); }
  static Scalar zeta_pow(int e) { return term(1, 0, 2 * e); }

  // q = sigma r v, qb = sigma r v^{-1}
  static Scalar q_pow(int e) {
    Rat c = (session().sigma < 0 && (e & 1)) ? Rat(-1) : Rat(1);
    return term(std::move(c), e, e);
  }
  static Scalar qbar_pow(int e) {
    Rat c = (session().sigma < 0 && (e & 1)) ? Rat(-1) : Rat(1);
    return term(std::move(c), e, -e);
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num == LPoly::one() && den == LPoly::one(); }

  void canon() {
    if (den.is_zero()) throw std::domain_error("scalar division by zero");
    if (num.is_zero()) {
      den = LPoly::one();
      return;
    }
    auto [dre, dve] = den.min_exps();
    den.shift(-dre, -dve);
    num.shift(-dre, -dve);
    auto [nre, nve] = num.min_exps();
    LPoly nb = num.shifted(-nre, -nve);
    if (den.t.size() > 1) { // based single-term den is the constant 1
      LPoly g = gcd_based(nb, den);
      if (!(g == LPoly::one())) {
        nb = divexact_based(nb, g);
        den = divexact_based(den, g);
      }
    }
    const Rat& lc = den.lead_coeff();
    if (lc != 1) {
      Rat s = 1 / lc;
      den.scale(s);
      nb.scale(s);
    }
    num = nb.shifted(nre, nve);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  Scalar operator-() const {
    Scalar s = *this;
    s.num = -s.num;
    return s;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num * b.num, a.den * b.den);
  }
  Scalar inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    return Scalar(den, num);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  Scalar conj() const { return Scalar(num.conj_v(), den.conj_v()); }

  bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }

  std::complex<double> numeric_eval(std::complex<double> q0) const {
    double r = std::abs(q0);
    std::complex<double> v = std::complex<double>(double(sigma_of(q0)), 0.0) * q0 / r;
    std::complex<double> d = den.eval(r, v);
    if (std::abs(d) < 1e-300) throw std::domain_error("pole at substituted point");
    return num.eval(r, v) / d;
  }

  std::complex<double> numeric_eval() const { return numeric_eval(session().q0); }

  // substitute a rational value for r, keeping v formal
  Scalar subst_r(const Rat& rv) const {
    LPoly n2, d2;
    for (const auto& [k, c] : num.t) {
      Rat p = 1;
      int e = k.second;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= rv;
      if (e < 0) p = 1 / p;
      n2.add_term(k.first, 0, c * p);
    }
    for (const auto& [k, c] : den.t) {
      Rat p = 1;
      int e = k.second;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= rv;
      if (e < 0) p = 1 / p;
      d2.add_term(k.first, 0, c * p);
    }
    return Scalar(std::move(n2), std::move(d2));
  }
};

// Numeric twin of Scalar with the same static interface; coefficients are
// complex doubles at the session's q0. Only exact zeros are pruned.
struct NScalar {
  std::complex<double> z{0.0, 0.0};

  NScalar() = default;
  explicit NScalar(std::complex<double> w) : z(w) {}

  static NScalar zero() { return {}; }
  static NScalar one() { return NScalar{{1.0, 0.0}}; }
  static NScalar from_long(long n) { return NScalar{{double(n), 0.0}}; }
  static NScalar from_ratio(long n, long d) { return NScalar{{double(n) / double(d), 0.0}}; }
  static NScalar from_rat(const Rat& c) { return NScalar{{to_double(c), 0.0}}; }

  static NScalar r_pow(int e) { return NScalar{cipow({session().r0(), 0.0}, e)}; }
  static NScalar v_pow(int e) { return NScalar{cipow(session().v0(), e)}; }
  static NScalar zeta_pow(int e) { return NScalar{cipow(session().v0(), 2 * e)}; }
  static NScalar q_pow(int e) { return NScalar{cipow(session().q0, e)}; }
  static NScalar qbar_pow(int e) { return NScalar{cipow(std::conj(session().q0), e)}; }

  bool is_zero() const { return z == std::complex<double>(0.0, 0.0); }

  friend NScalar operator+(NScalar a, NScalar b) { return NScalar{a.z + b.z}; }
  friend NScalar operator-(NScalar a, NScalar b) { return NScalar{a.z - b.z}; }
  NScalar operator-() const { return NScalar{-z}; }
  friend NScalar operator*(NScalar a, NScalar b) { return NScalar{a.z * b.z}; }
  NScalar inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    return NScalar{1.0 / z};
  }
  friend NScalar operator/(NScalar a, NScalar b) { return a * b.inv(); }

  NScalar conj() const { return NScalar{std::conj(z)}; }

  bool operator==(const NScalar& o) const { return z == o.z; }

  std::complex<double> numeric_eval() const { return z; }
};

} // namespace suq2
