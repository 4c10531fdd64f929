#pragma once

// Text output that the grammar in parse.hpp accepts back unchanged.
// Scalars print through q/qb where the v-degree allows it, so antipode images
// read the way they are usually written; r v = sigma q makes the extracted
// sign land in the rational coefficient.

#include <suq2/parse.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace suq2 {

namespace render_detail {

inline std::string rat_str(const Rat& c) { return c.get_str(); }

inline void append_pow(std::string& out, const char* name, long long e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

struct TermText {
  bool neg = false;
  std::string body; // never starts with '-'
};

inline std::string join_sum(const std::vector<TermText>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].neg) out += '-';
    } else {
      out += terms[i].neg ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

inline std::vector<TermText> lpoly_terms(const LPoly& p) {
  int sg = session().sigma;
  std::vector<TermText> out;
  for (const auto& [key, c] : p.t) {
    int ve = key.first, re = key.second;
    std::string mono;
    Rat coef = c;
    if (ve > 0) {
      int j = std::min(re, ve);
      if (j < 0) j = 0;
      append_pow(mono, "q", j);
      re -= j;
      ve -= j;
      if (sg < 0 && (j & 1)) coef = -coef;
    } else if (ve < 0) {
      int j = std::min(re, -ve);
      if (j < 0) j = 0;
      append_pow(mono, "qb", j);
      re -= j;
      ve += j;
      if (sg < 0 && (j & 1)) coef = -coef;
    }
    append_pow(mono, "r", re);
    append_pow(mono, "v", ve);
    TermText t;
    if (coef < 0) {
      t.neg = true;
      coef = -coef;
    }
    if (mono.empty()) {
      t.body = rat_str(coef);
    } else if (coef == 1) {
      t.body = mono;
    } else {
      t.body = rat_str(coef) + " " + mono;
    }
    out.push_back(std::move(t));
  }
  return out;
}

} // namespace render_detail

inline std::string render(const Scalar& s) {
  using namespace render_detail;
  if (s.is_zero()) return "0";
  auto nt = lpoly_terms(s.num);
  std::string num = join_sum(nt);
  bool den_one = s.den.t.size() == 1 && s.den.t.begin()->first == std::make_pair(0, 0) &&
                 s.den.t.begin()->second == 1;
  if (den_one) return num;
  auto dt = lpoly_terms(s.den);
  std::string den = join_sum(dt);
  if (nt.size() > 1) num = "(" + num + ")";
  return num + "/(" + den + ")";
}

inline std::string render(const NScalar& s) {
  std::ostringstream os;
  os.precision(15);
  os << s.z.real();
  if (s.z.imag() != 0.0) {
    os << (s.z.imag() < 0 ? " - " : " + ");
    double im = std::abs(s.z.imag());
    os << im << "i";
  }
  std::string body = os.str();
  return body.find(' ') == std::string::npos ? body : "(" + body + ")";
}

namespace render_detail {

inline std::string leg_str(const BMono& m) {
  std::string out;
  if (m.n > 0) append_pow(out, "a", m.n);
  if (m.n < 0) append_pow(out, "a*", -m.n);
  append_pow(out, "g", m.m);
  append_pow(out, "g*", m.k);
  append_pow(out, "z", m.l);
  return out;
}

// prefix multiplying a monomial or tensor body; "" and "-" absorb into the sign
inline TermText coeff_prefix(const Scalar& c) {
  TermText t;
  Scalar w = c;
  std::string s = render(w);
  if (!s.empty() && s[0] == '-') {
    t.neg = true;
    w = Scalar::zero() - w;
    s = render(w);
  }
  if (s == "1") return t;
  bool den_one = w.den.t.size() == 1 && w.den.t.begin()->first == std::make_pair(0, 0) &&
                 w.den.t.begin()->second == 1;
  if (den_one && w.num.t.size() > 1) s = "(" + s + ")";
  t.body = s + " ";
  return t;
}

inline TermText coeff_prefix(const NScalar& c) {
  TermText t;
  NScalar w = c;
  if (w.z.imag() == 0.0 && w.z.real() < 0.0) {
    t.neg = true;
    w.z = -w.z;
  }
  if (w.z == std::complex<double>(1.0, 0.0)) return t;
  t.body = render(w) + " ";
  return t;
}

template <class C>
inline TermText body_term(const std::vector<BMono>& legs, const C& c) {
  TermText t = coeff_prefix(c);
  std::string body;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (i) body += " (x) ";
    std::string leg = leg_str(legs[i]);
    body += leg.empty() ? "1" : leg;
  }
  t.body += body;
  return t;
}

} // namespace render_detail

template <class C>
inline std::string render(const Element<C>& x) {
  std::vector<render_detail::TermText> terms;
  for (const auto& [m, c] : x.t)
    terms.push_back(render_detail::body_term({BMono{m.n, m.m, m.k, 0}}, c));
  return render_detail::join_sum(terms);
}

template <class C>
inline std::string render(const BElement<C>& x) {
  std::vector<render_detail::TermText> terms;
  for (const auto& [m, c] : x.t) terms.push_back(render_detail::body_term({m}, c));
  return render_detail::join_sum(terms);
}

template <class C>
inline std::string render(const Braided<C>& x) {
  std::vector<render_detail::TermText> terms;
  for (const auto& [legs, c] : x.t) {
    std::vector<BMono> bl;
    bl.reserve(legs.size());
    for (const auto& m : legs) bl.push_back({m.n, m.m, m.k, 0});
    terms.push_back(render_detail::body_term(bl, c));
  }
  return render_detail::join_sum(terms);
}

template <class C>
inline std::string render(const BTensor<C>& x) {
  std::vector<render_detail::TermText> terms;
  for (const auto& [xy, c] : x.t)
    terms.push_back(render_detail::body_term({xy.first, xy.second}, c));
  return render_detail::join_sum(terms);
}

inline std::string render(const Parsed& p) {
  std::vector<render_detail::TermText> terms;
  for (const auto& [legs, c] : p.terms) terms.push_back(render_detail::body_term(legs, c));
  return render_detail::join_sum(terms);
}

} // namespace suq2
