#pragma once

// Expression grammar:
//   expr    := ['-'] tterm (('+'|'-') tterm)*
//   tterm   := pterm ('(x)' pterm)*
//   pterm   := pfactor (['*'|'/'] pfactor)*      juxtaposition multiplies
//   pfactor := atom ['^' ['-'] int] | '(' expr ')' ['*'] ['^' ['-'] int]
//            | int ['/' int]
// Atoms: a a* g g* z r v q qb zeta, unicode alpha/gamma as aliases of a/g.
// A '*' glued to a, g or ')' is the adjoint; a free-standing one multiplies.
// Tensor legs without z-degrees are braided; legs carrying z are the plain
// tensor square of the crossed product.

#include <suq2/braided.hpp>
#include <suq2/boson.hpp>

#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace suq2 {

struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& what, std::size_t p)
      : std::runtime_error(what + " (offset " + std::to_string(p) + ")"), pos(p) {}
};

// mode-independent parse value: a sum of tensor legs over the crossed-product
// basis with exact coefficients
struct Parsed {
  int order = 1;
  std::map<std::vector<BMono>, Scalar> terms;

  bool operator==(const Parsed&) const = default;

  bool is_zero() const { return terms.empty(); }

  void add(const std::vector<BMono>& legs, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(legs);
    if (it == terms.end()) {
      terms.emplace(legs, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_pure_scalar() const {
    if (order != 1) return false;
    for (const auto& [legs, c] : terms)
      if (legs[0] != BMono{}) return false;
    return true;
  }

  bool has_z() const {
    for (const auto& [legs, c] : terms)
      for (const auto& m : legs)
        if (m.l != 0) return true;
    return false;
  }

  Scalar scalar_value() const {
    Scalar s = Scalar::zero();
    for (const auto& [legs, c] : terms) s = s + c;
    return s;
  }

  static Parsed from_scalar(const Scalar& c) {
    Parsed p;
    p.add({BMono{}}, c);
    return p;
  }

  static Parsed from_leg(const BMono& m, const Scalar& c = Scalar::one()) {
    Parsed p;
    p.add({m}, c);
    return p;
  }

  static Parsed unit(int order) {
    Parsed p;
    p.order = order;
    p.add(std::vector<BMono>(order), Scalar::one());
    return p;
  }
};

// ---- conversions to the algebra types -----------------------------------

inline BElement<Scalar> as_belement(const Parsed& p) {
  if (p.order != 1) throw std::invalid_argument("expected a tensor-free expression");
  BElement<Scalar> x;
  for (const auto& [legs, c] : p.terms) x.add_term(legs[0], c);
  return x;
}

inline Element<Scalar> as_element(const Parsed& p) {
  if (p.order != 1) throw std::invalid_argument("expected a tensor-free expression");
  Element<Scalar> x;
  for (const auto& [legs, c] : p.terms) {
    if (legs[0].l != 0) throw std::invalid_argument("z is only available in the crossed product");
    x.add_term({legs[0].n, legs[0].m, legs[0].k}, c);
  }
  return x;
}

inline Braided<Scalar> as_braided(const Parsed& p) {
  Braided<Scalar> b;
  b.order = p.order;
  for (const auto& [legs, c] : p.terms) {
    std::vector<Mono> ml;
    ml.reserve(legs.size());
    for (const auto& m : legs) {
      if (m.l != 0) throw std::invalid_argument("braided legs cannot carry z-degrees");
      ml.push_back({m.n, m.m, m.k});
    }
    b.add_term(ml, c);
  }
  return b;
}

inline BTensor<Scalar> as_btensor(const Parsed& p) {
  if (p.order != 2) throw std::invalid_argument("expected a two-leg tensor");
  BTensor<Scalar> b;
  for (const auto& [legs, c] : p.terms) b.add_term(legs[0], legs[1], c);
  return b;
}

inline Parsed from_belement(const BElement<Scalar>& x) {
  Parsed p;
  for (const auto& [m, c] : x.t) p.add({m}, c);
  return p;
}

inline Parsed from_element(const Element<Scalar>& x) {
  Parsed p;
  for (const auto& [m, c] : x.t) p.add({BMono{m.n, m.m, m.k, 0}}, c);
  return p;
}

inline Parsed from_braided(const Braided<Scalar>& b) {
  Parsed p;
  p.order = b.order;
  for (const auto& [legs, c] : b.t) {
    std::vector<BMono> ml;
    ml.reserve(legs.size());
    for (const auto& m : legs) ml.push_back({m.n, m.m, m.k, 0});
    p.add(ml, c);
  }
  return p;
}

inline Parsed from_btensor(const BTensor<Scalar>& b) {
  Parsed p;
  p.order = 2;
  for (const auto& [xy, c] : b.t) p.add({xy.first, xy.second}, c);
  return p;
}

// ---- arithmetic on parse values ------------------------------------------

namespace parse_detail {

inline Parsed scale(const Parsed& p, const Scalar& c) {
  Parsed out;
  out.order = p.order;
  for (const auto& [legs, w] : p.terms) out.add(legs, w * c);
  return out;
}

inline Parsed p_neg(const Parsed& p) { return scale(p, Scalar::zero() - Scalar::one()); }

inline Parsed p_add(const Parsed& a, const Parsed& b, std::size_t pos) {
  if (a.is_pure_scalar() && a.is_zero() && b.order != a.order) return b;
  if (b.is_pure_scalar() && b.is_zero() && a.order != b.order) return a;
  if (a.order != b.order) throw parse_error("tensor order mismatch in a sum", pos);
  Parsed out = a;
  for (const auto& [legs, c] : b.terms) out.add(legs, c);
  return out;
}

inline Parsed p_mul(const Parsed& a, const Parsed& b, std::size_t pos) {
  if (a.is_pure_scalar()) return scale(b, a.scalar_value());
  if (b.is_pure_scalar()) return scale(a, b.scalar_value());
  if (a.order != b.order) throw parse_error("tensor order mismatch in a product", pos);
  if (a.order == 1) return from_belement(as_belement(a) * as_belement(b));
  if (a.has_z() || b.has_z())
    throw parse_error("products of tensors with z-degrees are not defined here", pos);
  return from_braided(as_braided(a) * as_braided(b));
}

inline Parsed p_div(const Parsed& a, const Parsed& b, std::size_t pos) {
  if (!b.is_pure_scalar()) throw parse_error("division needs a scalar divisor", pos);
  Scalar d = b.scalar_value();
  if (d.is_zero()) throw parse_error("division by zero", pos);
  return scale(a, d.inv());
}

inline Parsed p_star(const Parsed& a, std::size_t pos) {
  if (a.order == 1) return from_belement(star(as_belement(a)));
  if (!a.has_z()) return from_braided(star(as_braided(a)));
  if (a.order == 2) return from_btensor(star(as_btensor(a)));
  throw parse_error("adjoint of a z-carrying tensor of this order is not defined here", pos);
}

inline Parsed p_pow(const Parsed& a, long long e, std::size_t pos) {
  if (e == 0) return Parsed::unit(a.order);
  if (e < 0) {
    if (!a.is_pure_scalar()) throw parse_error("negative power of a non-scalar", pos);
    Scalar s = a.scalar_value();
    if (s.is_zero()) throw parse_error("negative power of zero", pos);
    Scalar w = s.inv(), acc = Scalar::one();
    for (long long i = 0; i < -e; ++i) acc = acc * w;
    return Parsed::from_scalar(acc);
  }
  Parsed acc = a;
  for (long long i = 1; i < e; ++i) acc = p_mul(acc, a, pos);
  return acc;
}

inline Parsed p_tensor(const Parsed& a, const Parsed& b) {
  Parsed out;
  out.order = a.order + b.order;
  for (const auto& [la, ca] : a.terms)
    for (const auto& [lb, cb] : b.terms) {
      std::vector<BMono> legs = la;
      legs.insert(legs.end(), lb.begin(), lb.end());
      out.add(legs, ca * cb);
    }
  return out;
}

// ---- lexer ----------------------------------------------------------------

enum class Tok { atom, number, plus, minus, star, caret, slash, lpar, rpar, tensor, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t pos = 0;
  std::size_t end = 0;
};

inline bool starts_alpha(const std::string& s, std::size_t i) {
  return i + 1 < s.size() && (unsigned char)s[i] == 0xce && (unsigned char)s[i + 1] == 0xb1;
}

inline bool starts_gamma(const std::string& s, std::size_t i) {
  return i + 1 < s.size() && (unsigned char)s[i] == 0xce && (unsigned char)s[i + 1] == 0xb3;
}

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t from, std::size_t to, std::string text) {
    out.push_back({k, std::move(text), from, to});
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '(') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isspace((unsigned char)s[j])) ++j;
      if (j < s.size() && s[j] == 'x') {
        std::size_t k = j + 1;
        while (k < s.size() && std::isspace((unsigned char)s[k])) ++k;
        if (k < s.size() && s[k] == ')') {
          push(Tok::tensor, i, k + 1, "(x)");
          i = k + 1;
          continue;
        }
      }
      push(Tok::lpar, i, i + 1, "(");
      ++i;
      continue;
    }
    if (c == ')') {
      push(Tok::rpar, i, i + 1, ")");
      ++i;
      continue;
    }
    if (c == '+') {
      push(Tok::plus, i, i + 1, "+");
      ++i;
      continue;
    }
    if (c == '-') {
      push(Tok::minus, i, i + 1, "-");
      ++i;
      continue;
    }
    if (c == '*') {
      push(Tok::star, i, i + 1, "*");
      ++i;
      continue;
    }
    if (c == '^') {
      push(Tok::caret, i, i + 1, "^");
      ++i;
      continue;
    }
    if (c == '/') {
      push(Tok::slash, i, i + 1, "/");
      ++i;
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      push(Tok::number, i, j, s.substr(i, j - i));
      i = j;
      continue;
    }
    if (starts_alpha(s, i) || starts_gamma(s, i)) {
      std::string word = starts_alpha(s, i) ? "a" : "g";
      std::size_t j = i + 2;
      if (j < s.size() && s[j] == '*') {
        word += '*';
        ++j;
      }
      push(Tok::atom, i, j, word);
      i = j;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i;
      while (j < s.size() && s[j] >= 'a' && s[j] <= 'z') ++j;
      std::string word = s.substr(i, j - i);
      if (word != "a" && word != "g" && word != "z" && word != "r" && word != "v" && word != "q" &&
          word != "qb" && word != "zeta")
        throw parse_error("unknown symbol '" + word + "'", i);
      if ((word == "a" || word == "g") && j < s.size() && s[j] == '*') {
        word += '*';
        ++j;
      }
      push(Tok::atom, i, j, word);
      i = j;
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", i);
  }
  push(Tok::end, i, i, "");
  return out;
}

// ---- recursive descent ------------------------------------------------

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }
  bool accept(Tok k) {
    if (toks[at].kind != k) return false;
    ++at;
    return true;
  }

  long long int_lit() {
    if (peek().kind != Tok::number) throw parse_error("expected an integer", peek().pos);
    Token t = take();
    if (t.text.size() > 18) throw parse_error("integer literal too large", t.pos);
    return std::stoll(t.text);
  }

  long long exponent() {
    bool neg = accept(Tok::minus);
    long long e = int_lit();
    return neg ? -e : e;
  }

  Parsed atom_value(const Token& t) {
    const std::string& w = t.text;
    if (w == "a") return Parsed::from_leg({1, 0, 0, 0});
    if (w == "a*") return Parsed::from_leg({-1, 0, 0, 0});
    if (w == "g") return Parsed::from_leg({0, 1, 0, 0});
    if (w == "g*") return Parsed::from_leg({0, 0, 1, 0});
    if (w == "z") return Parsed::from_leg({0, 0, 0, 1});
    if (w == "r") return Parsed::from_scalar(Scalar::r_pow(1));
    if (w == "v") return Parsed::from_scalar(Scalar::v_pow(1));
    if (w == "q") return Parsed::from_scalar(Scalar::q_pow(1));
    if (w == "qb") return Parsed::from_scalar(Scalar::qbar_pow(1));
    if (w == "zeta") return Parsed::from_scalar(Scalar::zeta_pow(1));
    throw parse_error("unknown symbol '" + w + "'", t.pos);
  }

  Parsed atom_power(const Token& t, long long e) {
    const std::string& w = t.text;
    auto chk = [&](bool ok) {
      if (!ok) throw parse_error("'" + w + "' has no negative powers", t.pos);
    };
    if (e == 0) return Parsed::from_scalar(Scalar::one());
    if (std::llabs(e) > 1000000) throw parse_error("exponent out of range", t.pos);
    int ei = (int)e;
    if (w == "a") return Parsed::from_leg({ei, 0, 0, 0});
    if (w == "a*") return Parsed::from_leg({-ei, 0, 0, 0});
    if (w == "g") {
      chk(e > 0);
      return Parsed::from_leg({0, ei, 0, 0});
    }
    if (w == "g*") {
      chk(e > 0);
      return Parsed::from_leg({0, 0, ei, 0});
    }
    if (w == "z") return Parsed::from_leg({0, 0, 0, ei});
    if (w == "r") return Parsed::from_scalar(Scalar::r_pow(ei));
    if (w == "v") return Parsed::from_scalar(Scalar::v_pow(ei));
    if (w == "q") return Parsed::from_scalar(Scalar::q_pow(ei));
    if (w == "qb") return Parsed::from_scalar(Scalar::qbar_pow(ei));
    if (w == "zeta") return Parsed::from_scalar(Scalar::zeta_pow(ei));
    throw parse_error("unknown symbol '" + w + "'", t.pos);
  }

  Parsed pfactor() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      Token num = take();
      Scalar c = Scalar::from_rat(Rat(mpz_class(num.text)));
      if (peek().kind == Tok::slash && toks[at + 1].kind == Tok::number) {
        take();
        Token den = take();
        mpz_class d(den.text);
        if (d == 0) throw parse_error("division by zero", den.pos);
        c = c * Scalar::from_rat(Rat(1) / Rat(d));
      }
      if (accept(Tok::caret)) {
        long long e = exponent();
        return parse_detail::p_pow(Parsed::from_scalar(c), e, num.pos);
      }
      return Parsed::from_scalar(c);
    }
    if (t.kind == Tok::atom) {
      Token a = take();
      if (accept(Tok::caret)) return atom_power(a, exponent());
      return atom_value(a);
    }
    if (t.kind == Tok::lpar) {
      Token open = take();
      Parsed inner = expr();
      if (peek().kind != Tok::rpar) throw parse_error("expected ')'", peek().pos);
      Token close = take();
      if (peek().kind == Tok::star && peek().pos == close.end) {
        Token st = take();
        inner = parse_detail::p_star(inner, st.pos);
      }
      if (accept(Tok::caret)) inner = parse_detail::p_pow(inner, exponent(), open.pos);
      return inner;
    }
    throw parse_error("expected a factor", t.pos);
  }

  static bool starts_factor(Tok k) {
    return k == Tok::number || k == Tok::atom || k == Tok::lpar;
  }

  Parsed pterm() {
    Parsed acc = pfactor();
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::star) {
        std::size_t p = t.pos;
        take();
        acc = parse_detail::p_mul(acc, pfactor(), p);
      } else if (t.kind == Tok::slash) {
        std::size_t p = t.pos;
        take();
        acc = parse_detail::p_div(acc, pfactor(), p);
      } else if (starts_factor(t.kind)) {
        acc = parse_detail::p_mul(acc, pfactor(), t.pos);
      } else {
        return acc;
      }
    }
  }

  Parsed tterm() {
    Parsed acc = pterm();
    while (peek().kind == Tok::tensor) {
      take();
      acc = parse_detail::p_tensor(acc, pterm());
    }
    return acc;
  }

  Parsed expr() {
    bool neg = accept(Tok::minus);
    Parsed acc = tterm();
    if (neg) acc = parse_detail::p_neg(acc);
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::plus) {
        take();
        acc = parse_detail::p_add(acc, tterm(), t.pos);
      } else if (t.kind == Tok::minus) {
        take();
        acc = parse_detail::p_add(acc, parse_detail::p_neg(tterm()), t.pos);
      } else {
        return acc;
      }
    }
  }
};

} // namespace parse_detail

inline Parsed parse(const std::string& src) {
  parse_detail::Parser p;
  p.toks = parse_detail::lex(src);
  Parsed out = p.expr();
  if (p.peek().kind != parse_detail::Tok::end)
    throw parse_error("trailing input", p.peek().pos);
  return out;
}

} // namespace suq2
