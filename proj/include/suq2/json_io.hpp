#pragma once

// JSON forms for the exact types. Rational coefficients serialize as int64
// when they fit, otherwise as "p/q" strings, so round trips stay exact.

#include <suq2/parse.hpp>
#include <suq2/reps.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace suq2 {

using json = nlohmann::json;

namespace json_detail {

inline json rat_json(const Rat& c) {
  if (c.get_den() == 1) {
    const mpz_class& n = c.get_num();
    if (n.fits_slong_p()) return json(n.get_si());
  }
  return json(c.get_str());
}

inline Rat rat_from(const json& j) {
  if (j.is_number_integer()) return Rat((long)j.get<std::int64_t>());
  if (j.is_string()) {
    Rat c;
    if (c.set_str(j.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad rational literal");
    c.canonicalize();
    return c;
  }
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

inline json lpoly_json(const LPoly& p) {
  json a = json::array();
  for (const auto& [key, c] : p.t) a.push_back({rat_json(c), key.second, key.first});
  return a;
}

inline LPoly lpoly_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  LPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("polynomial term must be [coef, rexp, vexp]");
    p.add_term(t[2].get<int>(), t[1].get<int>(), rat_from(t[0]));
  }
  return p;
}

} // namespace json_detail

inline json to_json(const Scalar& s) {
  return {{"num", json_detail::lpoly_json(s.num)}, {"den", json_detail::lpoly_json(s.den)}};
}

inline Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("scalar must be {num, den}");
  return Scalar(json_detail::lpoly_from(j["num"]), json_detail::lpoly_from(j["den"]));
}

inline json to_json(const NScalar& s) { return {{"re", s.z.real()}, {"im", s.z.imag()}}; }

inline NScalar nscalar_from_json(const json& j) {
  return NScalar{{j.at("re").get<double>(), j.at("im").get<double>()}};
}

inline json to_json(const Parsed& p) {
  json terms = json::array();
  for (const auto& [legs, c] : p.terms) {
    json ja = json::array();
    for (const auto& m : legs) ja.push_back({m.n, m.m, m.k, m.l});
    terms.push_back({{"legs", ja}, {"c", to_json(c)}});
  }
  return {{"order", p.order}, {"terms", terms}};
}

inline Parsed parsed_from_json(const json& j) {
  Parsed p;
  p.order = j.at("order").get<int>();
  if (p.order < 1) throw std::invalid_argument("order must be positive");
  for (const auto& t : j.at("terms")) {
    std::vector<BMono> legs;
    for (const auto& lj : t.at("legs")) {
      if (!lj.is_array() || lj.size() != 4)
        throw std::invalid_argument("leg must be [n, m, k, l]");
      legs.push_back({lj[0].get<int>(), lj[1].get<int>(), lj[2].get<int>(), lj[3].get<int>()});
    }
    if ((int)legs.size() != p.order)
      throw std::invalid_argument("leg count must match order");
    p.add(legs, scalar_from_json(t.at("c")));
  }
  return p;
}

template <class C>
inline json to_json(const Element<C>& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.t)
    terms.push_back({{"n", m.n}, {"m", m.m}, {"k", m.k}, {"c", to_json(c)}});
  return {{"terms", terms}};
}

inline Element<Scalar> element_from_json(const json& j) {
  Element<Scalar> x;
  for (const auto& t : j.at("terms"))
    x.add_term({t.at("n").get<int>(), t.at("m").get<int>(), t.at("k").get<int>()},
               scalar_from_json(t.at("c")));
  return x;
}

template <class C>
inline json to_json(const BElement<C>& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.t)
    terms.push_back({{"n", m.n}, {"m", m.m}, {"k", m.k}, {"l", m.l}, {"c", to_json(c)}});
  return {{"terms", terms}};
}

inline BElement<Scalar> belement_from_json(const json& j) {
  BElement<Scalar> x;
  for (const auto& t : j.at("terms"))
    x.add_term({t.at("n").get<int>(), t.at("m").get<int>(), t.at("k").get<int>(),
                t.at("l").get<int>()},
               scalar_from_json(t.at("c")));
  return x;
}

template <class C>
inline json to_json(const Rep<C>& r) {
  json rows = json::array();
  for (const auto& row : r.u) {
    json cols = json::array();
    for (const auto& e : row) cols.push_back(to_json(e));
    rows.push_back(cols);
  }
  return {{"dim", r.dim()}, {"weights", r.weights}, {"entries", rows}};
}

inline Rep<Scalar> rep_from_json(const json& j) {
  Rep<Scalar> r;
  r.weights = j.at("weights").get<std::vector<int>>();
  int d = (int)r.weights.size();
  if (j.contains("dim") && j.at("dim").get<int>() != d)
    throw std::invalid_argument("dim must match weights");
  const json& rows = j.at("entries");
  if ((int)rows.size() != d) throw std::invalid_argument("entry rows must match dim");
  r.u.assign(d, std::vector<Element<Scalar>>(d, Element<Scalar>::zero()));
  for (int i = 0; i < d; ++i) {
    if ((int)rows[i].size() != d) throw std::invalid_argument("entry columns must match dim");
    for (int jj = 0; jj < d; ++jj) r.u[i][jj] = element_from_json(rows[i][jj]);
  }
  return r;
}

} // namespace suq2
