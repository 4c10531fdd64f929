#pragma once

// Bridges between the exact and numeric coefficient fields, plus the
// coefficient-wise comparison used to check that both pipelines agree at a
// concrete q. Comparisons run over the union of monomial keys so a term
// missing on one side counts at full weight.

#include <suq2/braided.hpp>
#include <suq2/boson.hpp>

#include <complex>
#include <map>

namespace suq2 {

inline NScalar to_numeric(const Scalar& c) { return NScalar{c.numeric_eval()}; }

template <class K>
std::map<K, std::complex<double>> eval_map(const std::map<K, Scalar>& t,
                                           std::complex<double> q0) {
  std::map<K, std::complex<double>> out;
  for (const auto& [k, c] : t) out.emplace(k, c.numeric_eval(q0));
  return out;
}

template <class K>
std::map<K, std::complex<double>> eval_map(const std::map<K, NScalar>& t) {
  std::map<K, std::complex<double>> out;
  for (const auto& [k, c] : t) out.emplace(k, c.z);
  return out;
}

inline std::map<Mono, std::complex<double>> eval_coeffs(const Element<Scalar>& x,
                                                        std::complex<double> q0) {
  return eval_map(x.t, q0);
}
inline std::map<BMono, std::complex<double>> eval_coeffs(const BElement<Scalar>& x,
                                                         std::complex<double> q0) {
  return eval_map(x.t, q0);
}
inline std::map<std::vector<Mono>, std::complex<double>> eval_coeffs(const Braided<Scalar>& x,
                                                                     std::complex<double> q0) {
  return eval_map(x.t, q0);
}
inline std::map<std::pair<BMono, BMono>, std::complex<double>> eval_coeffs(
    const BTensor<Scalar>& x, std::complex<double> q0) {
  return eval_map(x.t, q0);
}

inline std::map<Mono, std::complex<double>> num_coeffs(const Element<NScalar>& x) {
  return eval_map(x.t);
}
inline std::map<BMono, std::complex<double>> num_coeffs(const BElement<NScalar>& x) {
  return eval_map(x.t);
}
inline std::map<std::vector<Mono>, std::complex<double>> num_coeffs(const Braided<NScalar>& x) {
  return eval_map(x.t);
}
inline std::map<std::pair<BMono, BMono>, std::complex<double>> num_coeffs(
    const BTensor<NScalar>& x) {
  return eval_map(x.t);
}

// worst |a_k - b_k| over the key union, scaled by 1 + max |coefficient|
template <class K>
double rel_gap(const std::map<K, std::complex<double>>& a,
               const std::map<K, std::complex<double>>& b) {
  double mag = 0.0;
  for (const auto& [k, c] : a) mag = std::max(mag, std::abs(c));
  for (const auto& [k, c] : b) mag = std::max(mag, std::abs(c));
  double worst = 0.0;
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    std::complex<double> d = it == b.end() ? c : c - it->second;
    worst = std::max(worst, std::abs(d));
  }
  for (const auto& [k, c] : b)
    if (!a.count(k)) worst = std::max(worst, std::abs(c));
  return worst / (1.0 + mag);
}

inline double scalar_gap(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

// structure-preserving coefficient evaluation at the session q0
inline Element<NScalar> to_numeric(const Element<Scalar>& x) {
  Element<NScalar> out;
  for (const auto& [m, c] : x.t) out.t.emplace(m, to_numeric(c));
  return out;
}

inline BElement<NScalar> to_numeric(const BElement<Scalar>& x) {
  BElement<NScalar> out;
  for (const auto& [m, c] : x.t) out.t.emplace(m, to_numeric(c));
  return out;
}

inline Braided<NScalar> to_numeric(const Braided<Scalar>& x) {
  Braided<NScalar> out{x.order, {}};
  for (const auto& [m, c] : x.t) out.t.emplace(m, to_numeric(c));
  return out;
}

inline BTensor<NScalar> to_numeric(const BTensor<Scalar>& x) {
  BTensor<NScalar> out;
  for (const auto& [m, c] : x.t) out.t.emplace(m, to_numeric(c));
  return out;
}

} // namespace suq2
