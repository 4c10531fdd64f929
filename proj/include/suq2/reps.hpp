#pragma once

#include "boson.hpp"

#include <string>
#include <vector>

namespace suq2 {

// finite-dimensional unitary corepresentation: entries u[i][j] homogeneous of
// degree weights[i] - weights[j]
template <class C>
struct Rep {
  std::vector<int> weights;
  std::vector<std::vector<Element<C>>> u;

  int dim() const { return (int)weights.size(); }

  static Rep trivial() { return {{0}, {{Element<C>::unit()}}}; }

  static Rep fundamental() {
    Rep r;
    r.weights = {0, 1};
    r.u = {{Element<C>::gen_a(), -(C::q_pow(1) * Element<C>::gen_gs())},
           {Element<C>::gen_g(), Element<C>::gen_as()}};
    return r;
  }
};

template <class C>
std::vector<std::string> validate_rep(const Rep<C>& r) {
  std::vector<std::string> bad;
  int d = r.dim();
  if ((int)r.u.size() != d) return {"entry matrix does not match the weight count"};
  for (const auto& row : r.u)
    if ((int)row.size() != d) return {"entry matrix is not square"};

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto hd = hom_degree(r.u[i][j]);
      if (!r.u[i][j].is_zero() && (!hd || *hd != r.weights[i] - r.weights[j])) {
        bad.push_back("entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is not homogeneous of the weight difference");
      }
    }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Braided<C> rhs{2, {}};
      for (int p = 0; p < d; ++p) rhs = rhs + btp(r.u[i][p], r.u[p][j]);
      if (!(delta(r.u[i][j]) == rhs))
        bad.push_back("comultiplication of entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ") is not the matrix square");
    }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Element<C> su = Element<C>::zero(), us = Element<C>::zero();
      for (int p = 0; p < d; ++p) {
        su = su + star(r.u[p][i]) * r.u[p][j];
        us = us + r.u[i][p] * star(r.u[j][p]);
      }
      Element<C> target = i == j ? Element<C>::unit() : Element<C>::zero();
      if (!(su == target))
        bad.push_back("column " + std::to_string(i) + "," + std::to_string(j) +
                      " fails u* u = 1");
      if (!(us == target))
        bad.push_back("row " + std::to_string(i) + "," + std::to_string(j) +
                      " fails u u* = 1");
    }

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      C e = counit(r.u[i][j]);
      C target = i == j ? C::one() : C::zero();
      if (!(e == target))
        bad.push_back("counit of entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ") is not the identity matrix");
    }

  return bad;
}

// product corepresentation; the exchange of the inner legs costs
// zeta^{deg(u entry) * (row weight of the v entry)}
template <class C>
Rep<C> tensor_rep(const Rep<C>& a, const Rep<C>& b) {
  Rep<C> r;
  int da = a.dim(), db = b.dim();
  r.weights.resize(da * db);
  for (int k = 0; k < da; ++k)
    for (int l = 0; l < db; ++l)
      r.weights[k * db + l] = a.weights[k] + b.weights[l];
  r.u.assign(da * db, std::vector<Element<C>>(da * db, Element<C>::zero()));
  for (int k = 0; k < da; ++k)
    for (int l = 0; l < db; ++l)
      for (int kp = 0; kp < da; ++kp)
        for (int lp = 0; lp < db; ++lp) {
          C tw = C::zeta_pow((a.weights[k] - a.weights[kp]) * b.weights[l]);
          r.u[k * db + l][kp * db + lp] = tw * (a.u[k][kp] * b.u[l][lp]);
        }
  auto bad = validate_rep(r);
  if (!bad.empty()) throw std::logic_error("tensor product candidate failed: " + bad.front());
  return r;
}

// the antipode sends each entry to the star of the transposed entry
template <class C>
bool antipode_entries_match(const Rep<C>& r) {
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j)
      if (!(antipode(r.u[i][j]) == star(r.u[j][i]))) return false;
  return true;
}

// corepresentation of the crossed product: v_ij = kappa(u_ij) z^{w_j}
template <class C>
std::vector<std::vector<BElement<C>>> boson_lift(const Rep<C>& r) {
  int d = r.dim();
  std::vector<std::vector<BElement<C>>> v(d, std::vector<BElement<C>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      v[i][j] = kappa(r.u[i][j]) * BElement<C>::gen_z(r.weights[j]);
  return v;
}

template <class C>
std::vector<std::string> validate_boson_corep(const std::vector<std::vector<BElement<C>>>& v) {
  std::vector<std::string> bad;
  int d = (int)v.size();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      BTensor<C> rhs;
      for (int p = 0; p < d; ++p) rhs = rhs + btp(v[i][p], v[p][j]);
      if (!(delta_B(v[i][j]) == rhs))
        bad.push_back("comultiplication of lifted entry (" + std::to_string(i) + "," +
                      std::to_string(j) + ") is not the matrix square");
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      BElement<C> su = BElement<C>::zero(), us = BElement<C>::zero();
      for (int p = 0; p < d; ++p) {
        su = su + star(v[p][i]) * v[p][j];
        us = us + v[i][p] * star(v[j][p]);
      }
      BElement<C> target = i == j ? BElement<C>::unit() : BElement<C>::zero();
      if (!(su == target))
        bad.push_back("lifted column " + std::to_string(i) + "," + std::to_string(j) +
                      " fails v* v = 1");
      if (!(us == target))
        bad.push_back("lifted row " + std::to_string(i) + "," + std::to_string(j) +
                      " fails v v* = 1");
    }
  return bad;
}

// do the matrix coefficients of the tensor powers span every monomial with
// |n| + m + k <= bound? solved degreewise by exact elimination
template <class C>
bool coeff_span_check(int bound, int maxpow, std::vector<Mono>* missing = nullptr) {
  std::vector<Element<C>> cand;
  Rep<C> w = Rep<C>::trivial();
  cand.push_back(w.u[0][0]);
  Rep<C> f = Rep<C>::fundamental();
  for (int j = 1; j <= maxpow; ++j) {
    w = j == 1 ? f : tensor_rep(w, f);
    for (const auto& row : w.u)
      for (const auto& e : row)
        if (!e.is_zero()) cand.push_back(e);
  }

  std::map<int, std::vector<Element<C>>> echelon; // per degree, pivot = first mono
  auto reduce = [&](Element<C> vec, int d) {
    for (const auto& row : echelon[d]) {
      const Mono& piv = row.t.begin()->first;
      auto it = vec.t.find(piv);
      if (it == vec.t.end()) continue;
      vec = vec - it->second * row;
    }
    return vec;
  };
  for (const auto& e : cand) {
    auto hd = hom_degree(e);
    if (!hd) continue;
    Element<C> rem = reduce(e, *hd);
    if (rem.is_zero()) continue;
    echelon[*hd].push_back(rem.t.begin()->second.inv() * rem);
  }

  bool ok = true;
  for (int n = -bound; n <= bound; ++n)
    for (int m = 0; m + (n < 0 ? -n : n) <= bound; ++m)
      for (int k = 0; k + m + (n < 0 ? -n : n) <= bound; ++k) {
        Mono mo{n, m, k};
        Element<C> rem = reduce(Element<C>::monomial(mo, C::one()), deg(mo));
        if (!rem.is_zero()) {
          ok = false;
          if (missing) missing->push_back(mo);
        }
      }
  return ok;
}

} // namespace suq2
