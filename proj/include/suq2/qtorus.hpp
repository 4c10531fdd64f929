#pragma once

// Numeric laboratory for the quantum torus at a root of unity: matrix
// realization, Fourier multiplier experiments, and the double-limit
// sequence construction at an irrational angle.

#include <suq2/modhit.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace suq2 {
namespace qtorus {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Key = std::pair<long long, long long>;

inline constexpr double pi_v = 3.14159265358979323846;

inline cd ipow(cd z, long long e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  cd acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

// finitely supported sum a_{nm} U^n V^m with UV = zeta VU
struct TorusElement {
  std::map<Key, cd> t;

  void add_term(long long n, long long m, cd c) {
    if (c == cd(0.0)) return;
    auto [it, fresh] = t.emplace(Key{n, m}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == cd(0.0)) t.erase(it);
    }
  }

  static TorusElement mono(long long n, long long m, cd c = 1.0) {
    TorusElement x;
    x.add_term(n, m, c);
    return x;
  }
};

// d-dimensional shift/diagonal pair with zeta = exp(2 pi i num/d)
struct BocaRep {
  int d = 0;
  int num = 0;
  Mat U0, V0;

  cd zeta_pow(long long e) const {
    long long g = (long long)(((__int128)num * (e % d)) % d);
    if (g < 0) g += d;
    double ang = 2.0 * pi_v * (double)g / (double)d;
    return {std::cos(ang), std::sin(ang)};
  }
  cd zeta() const { return zeta_pow(1); }
};

inline BocaRep boca(int d, int num = 1) {
  if (d < 1) throw std::invalid_argument("boca: d >= 1 required");
  num %= d;
  if (num < 0) num += d;
  if (std::gcd(num, d) != 1) throw std::invalid_argument("boca: gcd(num, d) = 1 required");
  BocaRep rep;
  rep.d = d;
  rep.num = num;
  rep.U0 = Mat::Zero(d, d);
  rep.V0 = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    rep.U0(i, (i + 1) % d) = 1.0;
    rep.V0(i, i) = rep.zeta_pow(i);
  }
  return rep;
}

inline Mat u_pow(const BocaRep& rep, long long n) {
  long long s = n % rep.d;
  if (s < 0) s += rep.d;
  Mat m = Mat::Zero(rep.d, rep.d);
  for (int i = 0; i < rep.d; ++i) m(i, (int)((i + s) % rep.d)) = 1.0;
  return m;
}

inline Mat v_pow(const BocaRep& rep, long long e) {
  Mat m = Mat::Zero(rep.d, rep.d);
  long long s = e % rep.d;
  for (int i = 0; i < rep.d; ++i) m(i, i) = rep.zeta_pow((long long)i * s);
  return m;
}

// product and adjoint in the defining relations: V^m U^n = zeta^{-mn} U^n V^m
inline TorusElement mul(const TorusElement& a, const TorusElement& b, const BocaRep& rep) {
  TorusElement out;
  for (const auto& [ka, ca] : a.t)
    for (const auto& [kb, cb] : b.t) {
      cd tw = rep.zeta_pow(-(ka.second % rep.d) * (kb.first % rep.d));
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb * tw);
    }
  return out;
}

inline TorusElement adjoint(const TorusElement& a, const BocaRep& rep) {
  TorusElement out;
  for (const auto& [k, c] : a.t) {
    cd tw = rep.zeta_pow(-(k.first % rep.d) * (k.second % rep.d));
    out.add_term(-k.first, -k.second, std::conj(c) * tw);
  }
  return out;
}

// matrix symbol at a point of the 2-torus
inline Mat symbol_at(const TorusElement& x, const BocaRep& rep, cd z1, cd z2) {
  Mat m = Mat::Zero(rep.d, rep.d);
  for (const auto& [k, c] : x.t)
    m += c * ipow(z1, k.first) * ipow(z2, k.second) * (u_pow(rep, k.first) * v_pow(rep, k.second));
  return m;
}

struct NormParams {
  int grid = 64;
  int rand_pts = 100;
  unsigned seed = 12345;
};

// sampled operator norm: sup over the torus of the top singular value
inline double torus_norm(const TorusElement& x, const BocaRep& rep, NormParams p = {}) {
  std::vector<std::pair<cd, Mat>> terms;
  terms.reserve(x.t.size());
  for (const auto& [k, c] : x.t)
    terms.emplace_back(c, u_pow(rep, k.first) * v_pow(rep, k.second));
  std::vector<Key> keys;
  keys.reserve(x.t.size());
  for (const auto& [k, c] : x.t) keys.push_back(k);

  double best = 0.0;
  Mat m(rep.d, rep.d);
  auto eval = [&](cd z1, cd z2) {
    m.setZero();
    for (size_t i = 0; i < terms.size(); ++i)
      m += terms[i].first * ipow(z1, keys[i].first) * ipow(z2, keys[i].second) * terms[i].second;
    Eigen::JacobiSVD<Mat> svd(m);
    best = std::max(best, svd.singularValues()(0));
  };

  for (int j = 0; j < p.grid; ++j)
    for (int k = 0; k < p.grid; ++k)
      eval(std::polar(1.0, 2.0 * pi_v * j / p.grid), std::polar(1.0, 2.0 * pi_v * k / p.grid));
  std::mt19937 rng(p.seed);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * pi_v);
  for (int i = 0; i < p.rand_pts; ++i) eval(std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng)));
  return best;
}

// discrete Fourier conjugation: O e_k = (1/sqrt d) sum_l zeta^{kl} e_l,
// T e_k = e_{-k}; phi0(x) = T (O x O^*)^t T^*
inline Mat fourier_o(const BocaRep& rep) {
  Mat o(rep.d, rep.d);
  double s = 1.0 / std::sqrt((double)rep.d);
  for (int l = 0; l < rep.d; ++l)
    for (int k = 0; k < rep.d; ++k) o(l, k) = s * rep.zeta_pow((long long)k * l);
  return o;
}

inline Mat index_negation(const BocaRep& rep) {
  Mat m = Mat::Zero(rep.d, rep.d);
  for (int k = 0; k < rep.d; ++k) m((rep.d - k) % rep.d, k) = 1.0;
  return m;
}

inline Mat phi0(const Mat& x, const BocaRep& rep) {
  Mat o = fourier_o(rep), t = index_negation(rep);
  return t * (o * x * o.adjoint()).transpose() * t.adjoint();
}

// exchange of the two unitaries: U^n V^m -> V^n U^m = zeta^{-nm} U^m V^n
inline TorusElement flip_map(const TorusElement& x, const BocaRep& rep) {
  TorusElement out;
  for (const auto& [k, c] : x.t)
    out.add_term(k.second, k.first, c * rep.zeta_pow(-(k.first % rep.d) * (k.second % rep.d)));
  return out;
}

inline TorusElement random_element(std::mt19937& rng, int box = 3, int min_terms = 3, int max_terms = 6) {
  std::uniform_int_distribution<int> nt(min_terms, max_terms), key(-box, box);
  std::normal_distribution<double> g(0.0, 1.0);
  TorusElement x;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) x.add_term(key(rng), key(rng), cd(g(rng), g(rng)));
  return x;
}

struct BoundReport {
  int trials = 0;
  double max_ratio = 0.0;
  double bound = 0.0;
  bool pass = false;
};

// operator-norm consequence of the flip bound: ||flip(a)|| <= d^2 ||a||
inline BoundReport flip_bound_check(const BocaRep& rep, int trials, unsigned seed, NormParams np = {}) {
  BoundReport rp;
  rp.trials = trials;
  rp.bound = (double)rep.d * rep.d;
  std::mt19937 rng(seed);
  for (int i = 0; i < trials; ++i) {
    TorusElement a = random_element(rng);
    double na = torus_norm(a, rep, np);
    if (na < 1e-12) continue;
    double nb = torus_norm(flip_map(a, rep), rep, np);
    rp.max_ratio = std::max(rp.max_ratio, nb / na);
  }
  rp.pass = rp.max_ratio <= rp.bound + 1e-9;
  return rp;
}

// one-variable multiplier g_z: z^n for n >= 0, conj(z)^{-n} for n < 0
inline cd g_z(cd z, long long n) { return n >= 0 ? ipow(z, n) : ipow(std::conj(z), -n); }

struct GzReport {
  std::vector<cd> values; // n = -truncation .. truncation
  double variation = 0.0; // sum over all of Z, closed form; inf on the circle
};

inline GzReport multiplier_gz(cd z, int truncation) {
  double az = std::abs(z);
  if (az > 1.0 + 1e-12) throw std::invalid_argument("multiplier_gz: |z| <= 1 required");
  GzReport rp;
  for (long long n = -truncation; n <= truncation; ++n) rp.values.push_back(g_z(z, n));
  rp.variation = az < 1.0 ? (1.0 + az) / (1.0 - az) : std::numeric_limits<double>::infinity();
  return rp;
}

// atomic measure (1/d) sum zeta^{-kl} delta_{(zeta^k, zeta^l)}; pairs to
// zeta^{nm} against z1^{-n} z2^{-m} and has total variation d
struct RhoAtom {
  int k = 0, l = 0;
  cd z1, z2, w;
};

struct RhoReport {
  std::vector<RhoAtom> atoms;
  double variation = 0.0;
  double max_pairing_err = 0.0;
  bool pass = false;
};

inline RhoReport rho_measure(const BocaRep& rep, double tol = 1e-9) {
  RhoReport rp;
  for (int k = 0; k < rep.d; ++k)
    for (int l = 0; l < rep.d; ++l) {
      RhoAtom a;
      a.k = k;
      a.l = l;
      a.z1 = rep.zeta_pow(k);
      a.z2 = rep.zeta_pow(l);
      a.w = rep.zeta_pow(-(long long)k * l) / (double)rep.d;
      rp.variation += std::abs(a.w);
      rp.atoms.push_back(a);
    }
  for (long long n = -2 * rep.d; n <= 2 * rep.d; ++n)
    for (long long m = -2 * rep.d; m <= 2 * rep.d; ++m) {
      cd s = 0.0;
      for (const auto& a : rp.atoms) s += a.w * rep.zeta_pow(-(a.k * n + a.l * m));
      rp.max_pairing_err = std::max(rp.max_pairing_err, std::abs(s - rep.zeta_pow(n * m)));
    }
  rp.pass = std::abs(rp.variation - (double)rep.d) <= tol && rp.max_pairing_err <= tol;
  return rp;
}

// generators of the twisted bitorus on a truncated grid l2({-N..N})^2:
// iota1 = shift (x) diag(zeta^j), iota2 = 1 (x) shift. The compositions
// satisfy iota1 iota2 = zeta iota2 iota1 on columns away from the boundary.
inline double torus_shift_commutation(int n_grid, cd zeta) {
  int w = 2 * n_grid + 1, dim = w * w;
  auto idx = [&](int i, int j) { return (i + n_grid) * w + (j + n_grid); };
  Mat i1 = Mat::Zero(dim, dim), i2 = Mat::Zero(dim, dim);
  for (int i = -n_grid; i <= n_grid; ++i)
    for (int j = -n_grid; j <= n_grid; ++j) {
      if (i + 1 <= n_grid) i1(idx(i + 1, j), idx(i, j)) = ipow(zeta, j);
      if (j + 1 <= n_grid) i2(idx(i, j + 1), idx(i, j)) = 1.0;
    }
  Mat res = i1 * i2 - zeta * (i2 * i1);
  double worst = 0.0;
  for (int i = -n_grid + 1; i <= n_grid - 1; ++i)
    for (int j = -n_grid + 1; j <= n_grid - 1; ++j)
      worst = std::max(worst, res.col(idx(i, j)).norm());
  return worst;
}

// ---- double-limit sequences -------------------------------------------

// residual of zeta^e against +1 resp. -1, zeta = exp(2 pi i M/Q), exact phase
inline double chord_one(long long M, long long Q, long long e) {
  long long res = modhit::mulmod(e, M, Q);
  return 2.0 * std::abs(std::sin(pi_v * (double)res / (double)Q));
}

inline double chord_minus_one(long long M, long long Q, long long e) {
  long long res = modhit::mulmod(e, M, Q);
  return 2.0 * std::abs(std::cos(pi_v * (double)res / (double)Q));
}

struct StarStage {
  long long n = 0, m = 0;
  double worst_one = 0.0;       // max_{s<R} |zeta^{n_s m_R} - 1|
  double worst_minus_one = 0.0; // max_{t<=R} |zeta^{n_R m_t} + 1|
};

struct StarReport {
  long long M = 0, Q = 0;
  std::vector<StarStage> stages;
  bool ok = false;
};

namespace detail {

// half-width of the phase window guaranteeing a chord below eps
inline long long chord_window(double eps, long long Q) {
  if (eps >= 2.0) return Q / 2;
  double delta = std::asin(eps / 2.0) / pi_v;
  long long d = (long long)std::floor(delta * (double)Q) - 1;
  return d;
}

} // namespace detail

// exact construction of the (n_R, m_R) family for zeta = exp(2 pi i M/Q):
// m_1 = 1; m_{R} the least odd >= 3 with |zeta^{m_R} - 1| small enough to
// amplify across all earlier n_s; n_R the least with |zeta^{n_R} + 1| small
// enough across all m_t so far. Odd m keeps (-1)^m = -1.
inline StarReport star_sequence_dyadic(long long M, long long Q, int R, long long search_limit) {
  StarReport rp;
  rp.M = M;
  rp.Q = Q;
  if (R < 1) throw std::invalid_argument("star_sequence: R >= 1 required");
  for (long long t = 1; t <= std::min<long long>(1000, search_limit); ++t)
    if (chord_one(M, Q, t) < 1e-6)
      throw std::domain_error("star_sequence: angle too close to a low-order root of unity");

  std::vector<long long> ns, ms;
  auto max_of = [](const std::vector<long long>& v) {
    return *std::max_element(v.begin(), v.end());
  };

  ms.push_back(1);
  {
    long long d = detail::chord_window(1.0, Q);
    long long x = modhit::hit_near_half(M, M % Q, Q, d);
    if (x == modhit::miss || 1 + x > search_limit)
      throw std::runtime_error("star_sequence: search limit exhausted");
    ns.push_back(1 + x);
  }
  for (int stage = 2; stage <= R; ++stage) {
    double eps_m = 1.0 / ((double)stage * (double)max_of(ns));
    long long d = detail::chord_window(eps_m, Q);
    long long x = modhit::hit_near_zero(modhit::mulmod(2, M, Q), modhit::mulmod(3, M, Q), Q, d);
    if (x == modhit::miss || 3 + 2 * x > search_limit)
      throw std::runtime_error("star_sequence: search limit exhausted");
    ms.push_back(3 + 2 * x);

    double eps_n = 1.0 / ((double)stage * (double)max_of(ms));
    long long dn = detail::chord_window(eps_n, Q);
    long long y = modhit::hit_near_half(M, M % Q, Q, dn);
    if (y == modhit::miss || 1 + y > search_limit)
      throw std::runtime_error("star_sequence: search limit exhausted");
    ns.push_back(1 + y);
  }

  rp.ok = true;
  for (int stage = 1; stage <= R; ++stage) {
    StarStage st;
    st.n = ns[stage - 1];
    st.m = ms[stage - 1];
    for (int s = 1; s < stage; ++s) {
      long long e = modhit::mulmod(ns[s - 1], ms[stage - 1], Q);
      st.worst_one = std::max(st.worst_one, chord_one(M, Q, e));
    }
    for (int t = 1; t <= stage; ++t) {
      long long e = modhit::mulmod(ns[stage - 1], ms[t - 1], Q);
      st.worst_minus_one = std::max(st.worst_minus_one, chord_minus_one(M, Q, e));
    }
    double tol = 1.0 / (double)stage;
    if (st.m % 2 == 0 || st.n < 1 || st.worst_one > tol || st.worst_minus_one > tol)
      rp.ok = false;
    rp.stages.push_back(st);
  }
  return rp;
}

// rounds the angle of zeta to the nearest dyadic M/2^53 and runs exactly
inline StarReport star_sequence(cd zeta, int R, long long search_limit) {
  double theta = std::arg(zeta) / (2.0 * pi_v);
  if (theta < 0) theta += 1.0;
  long long Q = 1LL << 53;
  long long M = (long long)std::llround(theta * (double)Q);
  return star_sequence_dyadic(M, Q, R, search_limit);
}

// ---- evaluation bound at the spectrum of gamma --------------------------

struct SpectrumReport {
  double bound = 0.0;
  double max_norm = 0.0;
  int pairs = 0;
  bool pass = false;
};

// coefficients of a unit-norm element are damped by g_{z1}(n) g_{z2}(m) at
// sampled points z of {0} u {lambda |q|^k}; every sampled norm stays below
// ((1+|q|)/(1-|q|))^2
inline SpectrumReport spectrum_eval_bound(const BocaRep& rep, double absq, int spectrum_samples,
                                          unsigned seed, NormParams np = {}) {
  if (!(absq > 0.0 && absq < 1.0)) throw std::invalid_argument("spectrum_eval_bound: 0 < |q| < 1 required");
  SpectrumReport rp;
  rp.bound = std::pow((1.0 + absq) / (1.0 - absq), 2.0);

  std::mt19937 rng(seed);
  TorusElement a = random_element(rng);
  double na = torus_norm(a, rep, np);
  for (auto& [k, c] : a.t) c /= na;

  std::vector<cd> pts{cd(0.0)};
  std::uniform_real_distribution<double> ang(0.0, 2.0 * pi_v);
  std::uniform_int_distribution<int> kk(0, 8);
  for (int i = 1; i < spectrum_samples; ++i)
    pts.push_back(std::polar(std::pow(absq, (double)kk(rng)), ang(rng)));

  for (cd z1 : pts)
    for (cd z2 : pts) {
      TorusElement b;
      for (const auto& [k, c] : a.t) b.add_term(k.first, k.second, c * g_z(z1, k.first) * g_z(z2, k.second));
      rp.max_norm = std::max(rp.max_norm, torus_norm(b, rep, np));
      ++rp.pairs;
    }
  rp.pass = rp.max_norm <= rp.bound + 1e-9;
  return rp;
}

} // namespace qtorus
} // namespace suq2
