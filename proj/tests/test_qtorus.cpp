#include <catch2/catch_amalgamated.hpp>

#include <suq2/qtorus.hpp>

#include <random>

using namespace suq2;
using namespace suq2::qtorus;

namespace {

long long brute_first_hit(long long a, long long b, long long m, long long len) {
  for (long long x = 0; x < m; ++x)
    if ((a * x + b) % m < len) return x;
  return modhit::miss;
}

constexpr long long kQ = 1LL << 53;
constexpr long long kGoldenM = 5566755282872656LL; // 0.6180339887498949 * 2^53, exact

} // namespace

TEST_CASE("first-hit kernel vs exhaustive scan") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long long> md(1, 400);
  for (int i = 0; i < 4000; ++i) {
    long long m = md(rng);
    std::uniform_int_distribution<long long> any(-2 * m, 2 * m);
    long long a = any(rng), b = any(rng);
    std::uniform_int_distribution<long long> ld(0, m + 2);
    long long len = ld(rng);
    long long aa = ((a % m) + m) % m, bb = ((b % m) + m) % m;
    CHECK(modhit::first_hit(a, b, m, len) == brute_first_hit(aa, bb, m, len));
  }
  // degenerate corners
  CHECK(modhit::first_hit(7, 3, 10, 0) == modhit::miss);
  CHECK(modhit::first_hit(0, 5, 10, 5) == modhit::miss);
  CHECK(modhit::first_hit(0, 5, 10, 6) == 0);
  CHECK(modhit::first_hit(4, 2, 10, 11) == 0);
  // gcd(a,m) > 1 can make the window unreachable
  CHECK(modhit::first_hit(4, 1, 12, 1) == modhit::miss);
  CHECK(modhit::first_hit(4, 3, 12, 2) == brute_first_hit(4, 3, 12, 2));
}

TEST_CASE("first-hit kernel at large modulus") {
  // returned index is a hit and the window wrappers agree with direct chords
  std::mt19937 rng(77);
  std::uniform_int_distribution<long long> dd(100, 100000);
  for (int i = 0; i < 50; ++i) {
    long long d = dd(rng);
    long long x = modhit::hit_near_zero(kGoldenM, kGoldenM % kQ, kQ, d);
    REQUIRE(x != modhit::miss);
    long long res = modhit::mulmod(x + 1, kGoldenM, kQ); // progression starts at e = 1
    long long dist = std::min(res, kQ - res);
    CHECK(dist <= d);
  }
}

TEST_CASE("shift and diagonal pair") {
  BocaRep r2 = boca(2);
  CHECK(std::abs(r2.U0(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(r2.U0(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(r2.U0(0, 0)) < 1e-15);
  CHECK(std::abs(r2.V0(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(r2.V0(1, 1) + 1.0) < 1e-15);

  for (int d = 1; d <= 16; ++d) {
    BocaRep rep = boca(d);
    CHECK((rep.U0 * rep.V0 - rep.zeta() * rep.V0 * rep.U0).norm() <= 1e-12);
    CHECK((rep.U0 * rep.U0.adjoint() - Mat::Identity(d, d)).norm() <= 1e-12);
    CHECK((rep.V0 * rep.V0.adjoint() - Mat::Identity(d, d)).norm() <= 1e-12);
  }
  CHECK_THROWS_AS(boca(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(boca(0), std::invalid_argument);
}

TEST_CASE("fourier conjugations") {
  for (int d : {2, 3, 5, 7}) {
    BocaRep rep = boca(d);
    Mat o = fourier_o(rep), t = index_negation(rep), id = Mat::Identity(d, d);
    CHECK((o * o.adjoint() - id).norm() <= 1e-12);
    CHECK((t * t.adjoint() - id).norm() <= 1e-12);
    CHECK((o * rep.U0 * o.adjoint() - v_pow(rep, -1)).norm() <= 1e-12);
    CHECK((o * rep.V0 * o.adjoint() - rep.U0).norm() <= 1e-12);
    CHECK((t * rep.U0 * t.adjoint() - rep.U0.adjoint()).norm() <= 1e-12);
    CHECK((t * rep.V0 * t.adjoint() - rep.V0.adjoint()).norm() <= 1e-12);
  }
}

TEST_CASE("transposition intertwiner swaps the generators") {
  for (int d : {2, 3, 5, 7}) {
    BocaRep rep = boca(d);
    for (int n = 0; n < d; ++n)
      for (int m = 0; m < d; ++m) {
        Mat lhs = phi0(u_pow(rep, n) * v_pow(rep, m), rep);
        Mat rhs = u_pow(rep, m) * v_pow(rep, n);
        CHECK((lhs - rhs).norm() <= 1e-12);
      }
    CHECK((phi0(Mat::Identity(d, d), rep) - Mat::Identity(d, d)).norm() <= 1e-12);
  }
  BocaRep r2 = boca(2);
  CHECK((phi0(r2.U0, r2) - r2.V0).norm() <= 1e-12);
}

TEST_CASE("product and adjoint match the matrix symbol") {
  BocaRep rep = boca(3);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ang(0.0, 2 * pi_v);
  for (int i = 0; i < 25; ++i) {
    TorusElement a = random_element(rng), b = random_element(rng);
    cd z1 = std::polar(1.0, ang(rng)), z2 = std::polar(1.0, ang(rng));
    CHECK((symbol_at(mul(a, b, rep), rep, z1, z2) - symbol_at(a, rep, z1, z2) * symbol_at(b, rep, z1, z2))
              .norm() <= 1e-10);
    CHECK((symbol_at(adjoint(a, rep), rep, z1, z2) - symbol_at(a, rep, z1, z2).adjoint()).norm() <= 1e-10);
  }
}

TEST_CASE("sampled norms") {
  NormParams np;
  np.grid = 64;
  BocaRep r2 = boca(2);
  CHECK(torus_norm(TorusElement::mono(1, 0), r2, np) == Catch::Approx(1.0).margin(1e-9));
  // ||z1 U0 + z2 V0||^2 = 2 + 2|Im(conj(z2) z1)|, peaking at 4 on the grid
  TorusElement upv;
  upv.add_term(1, 0, 1.0);
  upv.add_term(0, 1, 1.0);
  CHECK(torus_norm(upv, r2, np) == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("exchange of the unitaries") {
  BocaRep rep = boca(3);
  TorusElement u = TorusElement::mono(1, 0);
  TorusElement fu = flip_map(u, rep);
  REQUIRE(fu.t.size() == 1);
  CHECK(fu.t.begin()->first == Key{0, 1});
  CHECK(std::abs(fu.t.begin()->second - cd(1.0)) < 1e-15);

  TorusElement uv = TorusElement::mono(1, 1);
  TorusElement fuv = flip_map(uv, rep);
  REQUIRE(fuv.t.size() == 1);
  CHECK(fuv.t.begin()->first == Key{1, 1});
  CHECK(std::abs(fuv.t.begin()->second - rep.zeta_pow(-1)) < 1e-15);

  // against the matrix picture: flip(U^n V^m) embeds as z1^m z2^n V0^n U0^m
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(-5, 5);
  std::uniform_real_distribution<double> ang(0.0, 2 * pi_v);
  for (int i = 0; i < 40; ++i) {
    int n = e(rng), m = e(rng);
    cd z1 = std::polar(1.0, ang(rng)), z2 = std::polar(1.0, ang(rng));
    Mat lhs = symbol_at(flip_map(TorusElement::mono(n, m), rep), rep, z1, z2);
    Mat rhs = ipow(z1, m) * ipow(z2, n) * (v_pow(rep, n) * u_pow(rep, m));
    CHECK((lhs - rhs).norm() <= 1e-12);
  }
}

TEST_CASE("flip norm ratio stays under d^2") {
  NormParams np;
  np.grid = 16;
  np.rand_pts = 20;
  for (int d : {2, 3, 5}) {
    BoundReport rp = flip_bound_check(boca(d), 20, 91u + d, np);
    CHECK(rp.pass);
    CHECK(rp.max_ratio <= (double)d * d + 1e-9);
    CHECK(rp.max_ratio > 0.0);
  }
}

TEST_CASE("one-variable multiplier") {
  GzReport g = multiplier_gz(0.5, 5);
  CHECK(g.variation == Catch::Approx(3.0));
  CHECK(std::abs(g.values[5 + 2] - cd(0.25)) < 1e-15);
  CHECK(std::abs(g.values[5 - 3] - cd(0.125)) < 1e-15);

  GzReport z0 = multiplier_gz(0.0, 3);
  for (int n = -3; n <= 3; ++n)
    CHECK(std::abs(z0.values[3 + n] - (n == 0 ? cd(1.0) : cd(0.0))) < 1e-15);

  cd w = std::polar(1.0, 1.2);
  GzReport circ = multiplier_gz(w, 4);
  CHECK(std::isinf(circ.variation));
  CHECK(std::abs(circ.values[4 + 3] - ipow(w, 3)) < 1e-14);
  CHECK(std::abs(circ.values[4 - 2] - ipow(std::conj(w), 2)) < 1e-14);

  // truncated absolute sum approaches the closed form
  cd z(0.0, 0.7);
  double s = 0.0;
  for (long long n = -60; n <= 60; ++n) s += std::abs(g_z(z, n));
  CHECK(s == Catch::Approx((1.0 + 0.7) / (1.0 - 0.7)).margin(1e-8));

  CHECK_THROWS_AS(multiplier_gz(cd(1.5, 0.0), 2), std::invalid_argument);
}

TEST_CASE("atomic pairing measure") {
  for (int d : {2, 3, 5}) {
    RhoReport rp = rho_measure(boca(d));
    CHECK(rp.pass);
    CHECK(rp.variation == Catch::Approx((double)d).margin(1e-9));
    CHECK(rp.max_pairing_err <= 1e-9);
    CHECK((int)rp.atoms.size() == d * d);
  }
  // d = 2: pairing against both inverse coordinates gives zeta itself
  BocaRep r2 = boca(2);
  RhoReport rp = rho_measure(r2);
  cd s = 0.0;
  for (const auto& a : rp.atoms) s += a.w * ipow(a.z1, -1) * ipow(a.z2, -1);
  CHECK(std::abs(s - cd(-1.0)) <= 1e-12);

  RhoReport one = rho_measure(boca(1));
  REQUIRE(one.atoms.size() == 1);
  CHECK(std::abs(one.atoms[0].w - cd(1.0)) < 1e-15);
  CHECK(std::abs(one.atoms[0].z1 - cd(1.0)) < 1e-15);
}

TEST_CASE("truncated grid shifts") {
  CHECK(torus_shift_commutation(6, std::polar(1.0, 2 * pi_v * 0.6180339887498949)) <= 1e-10);
  CHECK(torus_shift_commutation(6, std::polar(1.0, 2 * pi_v / 3.0)) <= 1e-10);
}

TEST_CASE("double-limit sequences at the golden angle") {
  StarReport rp = star_sequence_dyadic(kGoldenM, kQ, 6, 1000LL * 1000 * 1000 * 1000 * 1000);
  REQUIRE(rp.stages.size() == 6);
  CHECK(rp.ok);
  CHECK(rp.stages[0].n == 1);
  CHECK(rp.stages[0].m == 1);
  for (int r = 1; r <= 6; ++r) {
    const StarStage& st = rp.stages[r - 1];
    CHECK(st.m % 2 == 1);
    CHECK(st.n >= 1);
    CHECK(st.worst_one <= 1.0 / r);
    CHECK(st.worst_minus_one <= 1.0 / r);
  }

  // stages 2 and 3 against independent linear scans
  auto scan_m = [&](double eps, long long& out) {
    for (long long m = 3;; m += 2)
      if (chord_one(kGoldenM, kQ, m) <= eps) {
        out = m;
        return;
      }
  };
  auto scan_n = [&](double eps, long long& out) {
    for (long long n = 1;; ++n)
      if (chord_minus_one(kGoldenM, kQ, n) <= eps) {
        out = n;
        return;
      }
  };
  long long m257, n2, m3, n3;
  scan_m(1.0 / (2.0 * rp.stages[0].n), m257);
  CHECK(rp.stages[1].m == m257);
  scan_n(1.0 / (2.0 * std::max(m257, 1LL)), n2);
  CHECK(rp.stages[1].n == n2);
  scan_m(1.0 / (3.0 * std::max(rp.stages[0].n, rp.stages[1].n)), m3);
  CHECK(rp.stages[2].m == m3);
  scan_n(1.0 / (3.0 * std::max({1LL, m257, m3})), n3);
  CHECK(rp.stages[2].n == n3);
  CHECK(m257 == 13);
  CHECK(n2 == 72);

  // wrapper recovers the angle up to a trig round-trip ulp and still lands
  // on an equivalent dyadic
  StarReport viaz = star_sequence(std::polar(1.0, 2 * pi_v * 0.6180339887498949), 2, 1000000);
  CHECK(std::abs(viaz.M - kGoldenM) <= 2);
  CHECK(viaz.ok);
  CHECK(viaz.stages[1].m == 13);

  CHECK_THROWS_AS(star_sequence(std::polar(1.0, 2 * pi_v / 3.0), 2, 1000000), std::domain_error);
  CHECK_THROWS_AS(star_sequence_dyadic(kGoldenM, kQ, 0, 100), std::invalid_argument);
}

TEST_CASE("norm bound at sampled spectrum points") {
  NormParams np;
  np.grid = 16;
  np.rand_pts = 20;
  SpectrumReport rp = spectrum_eval_bound(boca(5), 0.5, 8, 3u, np);
  CHECK(rp.bound == Catch::Approx(9.0));
  CHECK(rp.pass);
  CHECK(rp.max_norm <= 9.0 + 1e-9);
  CHECK(rp.pairs == 64);
  CHECK_THROWS_AS(spectrum_eval_bound(boca(2), 1.0, 4, 1u, np), std::invalid_argument);
}
