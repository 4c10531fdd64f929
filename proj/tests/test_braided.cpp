#include <catch2/catch_amalgamated.hpp>

#include <suq2/braided.hpp>

#include <random>

using namespace suq2;
using E = Element<Scalar>;
using B = Braided<Scalar>;

namespace {

E mono(int n, int m, int k) { return E::monomial({n, m, k}, Scalar::one()); }

E rand_elem(std::mt19937& rng, int maxexp = 2, int maxterms = 3) {
  std::uniform_int_distribution<int> nt(1, maxterms), ne(-maxexp, maxexp),
      me(0, maxexp), cf(-2, 2);
  E e;
  int terms = nt(rng);
  for (int i = 0; i < terms; ++i) {
    int c = cf(rng);
    if (c == 0) c = 1;
    e.add_term({ne(rng), me(rng), me(rng)}, Scalar::from_long(c));
  }
  return e;
}

std::vector<E> small_monomials(int bound) {
  std::vector<E> out;
  for (int n = -bound; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (int k = 0; k <= bound; ++k)
        out.push_back(E::monomial({n, m, k}, Scalar::one()));
  return out;
}

} // namespace

TEST_CASE("tensor product twists") {
  set_exact_mode(+1);
  E g = E::gen_g(), gs = E::gen_gs(), one = E::unit();
  CHECK(btp(one, g) * btp(g, one) == Scalar::zeta_pow(-1) * btp(g, g));
  CHECK(btp(one, gs) * btp(g, one) == Scalar::zeta_pow(1) * btp(g, gs));
  CHECK(btp(g, one) * btp(one, g) == btp(g, g));
  std::mt19937 rng(21);
  for (int i = 0; i < 60; ++i) {
    B x = btp(rand_elem(rng), rand_elem(rng));
    B y = btp(rand_elem(rng), rand_elem(rng));
    B z = btp(rand_elem(rng), rand_elem(rng));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * B::one(2) == x);
    CHECK(B::one(2) * x == x);
  }
}

TEST_CASE("tensor star") {
  set_exact_mode(+1);
  E g = E::gen_g(), gs = E::gen_gs();
  CHECK(star(btp(g, gs)) == Scalar::zeta_pow(1) * btp(gs, g));
  std::mt19937 rng(22);
  for (int i = 0; i < 60; ++i) {
    B x = btp(rand_elem(rng), rand_elem(rng));
    B y = btp(rand_elem(rng), rand_elem(rng));
    CHECK(star(star(x)) == x);
    CHECK(star(x * y) == star(y) * star(x));
  }
}

TEST_CASE("braided flip") {
  set_exact_mode(+1);
  E g = E::gen_g(), gs = E::gen_gs();
  CHECK(flip(btp(g, gs)) == Scalar::zeta_pow(1) * btp(gs, g));
  CHECK(flip_inv(btp(g, g)) == Scalar::zeta_pow(1) * btp(g, g));
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    B x = btp(rand_elem(rng), rand_elem(rng));
    CHECK(flip_inv(flip(x)) == x);
    CHECK(flip(flip_inv(x)) == x);
    // exchanging the legs via the flip respects the invariant state pairing
    CHECK(contract_leg(flip_inv(x), 0, haar<Scalar>) == contract_leg(x, 1, haar<Scalar>));
  }
}

TEST_CASE("comultiplication on generators") {
  set_exact_mode(+1);
  E a = E::gen_a(), as = E::gen_as(), g = E::gen_g(), gs = E::gen_gs();
  CHECK(delta(a) == btp(a, a) - Scalar::q_pow(1) * btp(gs, g));
  CHECK(delta(g) == btp(g, a) + btp(as, g));
  CHECK(delta(as) == btp(as, as) - Scalar::q_pow(1) * btp(g, gs));
  CHECK(delta(gs) == btp(gs, as) + btp(a, gs));
  CHECK(delta(E::unit()) == B::one(2));
}

TEST_CASE("comultiplication is a star homomorphism") {
  set_exact_mode(+1);
  std::mt19937 rng(24);
  for (int i = 0; i < 40; ++i) {
    E x = rand_elem(rng), y = rand_elem(rng);
    CHECK(delta(x * y) == delta(x) * delta(y));
    CHECK(delta(star(x)) == star(delta(x)));
  }
}

TEST_CASE("coassociativity") {
  set_exact_mode(+1);
  for (const E& x : small_monomials(2)) {
    B d = delta(x);
    CHECK(delta_leg(d, 0) == delta_leg(d, 1));
  }
  std::mt19937 rng(25);
  for (int i = 0; i < 25; ++i) {
    B d = delta(rand_elem(rng));
    CHECK(delta_leg(d, 0) == delta_leg(d, 1));
  }
}

TEST_CASE("counit laws") {
  set_exact_mode(+1);
  std::mt19937 rng(26);
  for (int i = 0; i < 60; ++i) {
    E x = rand_elem(rng);
    B d = delta(x);
    CHECK(contract_to_element(contract_leg(d, 0, counit<Scalar>)) == x);
    CHECK(contract_to_element(contract_leg(d, 1, counit<Scalar>)) == x);
  }
}

TEST_CASE("antipode laws") {
  set_exact_mode(+1);
  for (const E& x : small_monomials(2)) {
    B d = delta(x);
    E target = counit(x) * E::unit();
    CHECK(mu(map_leg(d, 0, antipode<Scalar>)) == target);
    CHECK(mu(map_leg(d, 1, antipode<Scalar>)) == target);
  }
  // the antipode is comultiplicative only through the flip:
  // delta(S x) = (S (x) S) chi delta(x)
  std::mt19937 rng(27);
  for (int i = 0; i < 40; ++i) {
    E x = rand_elem(rng);
    B lhs = delta(antipode(x));
    B rhs = map_leg(map_leg(flip(delta(x)), 0, antipode<Scalar>), 1, antipode<Scalar>);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("invariance of the state under comultiplication") {
  set_exact_mode(+1);
  for (const E& x : small_monomials(3)) {
    B d = delta(x);
    Scalar hx = haar(x);
    B left = contract_leg(d, 0, haar<Scalar>);
    B right = contract_leg(d, 1, haar<Scalar>);
    CHECK(contract_to_element(left) == hx * E::unit());
    CHECK(contract_to_element(right) == hx * E::unit());
  }
}

TEST_CASE("scaling and modular compatibility with comultiplication") {
  set_exact_mode(+1);
  auto tau1 = [](const E& e) { return tau_is(e, 1); };
  auto tau_1 = [](const E& e) { return tau_is(e, -1); };
  auto sig1 = [](const E& e) { return sigma_is(e, 1); };
  auto sig_1 = [](const E& e) { return sigma_is(e, -1); };
  std::mt19937 rng(28);
  for (int i = 0; i < 40; ++i) {
    E x = rand_elem(rng);
    B d = delta(x);
    CHECK(delta(tau_is(x, 1)) == map_leg(map_leg(d, 0, tau1), 1, tau1));
    CHECK(delta(tau_is(x, 1)) == map_leg(map_leg(d, 0, sig1), 1, sig_1));
    CHECK(delta(sigma_is(x, 1)) == map_leg(map_leg(d, 0, tau1), 1, sig1));
    CHECK(delta(sigma_is(x, 1)) == map_leg(map_leg(d, 0, sig1), 1, tau_1));
  }
}

TEST_CASE("flip defect of the unitary antipode") {
  set_exact_mode(+1);
  E a = E::gen_a(), g = E::gen_g(), gs = E::gen_gs();
  B lhs = delta(unitary_R(a));
  B rhs = map_leg(map_leg(flip(delta(a)), 0, unitary_R<Scalar>), 1, unitary_R<Scalar>);
  B witness = (Scalar::q_pow(1) * (Scalar::zeta_pow(1) - Scalar::one())) * btp(g, gs);
  CHECK(lhs - rhs == witness);
  CHECK(!witness.is_zero()); // zeta is formally not 1

  // numerically the defect vanishes exactly on the real axis
  using NB = Braided<NScalar>;
  using NEl = Element<NScalar>;
  set_numeric_mode({0.5, 0.0});
  NB nw = (NScalar::q_pow(1) * (NScalar::zeta_pow(1) - NScalar::one())) *
          btp(NEl::gen_g(), NEl::gen_gs());
  double mass = 0;
  for (const auto& [kk, c] : nw.t) mass += std::abs(c.z);
  CHECK(mass < 1e-15);
  set_numeric_mode({0.3, 0.4});
  NB nw2 = (NScalar::q_pow(1) * (NScalar::zeta_pow(1) - NScalar::one())) *
           btp(NEl::gen_g(), NEl::gen_gs());
  double mass2 = 0;
  for (const auto& [kk, c] : nw2.t) mass2 += std::abs(c.z);
  CHECK(mass2 > 0.1);
  set_exact_mode(+1);
}
