#include <catch2/catch_amalgamated.hpp>

#include <suq2/scalar.hpp>

#include <complex>
#include <random>

using namespace suq2;
using C = std::complex<double>;

namespace {

Scalar rand_scalar(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), ex(-2, 2);
  auto poly = [&] {
    LPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      int c = coef(rng);
      if (c == 0) c = 1;
      p.add_term(ex(rng), ex(rng), Rat(c));
    }
    return p;
  };
  for (;;) {
    LPoly n = poly(), d = poly();
    if (d.is_zero()) continue;
    Scalar s(std::move(n), std::move(d));
    if (!nonzero || !s.is_zero()) return s;
  }
}

} // namespace

TEST_CASE("generator identities") {
  for (int sg : {+1, -1}) {
    set_exact_mode(sg);
    CHECK(Scalar::q_pow(1) * Scalar::qbar_pow(1) == Scalar::r_pow(2));
    CHECK(Scalar::q_pow(1) / Scalar::qbar_pow(1) == Scalar::zeta_pow(1));
    CHECK(Scalar::q_pow(2) == Scalar::q_pow(1) * Scalar::q_pow(1));
    CHECK(Scalar::q_pow(-1) == Scalar::q_pow(1).inv());
    CHECK(Scalar::v_pow(1) * Scalar::v_pow(-1) == Scalar::one());
    CHECK(Scalar::zeta_pow(1) == Scalar::v_pow(2));
  }
  set_exact_mode(+1);
}

TEST_CASE("fraction reduction") {
  set_exact_mode(+1);
  Scalar lhs = (Scalar::one() - Scalar::r_pow(2)) / (Scalar::one() - Scalar::r_pow(4));
  Scalar rhs = Scalar::one() / (Scalar::one() + Scalar::r_pow(2));
  CHECK(lhs == rhs);

  // cancellation across v
  Scalar a(LPoly::mono(1, 0, 2) + (-LPoly::one()), LPoly::mono(1, 0, 1) + (-LPoly::one()));
  CHECK(a == Scalar::v_pow(1) + Scalar::one());

  // mixed r,v common factor
  Scalar common = Scalar::one() - Scalar::r_pow(2) * Scalar::v_pow(2);
  Scalar b = (common * (Scalar::one() + Scalar::r_pow(1))) / (common * Scalar::from_long(2));
  CHECK(b == (Scalar::one() + Scalar::r_pow(1)) * Scalar::from_ratio(1, 2));

  // pure unit denominators reduce away
  Scalar c(LPoly::mono(1, 2, -1) + (-LPoly::mono(1, 0, -1)), LPoly::mono(1, 0, -2));
  CHECK(c == Scalar::v_pow(1) * (Scalar::r_pow(2) - Scalar::one()));
}

TEST_CASE("conjugation") {
  for (int sg : {+1, -1}) {
    set_exact_mode(sg);
    CHECK(Scalar::v_pow(1).conj() == Scalar::v_pow(-1));
    CHECK(Scalar::q_pow(1).conj() == Scalar::qbar_pow(1));
    CHECK(Scalar::qbar_pow(1).conj() == Scalar::q_pow(1));
    CHECK(Scalar::r_pow(3).conj() == Scalar::r_pow(3));
    Scalar h = Scalar::r_pow(1) / (Scalar::one() + Scalar::r_pow(2));
    CHECK(h.conj() == h);
  }
  set_exact_mode(+1);
  std::mt19937 rng(20240816);
  for (int i = 0; i < 1000; ++i) {
    Scalar x = rand_scalar(rng);
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("field axioms on random elements") {
  set_exact_mode(+1);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar x = rand_scalar(rng), y = rand_scalar(rng, true), z = rand_scalar(rng);
    CHECK((x * y) / y == x);
    CHECK((x + y) - y == x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + Scalar::zero() == x);
    CHECK(x * Scalar::one() == x);
    CHECK(y * y.inv() == Scalar::one());
  }
}

TEST_CASE("numeric evaluation") {
  set_exact_mode(+1);
  C q0(0.3, 0.4);
  CHECK(std::abs(Scalar::r_pow(2).numeric_eval(q0) - C(0.25, 0.0)) < 1e-14);
  CHECK(std::abs(Scalar::q_pow(1).numeric_eval(q0) - q0) < 1e-14);
  CHECK(std::abs(Scalar::qbar_pow(1).numeric_eval(q0) - std::conj(q0)) < 1e-14);
  CHECK(std::abs(Scalar::zeta_pow(1).numeric_eval(q0) - q0 / std::conj(q0)) < 1e-14);
  CHECK(std::abs(Scalar::v_pow(2).numeric_eval(q0) - q0 / std::conj(q0)) < 1e-14);

  // negative real axis needs sigma = -1; v0 must still satisfy sigma r v = q
  C qn(-0.5, 0.0);
  set_exact_mode(-1);
  CHECK(std::abs(Scalar::q_pow(1).numeric_eval(qn) - qn) < 1e-14);
  set_exact_mode(+1);

  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    Scalar x = rand_scalar(rng), y = rand_scalar(rng);
    C xe, ye;
    try {
      xe = x.numeric_eval(q0);
      ye = y.numeric_eval(q0);
    } catch (const std::domain_error&) {
      continue; // random denominator hit the point
    }
    double scale = 1.0 + std::abs(xe) + std::abs(ye);
    CHECK(std::abs((x + y).numeric_eval(q0) - (xe + ye)) < 1e-12 * scale);
    CHECK(std::abs((x * y).numeric_eval(q0) - xe * ye) < 1e-12 * scale * scale);
    CHECK(std::abs(x.conj().numeric_eval(q0) - std::conj(xe)) < 1e-12 * scale);
  }
}

TEST_CASE("rational substitution for r") {
  set_exact_mode(+1);
  Scalar h = (Scalar::one() - Scalar::r_pow(2)) / (Scalar::one() - Scalar::r_pow(4));
  CHECK(h.subst_r(make_rat(1, 2)) == Scalar::from_ratio(4, 5));
  Scalar m = Scalar::q_pow(1) * Scalar::qbar_pow(1);
  CHECK(m.subst_r(make_rat(1, 3)) == Scalar::from_ratio(1, 9));
  CHECK(Scalar::v_pow(3).subst_r(make_rat(1, 2)) == Scalar::v_pow(3));
}

TEST_CASE("degenerate operations throw") {
  set_exact_mode(+1);
  CHECK_THROWS_AS(Scalar::zero().inv(), std::domain_error);
  CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), std::domain_error);
  Scalar pole = Scalar::one() / (Scalar::r_pow(2) - Scalar::from_ratio(1, 4));
  CHECK_THROWS_AS(pole.numeric_eval(C(0.3, 0.4)), std::domain_error);
}

TEST_CASE("numeric mode scalars") {
  set_numeric_mode(C(0.3, 0.4));
  CHECK(session().sigma == +1);
  CHECK(std::abs(NScalar::q_pow(1).z - C(0.3, 0.4)) < 1e-15);
  CHECK(std::abs((NScalar::q_pow(1) * NScalar::qbar_pow(1)).z - C(0.25, 0.0)) < 1e-15);
  CHECK(std::abs(NScalar::v_pow(2).z - NScalar::zeta_pow(1).z) < 1e-15);
  CHECK(NScalar::zero().is_zero());
  CHECK_THROWS_AS(NScalar::zero().inv(), std::domain_error);

  set_numeric_mode(C(0.0, -0.5));
  CHECK(session().sigma == -1); // negative imaginary axis picks the -1 branch
  C v = session().v0();
  CHECK(std::abs(double(session().sigma) * session().r0() * v - session().q0) < 1e-15);
  CHECK(std::abs(v * v - session().zeta0()) < 1e-15);

  CHECK_THROWS_AS(set_numeric_mode(C(1.5, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(set_numeric_mode(C(0.0, 0.0)), std::invalid_argument);
  set_exact_mode(+1);
}
