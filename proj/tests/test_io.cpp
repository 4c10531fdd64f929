#include <catch2/catch_amalgamated.hpp>

#include <suq2/json_io.hpp>
#include <suq2/render.hpp>

#include <random>

using namespace suq2;
using E = Element<Scalar>;
using BE = BElement<Scalar>;

namespace {

Scalar rand_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), qe(-2, 2), ve(-1, 1),
      pick(0, 5);
  int n = num(rng);
  if (n == 0) n = 1;
  Scalar s = Scalar::from_ratio(n, den(rng)) * Scalar::q_pow(qe(rng)) * Scalar::v_pow(ve(rng));
  int p = pick(rng);
  if (p == 0) s = s + Scalar::from_long(num(rng));
  if (p == 1) s = s / (Scalar::one() + Scalar::r_pow(2));
  if (p == 2) s = s * Scalar::r_pow(qe(rng));
  return s;
}

Parsed rand_parsed(std::mt19937& rng, bool with_z) {
  std::uniform_int_distribution<int> ord(1, 3), nt(1, 3), ne(-2, 2), me(0, 2), le(-2, 2);
  Parsed p;
  p.order = ord(rng);
  int terms = nt(rng);
  for (int i = 0; i < terms; ++i) {
    std::vector<BMono> legs;
    for (int j = 0; j < p.order; ++j)
      legs.push_back({ne(rng), me(rng), me(rng), with_z ? le(rng) : 0});
    p.add(legs, rand_scalar(rng));
  }
  if (p.is_zero()) p.add(std::vector<BMono>(p.order), Scalar::one());
  return p;
}

std::size_t thrown_at(const std::string& src) {
  try {
    parse(src);
  } catch (const parse_error& e) {
    return e.pos;
  }
  FAIL("expected a parse error for: " + src);
  return std::string::npos;
}

} // namespace

TEST_CASE("strings reach normal form") {
  set_exact_mode(+1);

  CHECK(as_belement(parse("a g - qb g a")).is_zero());

  auto x = as_belement(parse("g^2 g*"));
  REQUIRE(x.t.size() == 1);
  CHECK((x.t.begin()->first == BMono{0, 2, 1, 0}));
  CHECK(x.t.begin()->second == Scalar::one());

  CHECK(as_belement(parse("1")) == BE::unit());
  CHECK(as_belement(parse("0")).is_zero());
  CHECK(parse("\xce\xb1 \xce\xb3") == parse("a g"));

  // glued star is the adjoint, spaced star multiplies
  CHECK(as_belement(parse("a*")) == BE::gen_as());
  auto sq = as_belement(parse("a * a"));
  REQUIRE(sq.t.size() == 1);
  CHECK((sq.t.begin()->first == BMono{2, 0, 0, 0}));
  CHECK(as_belement(parse("(g)*")) == BE::gen_gs());
  CHECK(parse("(a g)*") == parse("g* a*"));

  CHECK(as_braided(parse("(a (x) a) - q (g* (x) g)")) == delta(E::gen_a()));
}

TEST_CASE("evaluation through strings") {
  set_exact_mode(+1);

  Scalar h = haar(as_element(parse("g g*")));
  CHECK(render(h.subst_r(Rat(1, 2))) == "4/5");
  CHECK(render(h) == "1/(1 + r^2)");

  CHECK(render(antipode(E::gen_g())) == "-qb g");
  set_exact_mode(-1);
  CHECK(render(antipode(E::gen_g())) == "-qb g");
  set_exact_mode(+1);

  CHECK(render(as_belement(parse("q a* g z^-2"))) == "q a* g z^-2");
  CHECK(as_belement(parse("z g")) == as_belement(parse("zeta^-1 g z")));

  auto da = delta(E::gen_a());
  CHECK(as_braided(parse(render(da))) == da);
}

TEST_CASE("powers and inverses") {
  set_exact_mode(+1);

  CHECK(as_belement(parse("a^-2")) == BE::monomial({-2, 0, 0, 0}, Scalar::one()));
  CHECK(as_belement(parse("a*^3")) == BE::monomial({-3, 0, 0, 0}, Scalar::one()));
  CHECK(as_belement(parse("a*^-3")) == BE::monomial({3, 0, 0, 0}, Scalar::one()));
  CHECK(as_belement(parse("z^-1")) == BE::gen_z(-1));
  CHECK(parse("(a g)^2") == parse("a g a g"));
  CHECK(parse("(a g)^0") == parse("1"));

  Scalar s = parse("(1 + r)^-1").scalar_value();
  CHECK(s * (Scalar::one() + Scalar::r_pow(1)) == Scalar::one());
  CHECK(parse("2^3").scalar_value() == Scalar::from_long(8));
  CHECK(parse("8/4").scalar_value() == Scalar::from_long(2));
}

TEST_CASE("parse errors carry offsets") {
  set_exact_mode(+1);

  CHECK_THROWS_AS(parse("g^-1"), parse_error);
  CHECK_THROWS_AS(parse("g*^-2"), parse_error);
  CHECK_THROWS_AS(parse("(z (x) z) * (z (x) z)"), parse_error);
  CHECK_THROWS_AS(parse("(a (x) a) + g"), parse_error);
  CHECK_THROWS_AS(parse("(a"), parse_error);
  CHECK_THROWS_AS(parse("a (x)"), parse_error);
  CHECK_NOTHROW(parse("a^-1 + 1"));
  CHECK_THROWS_AS(parse("1/0"), parse_error);
  CHECK_THROWS_AS(parse("g / g"), parse_error);

  CHECK(thrown_at("foo") == 0);
  CHECK(thrown_at("a + foo") == 4);
  try {
    parse("a + foo");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
  }
}

TEST_CASE("render parse round trips") {
  set_exact_mode(+1);
  std::mt19937 rng(20260816);

  for (int i = 0; i < 500; ++i) {
    Parsed p = rand_parsed(rng, i % 2 == 0);
    std::string s = render(p);
    Parsed back = parse(s);
    CHECK(back == p);
    CHECK(render(parse(s)) == s);
  }

  set_exact_mode(-1);
  for (int i = 0; i < 100; ++i) {
    Parsed p = rand_parsed(rng, true);
    CHECK(parse(render(p)) == p);
  }
  set_exact_mode(+1);
}

TEST_CASE("json round trips") {
  set_exact_mode(+1);
  std::mt19937 rng(7);

  for (int i = 0; i < 200; ++i) {
    Scalar s = rand_scalar(rng);
    CHECK(scalar_from_json(to_json(s)) == s);
    Parsed p = rand_parsed(rng, true);
    CHECK(parsed_from_json(to_json(p)) == p);
    json j = to_json(p);
    CHECK(parsed_from_json(json::parse(j.dump())) == p);
  }

  Scalar big = Scalar::from_rat(Rat(mpz_class("123456789012345678901234567890")) / Rat(7));
  CHECK(scalar_from_json(to_json(big)) == big);

  auto f = Rep<Scalar>::fundamental();
  auto f2 = rep_from_json(to_json(f));
  CHECK(validate_rep(f2).empty());
  CHECK(f2.weights == f.weights);
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) CHECK(f2.u[i][j] == f.u[i][j]);

  BE x = as_belement(parse("a g z^2 - qb g*"));
  CHECK(belement_from_json(to_json(x)) == x);
  E y = as_element(parse("a^-1 g g*"));
  CHECK(element_from_json(to_json(y)) == y);

  CHECK_THROWS_AS(parsed_from_json(json::parse(R"({"order":2,"terms":[{"legs":[[1,0,0,0]],"c":{"num":[[1,0,0]],"den":[[1,0,0]]}}]})")),
                  std::invalid_argument);
}
