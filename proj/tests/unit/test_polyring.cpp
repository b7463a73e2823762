#include "ferrand/binary_form.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/poly.hpp"
#include "ferrand/ring.hpp"

#include "../support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ferrand;

namespace {

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Scalar q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("polynomial arithmetic on small examples", "[polyring]") {
  auto R = Ring::projective(3);
  CHECK(Poly::parse(R, "x0*x2-x1^2") + Poly::parse(R, "x1^2") == Poly::parse(R, "x0*x2"));
  CHECK(Poly::parse(R, "x0+x1") * Poly::parse(R, "x0-x1") == Poly::parse(R, "x0^2-x1^2"));
  Poly f = Poly::parse(R, "3*x0^2*x3-x1*x2*x3+1/2*x2^3");
  CHECK((f * Poly(R)).is_zero());
  CHECK(Poly::parse(R, "(x0+x1)^2") == Poly::parse(R, "x0^2+2*x0*x1+x1^2"));
  CHECK(Poly::parse(R, "x*z-y^2") == Poly::parse(R, "x0*x2-x1^2"));
  CHECK(Poly::parse(R, f.to_string()) == f);
  CHECK(f.homogeneous_degree() == 3);
  CHECK_FALSE(Poly::parse(R, "x0+x1^2").is_homogeneous());
  CHECK_THROWS_AS(Poly::parse(R, "x0+"), InputError);
  CHECK_THROWS_AS(Poly::parse(R, "q7"), InputError);
}

TEST_CASE("ring axioms hold on random polynomials", "[polyring][property]") {
  auto R = Ring::projective(3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Poly f = oracle::random_form(R, 2, rng, 4), g = oracle::random_form(R, 1, rng, 3), h = oracle::random_form(R, 2, rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(f + g == g + f);
    for (int k = 0; k < 5; ++k) {
      std::vector<Scalar> pt;
      for (int i = 0; i < 4; ++i) pt.push_back(random_rational(rng));
      CHECK((f * g + h).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt) + h.evaluate(pt));
    }
  }
}

TEST_CASE("prime field arithmetic stays reduced", "[polyring]") {
  Field f7 = Field::prime(7);
  CHECK(f7.add(Scalar(5), Scalar(4)) == 2);
  CHECK(f7.mul(Scalar(3), f7.inverse(Scalar(3))) == 1);
  CHECK(Field::from_tag("Fp:7") == f7);
  CHECK(Field::from_tag("QQ").is_rational());
  CHECK_THROWS_AS(Field::from_tag("Fp:8"), InputError);
  auto R = Ring::projective(2, f7);
  CHECK(Poly::parse(R, "(x0+x1)^7") == Poly::parse(R, "x0^7+x1^7"));
}

TEST_CASE("monomial orders", "[polyring]") {
  auto drl = MonomialOrder::degrevlex();
  CHECK(drl.greater(Monomial(4, {0, 1, 1, 0}), Monomial(4, {1, 0, 0, 1})));
  Monomial u(2, {0, 1});
  CHECK(drl.compare(u, u) == 0);
  CHECK(MonomialOrder::lex().greater(Monomial(2, {1, 0}), Monomial(2, {0, 2})));
  CHECK(MonomialOrder::from_name("block:4,1") == MonomialOrder::block({4, 1}));
  CHECK_THROWS_AS(MonomialOrder::from_name("grevlex?"), InputError);
}

TEST_CASE("lex matches its definition on all small monomial pairs", "[polyring][property]") {
  auto lex = MonomialOrder::lex();
  std::vector<oracle::Exps> all;
  for (int d = 0; d <= 3; ++d)
    for (auto& e : oracle::exponent_vectors(2, d)) all.push_back(e);
  for (const auto& a : all)
    for (const auto& b : all) {
      int expected = a == b ? 0 : (a < b ? -1 : 1);  // lexicographic on exponent vectors
      CHECK(lex.compare(Monomial::from_exponents(a), Monomial::from_exponents(b)) == expected);
    }
}

TEST_CASE("order axioms on random monomial pairs", "[polyring][property]") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ex(0, 4);
  std::vector<MonomialOrder> orders{MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::block({2, 2})};
  auto random_mono = [&] {
    return Monomial(4, {ex(rng), ex(rng), ex(rng), ex(rng)});
  };
  for (const auto& ord : orders)
    for (int i = 0; i < 10000; ++i) {
      Monomial a = random_mono(), b = random_mono(), c = random_mono();
      int ab = ord.compare(a, b);
      REQUIRE(ab == -ord.compare(b, a));
      REQUIRE(ord.compare(a * c, b * c) == ab);
      if (ab == 0) REQUIRE(a == b);
    }
}

TEST_CASE("initial terms of the rational normal curve quadrics", "[polyring][property]") {
  for (int r = 2; r <= 8; ++r) {
    auto R = Ring::projective(r);
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        Poly f = Poly::variable(R, i - 1) * Poly::variable(R, j) - Poly::variable(R, i) * Poly::variable(R, j - 1);
        if (f.is_zero()) continue;
        Monomial expected = Monomial::variable(r + 1, i) * Monomial::variable(r + 1, j - 1);
        CHECK(f.leading_monomial() == expected);
      }
  }
}

TEST_CASE("binary form gcd", "[polyring]") {
  auto B = Ring::binary();
  auto p = [&](const char* s) { return Poly::parse(B, s); };
  CHECK(gcd_binary({p("t^2"), p("2*t*u"), p("u^2")}) == p("1"));
  CHECK(gcd_binary({p("t*u"), p("t^2")}) == p("t"));
  CHECK(gcd_binary({p("u^5"), p("t^3"), Poly(B)}) == p("1"));
  CHECK(gcd_binary({p("t^2*u-u^3"), p("t^2+t*u")}) == p("t+u"));
  CHECK_THROWS_AS(gcd_binary({Poly(B)}), InputError);
}

TEST_CASE("variable limit is enforced", "[polyring]") {
  std::vector<std::string> names;
  for (int i = 0; i <= kMaxVars; ++i) names.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(Ring::make(names), InputError);
}
