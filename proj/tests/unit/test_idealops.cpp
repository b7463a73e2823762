#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/ideal.hpp"
#include "ferrand/rnc.hpp"

#include "../support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ferrand;

TEST_CASE("sums, products and powers", "[idealops]") {
  auto R = Ring::projective(3);
  Ideal a = Ideal::parse(R, {"x0*x2-x1^2", "x3"});
  CHECK(power(a, 2) == Ideal::parse(R, {"(x0*x2-x1^2)^2", "x3*(x0*x2-x1^2)", "x3^2"}));
  CHECK(product(a, Ideal::unit(R)) == a);

  auto ctx = RncContext::make(3, 5);
  Ideal cl(ctx.ring(), ctx.quadrics());
  Ideal il(ctx.ring(), ctx.linears());
  CHECK(sum(cl, il) == ctx.ideal());
  CHECK(ctx.generators().size() == 5);
}

TEST_CASE("elimination", "[idealops]") {
  auto R = Ring::make({"t", "x0", "x1", "x2", "x3"}, Field::rationals(), MonomialOrder::elimination(1, 5));
  Ideal I = Ideal::parse(R, {"t-x3", "t*x2-x0*x1"});
  Ideal e = eliminate(I, {0});
  auto S = e.ring();
  CHECK(e == Ideal::parse(S, {"x2*x3-x0*x1"}));

  auto P = Ring::projective(3);
  CHECK(eliminate(Ideal::parse(P, {"x3"}), {3}).is_zero());
  Ideal c = rnc_ideal(3, 3);
  CHECK(eliminate(c, {}) == c);
}

TEST_CASE("intersections and quotients", "[idealops]") {
  auto R = Ring::projective(3);
  Ideal two = intersect(Ideal::parse(R, {"w", "x*z-y^2"}), Ideal::parse(R, {"w+x", "z^2+x*z-y^2"}));
  CHECK(two.hilbert().polynomial_string() == "4*t+2");
  Ideal c = rnc_ideal(3, 3);
  CHECK(intersect(c, c) == c);
  CHECK(intersect(Ideal::parse(R, {"x0"}), Ideal::parse(R, {"x1"})) == Ideal::parse(R, {"x0*x1"}));
  CHECK(quotient(Ideal::parse(R, {"x0^2"}), Ideal::parse(R, {"x0"})) == Ideal::parse(R, {"x0"}));
  CHECK(quotient(c, Ideal::unit(R)) == c);
}

TEST_CASE("saturation of squared rational normal curve ideals", "[idealops]") {
  Ideal c3 = rnc_ideal(3, 3);
  CHECK(saturate(power(c3, 2)) == power(c3, 2));
  auto ctx = RncContext::make(4, 4);
  Ideal sq = power(ctx.ideal(), 2);
  auto minors = catalecticant_minors(ctx);
  Ideal expected = sum(sq, Ideal(ctx.ring(), minors));
  CHECK(saturate(sq) == expected);
  for (int b = 1; b <= 3; ++b) CHECK(saturate(odd_conic_ideal(b)) == odd_conic_ideal(b));
}

TEST_CASE("Hilbert data", "[idealops]") {
  auto x = double_ideal(MuMap::parse(3, 3, 1, {"t", "u"}));
  CHECK(x.ideal().hilbert().polynomial_string() == "6*t-2");
  CHECK(x.ideal().hilbert().genus() == 3);
  CHECK(rnc_ideal(5, 7).hilbert().polynomial_string() == "5*t+1");
  auto R = Ring::projective(1);
  Ideal zero(R, {});
  for (int d = 0; d <= 6; ++d) CHECK(hilbert_function(zero, d) == d + 1);
}

TEST_CASE("h-vectors", "[idealops]") {
  CHECK(h_vector(double_ideal(ag_mu(AgKind::Canonical, 4)).ideal()) == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(h_vector(double_ideal(ag_mu(AgKind::Elliptic, 3)).ideal()) == std::vector<std::int64_t>{1, 4, 1});
  CHECK(h_vector(rnc_ideal(2, 2)) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("monomial ideal operations agree with lattice computations", "[idealops][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nv(2, 4);
    int n = nv(rng);
    auto R = Ring::projective(n - 1);
    auto a = oracle::random_monomial_ideal(rng, n, 4, 4);
    auto b = oracle::random_monomial_ideal(rng, n, 3, 3);
    Ideal A = oracle::to_ideal(R, a), B = oracle::to_ideal(R, b);
    CHECK(oracle::from_ideal(intersect(A, B)) == oracle::intersect(a, b));
    CHECK(oracle::from_ideal(quotient(A, B)) == oracle::quotient(a, b));
    CHECK(oracle::from_ideal(saturate(A, B)) == oracle::saturate(a, b));
    CHECK(oracle::from_ideal(saturate(A)) == oracle::saturate(a, oracle::maximal(n)));
  }
}

TEST_CASE("saturation is idempotent, larger, with equal Hilbert polynomial", "[idealops][property]") {
  std::mt19937_64 rng(4);
  auto R = Ring::projective(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = oracle::random_homogeneous_ideal(R, rng, 4, 3);
    gens.push_back(oracle::random_form(R, 2, rng) * Poly::parse(R, "x0"));
    Ideal I(R, gens);
    Ideal S = saturate(I);
    CHECK(saturate(S) == S);
    CHECK(S.contains(I));
    CHECK(S.hilbert().polynomial == I.hilbert().polynomial);
    CHECK(is_saturated(S));
  }
}

TEST_CASE("Hilbert function of fixtures equals the dense rank", "[idealops][property]") {
  std::vector<Ideal> fixtures{rnc_ideal(3, 3), rnc_ideal(2, 3), odd_conic_ideal(2), even_conic_ideal(1),
                              double_ideal(MuMap::parse(3, 3, 1, {"t", "u"})).ideal()};
  for (const auto& I : fixtures)
    for (int d = 0; d <= 8; ++d) CHECK(hilbert_function(I, d) == oracle::quotient_dim(I.ring(), I.generators(), d));
}

TEST_CASE("the saturation chain for squared ideals", "[idealops][property]") {
  for (int r = 4; r <= 6; ++r) {
    auto ctx = RncContext::make(r, r);
    Ideal sq = power(ctx.ideal(), 2);
    Ideal d = sum(sq, Ideal(ctx.ring(), catalecticant_minors(ctx)));
    std::vector<Poly> cubes;
    auto P = ctx.ring();
    for (int i = 2; i <= r - 2; ++i)
      for (int j = i; j <= r - 2; ++j)
        for (int k = j; k <= r - 2; ++k)
          cubes.push_back(Poly::variable(P, i) * Poly::variable(P, j) * Poly::variable(P, k));
    Ideal lower = sum(initial_ideal(sq), Ideal(P, cubes));
    CHECK(initial_ideal(d).contains(lower));
  }
}
