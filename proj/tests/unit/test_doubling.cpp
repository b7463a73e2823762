#include "ferrand/cohomology.hpp"
#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/invariants.hpp"
#include "ferrand/resolution.hpp"
#include "ferrand/rnc.hpp"

#include "../support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace ferrand;

TEST_CASE("doubling maps are validated", "[doubling]") {
  CHECK_THROWS_AS(MuMap::parse(2, 2, 1, {"t"}), InputError);
  CHECK_THROWS_AS(MuMap::parse(3, 3, 1, {"t", "t"}), InputError);      // not surjective
  CHECK_THROWS_AS(MuMap::parse(3, 3, 1, {"t^2", "u"}), InputError);    // wrong degree
  CHECK_THROWS_AS(MuMap::parse(3, 3, 1, {"t"}), InputError);           // wrong count
  CHECK_THROWS_AS(MuMap::parse(2, 3, 1, {"t", "1"}), InputError);      // block2 must vanish for a < 2
  CHECK_THROWS_AS(random_mu(2, 3, 1, 1), InputError);
  CHECK_NOTHROW(MuMap::parse(2, 2, 0, {"1"}));
}

TEST_CASE("composition with psi", "[doubling]") {
  auto B = Ring::binary();
  auto p = [&](const char* s) { return Poly::parse(B, s); };
  CHECK(compose_mu_psi(MuMap::parse(3, 3, 1, {"t", "u"})) == std::vector<Poly>{p("t^2"), p("2*t*u"), p("u^2")});
  CHECK(compose_mu_psi(odd_conic_mu(3)) == std::vector<Poly>{p("u^6"), p("t^4")});
  CHECK(compose_mu_psi(MuMap::parse(3, 5, 0, {"1", "1", "0", "0"})) ==
        std::vector<Poly>{p("t"), p("t+u"), p("u"), Poly(B), Poly(B)});
}

TEST_CASE("the twisted cubic doubling", "[doubling]") {
  auto x = double_ideal(MuMap::parse(3, 3, 1, {"t", "u"}));
  auto R = x.ctx().ring();
  std::vector<std::vector<std::string>> n{{"2*y", "2*z", "2*w", "0", "0", "0"},
                                          {"-x", "-y", "-z", "y", "z", "w"},
                                          {"0", "0", "0", "-2*x", "-2*y", "-2*z"}};
  std::vector<Poly> gens = power(x.ctx().ideal(), 2).generators();
  for (std::size_t k = 0; k < 6; ++k) {
    Poly g(R);
    for (std::size_t q = 0; q < 3; ++q) g += x.ctx().quadrics()[q] * Poly::parse(R, n[q][k]);
    gens.push_back(g);
  }
  CHECK(x.ideal() == Ideal(R, gens));
  CHECK(x.ideal().hilbert().genus() == 3);
}

TEST_CASE("double conics from their maps", "[doubling]") {
  auto R = Ring::projective(3);
  CHECK(double_ideal(odd_conic_mu(3)).ideal() ==
        Ideal::parse(R, {"w^2", "w*(x*z-y^2)", "(x*z-y^2)^2", "x^2*(x*z-y^2)-z^3*w"}));
  CHECK(double_ideal(even_conic_mu(1)).ideal() ==
        Ideal::parse(R, {"w^2", "w*(x*z-y^2)", "(x*z-y^2)^2", "x*(x*z-y^2)-y*z*w", "y*(x*z-y^2)-z^2*w"}));
  for (int b = 0; b <= 4; ++b) CHECK(double_ideal(odd_conic_mu(b)).ideal() == odd_conic_ideal(b));
}

TEST_CASE("scalar equivalence", "[doubling]") {
  auto mu = MuMap::parse(3, 3, 1, {"t", "u"});
  CHECK(mu_equivalence_check(mu, MuMap::parse(3, 3, 1, {"3*t", "3*u"})));
  CHECK(mu_equivalence_check(mu, mu));
  auto swapped = MuMap::parse(3, 3, 1, {"u", "t"});
  CHECK_FALSE(mu_equivalence_check(mu, swapped));
  CHECK(double_ideal(mu).ideal() != double_ideal(swapped).ideal());
  CHECK(double_ideal(mu).ideal() == double_ideal(mu.scaled(Scalar(3))).ideal());
}

TEST_CASE("AG fixtures", "[doubling]") {
  auto R = Ring::projective(3);
  CHECK(double_ideal(ag_mu(AgKind::Elliptic, 2)).ideal() == Ideal::parse(R, {"x0*x2-x1^2", "x3^2"}));
  auto e3 = double_ideal(ag_mu(AgKind::Elliptic, 3));
  auto S = e3.ctx().ring();
  Ideal j = Ideal::parse(S, {"x1*x4-x0*x5", "x2*x4-x1*x5", "x3*x4-x2*x5"});
  Ideal il(S, e3.ctx().linears());
  Ideal expected = sum(sum(Ideal(S, e3.ctx().quadrics()), power(il, 2)), j);
  CHECK(e3.ideal() == expected);
  CHECK(is_ag(e3.ideal()).ag);
}

TEST_CASE("the degree cap is honoured", "[doubling]") {
  DoublingOptions opt;
  opt.degree_cap = 2;
  CHECK_THROWS_AS(double_ideal(odd_conic_mu(4), DoublingAlgorithm::DegreewiseKernel, opt), CapExceeded);
  auto mu = odd_conic_mu(1);
  CHECK(effective_degree_cap(mu, {}) == 2 * mu.a() + 2 * mu.r() + 4);
}

TEST_CASE("doublings satisfy the structural invariants", "[doubling][property]") {
  for (int r = 2; r <= 3; ++r)
    for (int n = r; n <= r + 1; ++n)
      for (int a = 0; a <= 4; ++a) {
        if ((r == 2 && n == 2 && a > 0) || (r == 2 && a == 1)) continue;
        auto mu = random_mu(r, n, a, static_cast<std::uint64_t>(100 * r + 10 * n + a));
        auto x = double_ideal(mu);
        const Ideal& ic = x.ctx().ideal();
        Ideal sq = power(ic, 2);
        CHECK(x.ideal().contains(sq));
        CHECK(ic.contains(x.ideal()));
        CHECK(x.ideal().contains(saturate(sq)));
        CHECK(is_saturated(x.ideal()));
        const auto& h = x.ideal().hilbert();
        CHECK(h.polynomial_at(0) == a - r);
        CHECK(h.polynomial_at(1) == r + a);
        CHECK(double_ideal(mu, DoublingAlgorithm::SyzygyLift).ideal() == x.ideal());
        // 0 -> I_X -> I_C -> L -> 0 with C arithmetically Cohen-Macaulay:
        // dim (I_C / I_X)_d = h^0 O_P1(rd - r - 2 + a) - h^1 I_X(d).
        GammaSections sections(x.ideal());
        for (int d = std::max(a, 2); d <= a + 2; ++d) {
          std::int64_t gap = hilbert_function(x.ideal(), d) - hilbert_function(ic, d);
          std::int64_t rao = d == 2 ? rao_from_sections(sections, d) : rao_formula(mu, d).value;
          INFO("r=" << r << " n=" << n << " a=" << a << " d=" << d << " rao=" << rao);
          CHECK(gap == std::max(0, r * d - r - 2 + a + 1) - rao);
          if (rao == 0) CHECK(gap == std::max(0, r * d - r - 2 + a + 1));
        }
      }
}

TEST_CASE("rescaled maps give identical ideals", "[doubling][property]") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> c(1, 9);
  for (int i = 0; i < 10; ++i) {
    auto mu = random_mu(3, 3 + i % 2, 1 + i % 3, static_cast<std::uint64_t>(i + 40));
    Scalar s(c(rng) * (i % 2 ? -1 : 1), c(rng));
    CHECK(double_ideal(mu).ideal() == double_ideal(mu.scaled(s)).ideal());
  }
}

TEST_CASE("the image of a form under mu does not depend on the division order", "[doubling][property]") {
  auto mu = odd_conic_mu(2);
  auto ctx = RncContext::make(2, 3);
  auto R = ctx.ring();
  Poly f = Poly::parse(R, "x*(x*z-y^2)+y*w+z*w");
  auto plain = eval_mu(f * Poly::parse(R, "x"), mu, ctx);
  CHECK(plain == eval_mu(f * Poly::parse(R, "x"), mu, ctx, {1, 0}));
  // linearity
  Poly g = Poly::parse(R, "z^2*w-x*(x*z-y^2)");
  CHECK(eval_mu(f * Poly::parse(R, "z") + g, mu, ctx) == eval_mu(f * Poly::parse(R, "z"), mu, ctx) + eval_mu(g, mu, ctx));
}
