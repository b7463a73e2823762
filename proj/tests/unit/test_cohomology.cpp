#include "ferrand/cohomology.hpp"
#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/invariants.hpp"
#include "ferrand/resolution.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ferrand;

TEST_CASE("sections of double conics", "[cohomology]") {
  GammaSections odd(odd_conic_ideal(3));
  CHECK(odd.dim(2) == 12);
  GammaSections even(even_conic_ideal(2));
  CHECK(even.dim(3) == 15);
  for (int b = 1; b <= 4; ++b) {
    GammaSections g(odd_conic_ideal(b));
    for (int d = 2; d <= b + 2; ++d) CHECK(g.dim(d) == 4 * d + 2 * b - 2);
  }
}

TEST_CASE("sections of ACM curves come from the coordinate ring", "[cohomology]") {
  auto x = double_ideal(MuMap::parse(3, 3, 1, {"t", "u"})).ideal();
  GammaSections g(x);
  for (int d = 0; d <= 5; ++d) CHECK(g.dim(d) == hilbert_function(x, d));
}

TEST_CASE("Rao function from sections matches the formula", "[cohomology][property]") {
  std::vector<MuMap> maps{odd_conic_mu(2), odd_conic_mu(3), even_conic_mu(2), MuMap::parse(3, 3, 1, {"t", "u"}),
                          random_mu(3, 4, 3, 5), random_mu(2, 3, 4, 8)};
  for (const auto& mu : maps) {
    auto x = double_ideal(mu);
    GammaSections g(x.ideal());
    auto window = rao_window(mu);
    for (int j = window.first; j <= window.second; ++j) {
      if (j == 2) continue;
      CHECK(rao_from_sections(g, j) == rao_formula(mu, j).value);
    }
  }
}

TEST_CASE("normal sheaf of double conics", "[cohomology]") {
  const std::vector<std::int64_t> odd{17, 16, 16, 19, 23};
  for (int b = 0; b <= 4; ++b) CHECK(h0_normal_sheaf(odd_conic_ideal(b)).h0 == odd[static_cast<std::size_t>(b)]);
  const std::vector<std::int64_t> even{16, 17, 21};
  for (int b = 1; b <= 3; ++b) CHECK(h0_normal_sheaf(even_conic_ideal(b)).h0 == even[static_cast<std::size_t>(b - 1)]);
}

TEST_CASE("degenerate conic in P^4", "[cohomology]") {
  auto rep = tangent_vs_family(double_ideal(MuMap::parse(2, 4, 5, {"u^5", "t^3", "0"})));
  CHECK(rep.h0_normal == 24);
  CHECK(rep.smooth_point_evidence);
  auto b4 = tangent_vs_family(double_ideal(odd_conic_mu(4)));
  CHECK(b4.h0_normal == 23);
  CHECK(b4.h0_normal == b4.family_dimension);
  CHECK(tangent_vs_family(double_ideal(odd_conic_mu(1))).h0_normal == 16);
}

TEST_CASE("normal sheaf does not depend on the presentation", "[cohomology][property]") {
  std::vector<Ideal> fixtures{odd_conic_ideal(1), odd_conic_ideal(2), even_conic_ideal(1),
                              double_ideal(MuMap::parse(3, 3, 1, {"t", "u"})).ideal(),
                              double_ideal(ag_mu(AgKind::Elliptic, 2)).ideal()};
  for (const auto& I : fixtures) {
    auto gens = minimal_generators(I);
    // A redundant generator: a multiple of the first one.
    auto R = I.ring();
    gens.push_back(gens.front() * Poly::variable(R, 0));
    std::vector<std::vector<Poly>> row(1);
    for (const auto& g : gens) row[0].push_back(g);
    std::vector<std::vector<Poly>> cols;
    for (const auto& g : gens) cols.push_back({g});
    auto rel = syzygies(ModuleMap::from_columns(R, GradedFreeModule({0}), cols));
    CHECK(h0_normal_sheaf(I, gens, rel).h0 == h0_normal_sheaf(I).h0);
  }
}

TEST_CASE("the section xi of the odd double conic", "[cohomology][property]") {
  auto R = Ring::projective(3);
  for (int b = 2; b <= 5; ++b) {
    GammaSections g(odd_conic_ideal(b));
    auto xb = Poly::parse(R, "x").pow(b - 1), zb = Poly::parse(R, "z").pow(b);
    CHECK(section_with_products(g, 2 - b, {{xb, Poly::parse(R, "w")}, {zb, Poly::parse(R, "x*z-y^2")}}));
    // x^(b-1) s = w and z^b s = -q would force 2 x^(b-1) q = 0 on X.
    CHECK_FALSE(section_with_products(g, 2 - b, {{xb, Poly::parse(R, "w")}, {zb, Poly::parse(R, "y^2-x*z")}}));
    CHECK_THROWS_AS(section_with_products(g, 2 - b, {{xb, Poly::parse(R, "x*z-y^2")}}), InputError);
  }
}

TEST_CASE("section caps", "[cohomology]") {
  GammaOptions opt;
  opt.t_cap = 0;
  CHECK_THROWS_AS(GammaSections(odd_conic_ideal(4), opt).dim(2), CapExceeded);
}
