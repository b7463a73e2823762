#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/groebner.hpp"
#include "ferrand/ideal.hpp"
#include "ferrand/rnc.hpp"

#include "../support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ferrand;

TEST_CASE("normal forms", "[groebner]") {
  auto R = Ring::projective(3);
  Ideal sq = power(rnc_ideal(2, 3), 2);
  CHECK(sq.gb().reduce(Poly::parse(R, "w^2")).is_zero());
  Ideal w(R, {Poly::parse(R, "w")});
  CHECK(w.gb().reduce(Poly::parse(R, "x*z-y^2")) == Poly::parse(R, "x*z-y^2"));

  // Membership of y^4 in the odd double conic with b = 2, decided by
  // linear algebra on degree-4 pieces.
  Ideal x = odd_conic_ideal(2);
  Poly y4 = Poly::parse(R, "y^4");
  auto gens = x.generators();
  auto with = gens;
  with.push_back(y4);
  bool member = oracle::ideal_piece_dim(R, gens, 4) == oracle::ideal_piece_dim(R, with, 4);
  CHECK(x.contains(y4) == member);
}

TEST_CASE("reference Groebner bases", "[groebner]") {
  auto R = Ring::projective(3);
  // b = 1 is the complete intersection (w^2, q - z w).
  CHECK(odd_conic_ideal(1).gb().size() == 2);
  for (int b = 2; b <= 5; ++b) {
    Ideal x = odd_conic_ideal(b);
    CHECK(is_groebner_basis(x.generators()));
    CHECK(x.gb().size() == 4);
  }
  auto gb = buchberger({Poly::parse(R, "x0")});
  REQUIRE(gb.size() == 1);
  CHECK(gb.elements()[0] == Poly::parse(R, "x0"));
  for (int r = 3; r <= 6; ++r) {
    std::vector<Poly> sq;
    auto P = Ring::projective(r);
    for (int i = 1; i <= r - 1; ++i)
      for (int j = i; j <= r - 1; ++j) sq.push_back(Poly::variable(P, i) * Poly::variable(P, j));
    CHECK(initial_ideal(rnc_ideal(r, r)) == Ideal(P, sq));
  }
  CHECK(initial_ideal(Ideal::parse(R, {"x0^2"})) == Ideal::parse(R, {"x0^2"}));
}

TEST_CASE("reduced bases are idempotent and independent of generator order", "[groebner][property]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> nv(2, 4);
    auto R = Ring::projective(nv(rng) - 1);
    auto gens = oracle::random_homogeneous_ideal(R, rng);
    auto gb = buchberger(gens);
    CHECK(buchberger(gb.elements()) == gb);
    CHECK(is_groebner_basis(gb.elements()));
    for (const auto& g : gens) CHECK(gb.contains(g));
    for (int k = 0; k < 3; ++k) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(buchberger(gens) == gb);
    }
  }
}

TEST_CASE("Hilbert function from the initial ideal equals the dense rank", "[groebner][property]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    auto R = Ring::projective(3);
    auto gens = oracle::random_homogeneous_ideal(R, rng, 3, 3);
    Ideal I(R, gens);
    for (int d = 0; d <= 8; ++d) CHECK(hilbert_function(I, d) == oracle::quotient_dim(R, gens, d));
  }
}

TEST_CASE("inclusion plus reverse initial inclusion decides equality", "[groebner][property]") {
  std::mt19937_64 rng(31);
  auto R = Ring::projective(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto gj = oracle::random_homogeneous_ideal(R, rng, 3, 2);
    Ideal J(R, gj);
    // I is generated by random combinations of J's generators and sometimes all of them.
    std::vector<Poly> gi;
    for (const auto& g : gj) gi.push_back(g * oracle::random_form(R, trial % 2, rng, 1));
    if (trial % 3 == 0) gi = gj;
    Ideal I(R, gi);
    bool contained = true;
    for (const auto& g : gi) contained = contained && J.contains(g);
    REQUIRE(contained);
    bool lemma = initial_ideal(I).contains(initial_ideal(J));
    CHECK(lemma == (I == J));
  }
}

TEST_CASE("truncated bases", "[groebner]") {
  auto R = Ring::projective(3);
  auto gens = odd_conic_ideal(3).generators();
  BuchbergerOptions opt;
  opt.degree_limit = 2;
  auto gb = buchberger(gens, opt);
  CHECK(gb.degree_limit() == 2);
  for (const auto& g : gb.elements()) CHECK(g.degree() <= 2);
}
