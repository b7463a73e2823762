#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/families.hpp"
#include "ferrand/invariants.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ferrand;

TEST_CASE("special fibers are the double conics", "[families]") {
  auto R = Ring::projective(3);
  CHECK(fiber(build_family(FamilyKind::GenusMinusOne), 0) == odd_conic_ideal(2));
  CHECK(fiber(build_family(FamilyKind::GenusZero), 0) == even_conic_ideal(1));
  CHECK(fiber(build_family(FamilyKind::GenusOne), 0) == Ideal::parse(R, {"w^2", "x*z-y^2-z*w"}));
  CHECK(fiber(build_family(FamilyKind::GenusOne), 0) == double_ideal(odd_conic_mu(1)).ideal());
  Ideal quartic = fiber(build_family(FamilyKind::GenusThree), 0);
  CHECK(quartic == Ideal::parse(R, {"w", "(x*z-y^2)^2"}));
  auto d2 = second_difference(quartic, 8);
  while (!d2.empty() && d2.back() == 0) d2.pop_back();
  CHECK(std::equal(d2.begin(), d2.end(), d2.rbegin()));
}

TEST_CASE("general fibers", "[families]") {
  auto R = Ring::projective(3);
  Ideal two = fiber(build_family(FamilyKind::GenusMinusOne), 1);
  CHECK(two == intersect(Ideal::parse(R, {"w", "x*z-y^2"}), Ideal::parse(R, {"w+x", "z^2+x*z-y^2"})));
  CHECK(two.hilbert().polynomial_string() == "4*t+2");
  for (int c : {1, 3}) CHECK(fiber(build_family(FamilyKind::GenusZero), c).hilbert().polynomial_string() == "4*t+1");
}

TEST_CASE("Hilbert polynomials are constant along the families", "[families][property]") {
  struct Case {
    FamilyKind kind;
    std::string poly;
    std::vector<Scalar> samples;
  };
  std::vector<Case> cases{{FamilyKind::GenusMinusOne, "4*t+2", {0, 1, 2, -1}},
                          {FamilyKind::GenusZero, "4*t+1", {0, 1, 3, -2}},
                          {FamilyKind::GenusOne, "4*t", {0, 1, 2, Scalar(1, 2)}},
                          {FamilyKind::GenusThree, "4*t-2", {0, 1, 2, -1}},
                          {FamilyKind::Constant, "2*t+1", {0, 1, 2, -1}}};
  for (const auto& c : cases) {
    auto ev = flatness_evidence(build_family(c.kind), c.samples);
    CHECK(ev.constant_hilbert_polynomial);
    for (const auto& row : ev.fibers) CHECK(row.hilbert_polynomial == c.poly);
  }
}

TEST_CASE("family names", "[families]") {
  for (auto k : {FamilyKind::GenusMinusOne, FamilyKind::GenusZero, FamilyKind::GenusOne, FamilyKind::GenusThree,
                 FamilyKind::Constant})
    CHECK(family_kind_from_name(family_name(k)) == k);
  CHECK_THROWS_AS(family_kind_from_name("g7"), InputError);
}
