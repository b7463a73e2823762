#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/resolution.hpp"
#include "ferrand/rnc.hpp"

#include "../support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace ferrand;

namespace {

std::vector<std::vector<int>> twists(const FreeResolution& res) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= res.length(); ++i) {
    auto t = res.module(i).twists();
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

ModuleMap row_map(const RingPtr& ring, const std::vector<Poly>& row) {
  std::vector<std::vector<Poly>> cols;
  for (const auto& f : row) cols.push_back({f});
  return ModuleMap::from_columns(ring, GradedFreeModule({0}), cols);
}

// Hilbert series numerator of R/I from the Betti numbers, compared with
// (1-t)^N * sum_d dim (R/I)_d t^d computed by dense linear algebra.
bool hilbert_series_identity(const FreeResolution& res, const Ideal& I) {
  const int N = I.ring()->nvars();
  std::map<int, std::int64_t> betti_num{{0, 1}};
  int top = 0;
  for (int i = 1; i <= res.length(); ++i)
    for (int t : res.module(i).twists()) {
      betti_num[t] += (i % 2 ? -1 : 1);
      top = std::max(top, t);
    }
  std::vector<std::int64_t> h;
  for (int d = 0; d <= top + 1; ++d) h.push_back(oracle::quotient_dim(I.ring(), I.generators(), d));
  for (int j = 0; j <= top + 1; ++j) {
    std::int64_t c = 0;
    for (int k = 0; k <= std::min(j, N); ++k) c += (k % 2 ? -1 : 1) * binomial(N, k) * h[static_cast<std::size_t>(j - k)];
    std::int64_t b = betti_num.count(j) ? betti_num[j] : 0;
    if (c != b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("syzygies of small maps", "[resolution]") {
  auto R = Ring::projective(3);
  auto k = syzygies(row_map(R, {Poly::parse(R, "x0"), Poly::parse(R, "x1"), Poly::parse(R, "x2")}));
  CHECK(k.cols() == 3);
  for (int j = 0; j < 3; ++j) CHECK(k.source().twist(j) == 2);

  auto m = row_map(R, {Poly::parse(R, "x*z-y^2"), Poly::parse(R, "-w")});
  auto s = syzygies(m);
  CHECK(s.cols() == 1);
  CHECK(m.compose(s).is_zero());

  auto gens = odd_conic_ideal(3).generators();
  auto s4 = syzygies(row_map(R, gens));
  CHECK(row_map(R, gens).compose(s4).is_zero());
  auto t = s4.source().twists();
  std::sort(t.begin(), t.end());
  CHECK(t == std::vector<int>{4, 5, 5, 6});
}

TEST_CASE("minimal resolutions of reference ideals", "[resolution]") {
  CHECK(twists(free_resolution(odd_conic_ideal(3))) ==
        std::vector<std::vector<int>>{{2, 3, 4, 4}, {4, 5, 5, 6}, {7}});
  CHECK(twists(free_resolution(even_conic_ideal(2))) ==
        std::vector<std::vector<int>>{{2, 3, 4, 4, 4}, {4, 5, 5, 5, 5, 5}, {6, 6}});
  auto R = Ring::projective(3);
  auto koszul = free_resolution(Ideal::maximal(R));
  std::vector<int> ranks;
  for (int i = 1; i <= koszul.length(); ++i) ranks.push_back(koszul.module(i).rank());
  CHECK(ranks == std::vector<int>{4, 6, 4, 1});
  CHECK(twists(free_resolution(rnc_ideal(3, 3))) == std::vector<std::vector<int>>{{2, 2, 2}, {3, 3}});
  CHECK(free_resolution(rnc_ideal(3, 4)).module(1).rank() == 4);
  CHECK(twists(free_resolution(rnc_ideal(2, 2))) == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("Betti checks for rational normal curves", "[resolution]") {
  for (int r = 2; r <= 4; ++r)
    for (int n = r; n <= r + 2; ++n) {
      auto rep = betti_check_rnc(r, n);
      INFO(rep.details);
      CHECK(rep.ok);
    }
  // F_2 for r = 3, n = 4: R(-3)^2 from the cubic, R(-3)^3 from the linear form times the quadrics.
  CHECK(expected_rnc_module(3, 4, 2).multiplicities() == std::map<int, int>{{3, 5}});
  CHECK(expected_rnc_module(3, 4, 3).multiplicities() == std::map<int, int>{{4, 2}});
}

TEST_CASE("ACM and AG tests", "[resolution]") {
  auto R = Ring::projective(3);
  auto ag = is_ag(Ideal::parse(R, {"x0*x2-x1^2", "x3^2"}));
  CHECK(ag.ag);
  CHECK(is_acm(double_ideal(MuMap::parse(3, 3, 1, {"t", "u"})).ideal()));
  CHECK_FALSE(is_ag(odd_conic_ideal(3)).ag);
}

TEST_CASE("resolutions are complexes with the right Hilbert series", "[resolution][property]") {
  std::mt19937_64 rng(8);
  auto R = Ring::projective(3);
  std::vector<Ideal> ideals{odd_conic_ideal(2), even_conic_ideal(2), rnc_ideal(3, 3)};
  for (int i = 0; i < 12; ++i) ideals.emplace_back(R, oracle::random_homogeneous_ideal(R, rng, 4, 3));
  for (const auto& I : ideals) {
    auto res = free_resolution(I);
    std::vector<std::vector<Poly>> d0{I.gb().elements()};
    for (std::size_t k = 0; k + 1 < res.maps().size(); ++k)
      CHECK(oracle::product_vanishes(res.maps()[k].entries(), res.maps()[k + 1].entries(), R));
    CHECK(hilbert_series_identity(res, I));
    CHECK(certify(res, I).ok());
  }
}

TEST_CASE("Betti numbers do not depend on the generator order", "[resolution][property]") {
  std::mt19937_64 rng(12);
  for (auto I : {even_conic_ideal(2), odd_conic_ideal(4), rnc_ideal(3, 4)}) {
    auto betti = free_resolution(I).betti();
    auto gens = I.generators();
    for (int k = 0; k < 5; ++k) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(free_resolution(Ideal(I.ring(), gens)).betti() == betti);
    }
  }
}

TEST_CASE("the last map of the odd double conic is a regular sequence", "[resolution][property]") {
  // Koszul homology H_1 vanishes in low degrees: the first syzygies of the
  // entries are exactly the Koszul relations, so R/(entries) has the
  // complete intersection Hilbert function.
  auto R = Ring::projective(3);
  for (int b = 2; b <= 5; ++b) {
    auto q = Poly::parse(R, "x*z-y^2");
    std::vector<Poly> entries{-Poly::parse(R, "z").pow(b), Poly::parse(R, "x").pow(b - 1), q, -Poly::parse(R, "w")};
    auto res = free_resolution(Ideal(R, entries));
    CHECK(res.length() == 4);
    CHECK(res.module(2).rank() == 6);
  }
}

TEST_CASE("Rao module of the odd double conic", "[resolution][property]") {
  auto R = Ring::projective(3);
  for (int b = 2; b <= 5; ++b) {
    auto rao = rao_module(odd_conic_ideal(b));
    Ideal m = Ideal::parse(R, {"w", "x*z-y^2", "x^" + std::to_string(b - 1), "z^" + std::to_string(b)});
    for (int j = -b - 2; j <= b + 3; ++j) {
      std::int64_t v = rao.count(j) ? rao.at(j) : 0;
      CHECK(v == hilbert_function(m, j + b - 2));
    }
  }
  CHECK(rao_module(rnc_ideal(3, 3)).empty());
}
