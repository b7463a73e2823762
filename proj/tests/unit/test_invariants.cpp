#include "ferrand/cohomology.hpp"
#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/invariants.hpp"
#include "ferrand/resolution.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

using namespace ferrand;

namespace {

// dim (K[t,u] / <forms>)_d by counting: the span of all degree-d multiples.
std::int64_t binary_quotient_by_span(const std::vector<BinaryForm>& forms, int d) {
  if (d < 0) return 0;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    int e = d - f.degree();
    for (int k = 0; k <= e; ++k) {
      std::vector<Scalar> row(static_cast<std::size_t>(d + 1));
      for (const auto& t : f.terms()) row[static_cast<std::size_t>(t.mono[1] + k)] = t.coeff;
      rows.push_back(row);
    }
  }
  // rank
  int rank = 0;
  for (int c = 0; c <= d && rank < static_cast<int>(rows.size()); ++c) {
    auto piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(c)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      Scalar f = rows[r][static_cast<std::size_t>(c)] / rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      for (int k = c; k <= d; ++k)
        rows[r][static_cast<std::size_t>(k)] -= f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(k)];
    }
    ++rank;
  }
  return d + 1 - rank;
}

}  // namespace

TEST_CASE("Rao formula values", "[invariants]") {
  auto ex = MuMap::parse(3, 3, 1, {"t", "u"});
  CHECK(rao_formula(ex, 1).value == 0);
  for (int j = -3; j <= 6; ++j)
    if (j != 2) CHECK(rao_formula(ex, j).value == 0);
  CHECK(rao_formula(ex, 2).bound);

  auto b2 = odd_conic_mu(2);
  CHECK(rao_formula(b2, 0).value == 1);
  CHECK(rao_formula(b2, 1).value == 2);

  auto B = Ring::binary();
  CHECK(binary_quotient_dim({Poly::parse(B, "1")}, 5) == 0);
  CHECK(binary_quotient_dim({Poly::parse(B, "u^4"), Poly::parse(B, "t^2")}, 3) == 2);
}

TEST_CASE("binary quotient dimensions agree with a span count", "[invariants][property]") {
  auto B = Ring::binary();
  std::vector<std::vector<BinaryForm>> cases{{Poly::parse(B, "u^4"), Poly::parse(B, "t^2")},
                                             {Poly::parse(B, "t^3+u^3"), Poly::parse(B, "t*u^2")},
                                             {Poly::parse(B, "t^2-u^2"), Poly::parse(B, "t^2+t*u")}};
  for (const auto& forms : cases)
    for (int d = 0; d <= 9; ++d) CHECK(binary_quotient_dim(forms, d) == binary_quotient_by_span(forms, d));
}

TEST_CASE("Rao functions of the even double conic", "[invariants]") {
  auto x = double_ideal(even_conic_mu(2));
  auto p = rao_profile(x);
  std::map<int, std::int64_t> expected{{-1, 0}, {0, 2}, {1, 3}, {2, 2}, {3, 0}};
  for (auto [j, v] : expected) CHECK(p.values.at(j) == v);
  CHECK(p.formula_agrees());
  CHECK(p.source.at(2) == RaoSource::Direct);
}

TEST_CASE("genus and triples", "[invariants]") {
  CHECK(genus(double_ideal(MuMap::parse(3, 3, 1, {"t", "u"}))) == 3);
  auto t = triple(double_ideal(ag_mu(AgKind::Elliptic, 3)));
  CHECK(t.degree == 6);
  CHECK(t.genus == 1);
  CHECK(t.n == 5);
  CHECK(t.ag_admissible);
  auto c = classify_triple(2, -4, 3);
  CHECK(c.genus == -4);
  CHECK_FALSE(c.ag_admissible);
  CHECK(genus(double_ideal(random_mu(2, 3, 7, 3))) == -4);
}

TEST_CASE("family dimensions", "[invariants]") {
  for (int g = -6; g <= 3; ++g) CHECK(family_dimension(2, g, 3) == 13 - 2 * g);
  CHECK(family_dimension(2, -1, 3) == 15);
  // (n+1)(2r+1-g) - 7 + 2g evaluated by hand: 4 * 4 - 7 + 6.
  CHECK(family_dimension(3, 3, 3) == 15);
  for (int n = 3; n <= 6; ++n)
    for (int g = -4; g <= -2; ++g) CHECK(family_dimension(2, g, n) <= (n - 1) * (5 - g) + 3);
  CHECK(rnc_family_dimension(3, 3) == 12);
}

TEST_CASE("second differences of the Hilbert function", "[invariants][property]") {
  std::vector<DoubleCurve> curves{double_ideal(ag_mu(AgKind::Canonical, 3)), double_ideal(ag_mu(AgKind::Elliptic, 3)),
                                  double_ideal(MuMap::parse(3, 3, 1, {"t", "u"})),
                                  double_ideal(random_mu(3, 4, 2, 9))};
  for (const auto& x : curves) {
    const int r = x.mu().r();
    auto hv = h_vector(x.ideal());
    std::int64_t total = 0;
    for (auto v : hv) total += v;
    CHECK(total == 2 * r);
    bool degenerate = hilbert_function(x.ideal(), 1) < x.mu().n() + 1;
    if (!degenerate) CHECK(hv.at(1) == x.mu().n() - 1);
    auto ag = is_ag(x.ideal());
    if (ag.acm) CHECK(ag.ag == std::equal(hv.begin(), hv.end(), hv.rbegin()));
  }
}

TEST_CASE("analyze reports", "[invariants]") {
  auto rep = analyze(double_ideal(ag_mu(AgKind::Elliptic, 3)));
  auto doc = nlohmann::json::parse(rep.to_json());
  CHECK(doc["ag"] == true);
  CHECK(doc["triple"] == nlohmann::json::array({6, 1, 5}));
  CHECK(doc.contains("rao"));
  auto ex = analyze(double_ideal(MuMap::parse(3, 3, 1, {"t", "u"})));
  CHECK(ex.acm);
  CHECK_FALSE(ex.ag);
  CHECK(ex.family_dimension == 15);
}
