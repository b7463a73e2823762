#include "ferrand/doubling.hpp"
#include "ferrand/errors.hpp"
#include "ferrand/json_io.hpp"
#include "ferrand/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

using namespace ferrand;

TEST_CASE("ideal documents round trip", "[json]") {
  for (const auto& I : {odd_conic_ideal(3), even_conic_ideal(2), rnc_ideal(4, 5)}) {
    std::string text = ideal_to_json(I);
    Ideal back = ideal_from_json(text);
    CHECK(back == I);
    CHECK(ideal_to_json(back) == text);
  }
  auto R = Ring::projective(2, Field::prime(101));
  Ideal p = Ideal::parse(R, {"x0^2-x1*x2"});
  auto doc = nlohmann::json::parse(ideal_to_json(p));
  CHECK(doc["field"] == "Fp:101");
  CHECK(ideal_from_json(doc.dump()) == p);
}

TEST_CASE("malformed documents", "[json]") {
  CHECK_THROWS_AS(ideal_from_json("{"), InputError);
  CHECK_THROWS_AS(ideal_from_json(R"({"vars":["x"],"field":"QQ","order":"degrevlex","generators":["y"]})"), InputError);
  CHECK_THROWS_AS(mu_from_json(R"({"r":2,"n":2,"a":1,"block1":["t"],"block2":[]})"), InputError);
}

TEST_CASE("doubling map documents round trip", "[json]") {
  auto mu = odd_conic_mu(2);
  auto back = mu_from_json(mu_to_json(mu));
  CHECK(back.entries() == mu.entries());
  CHECK(back.a() == mu.a());
}

TEST_CASE("verification table plumbing", "[verify]") {
  CHECK(criterion_section(1) == 2);
  CHECK(criterion_section(4) == 3);
  CHECK(criterion_section(7) == 4);
  CHECK(criterion_section(10) == 5);
  CHECK_THROWS_AS(criterion_title(0), InputError);
  VerifyOptions opt;
  opt.section = 7;
  CHECK_THROWS_AS(verify(opt), InputError);

  auto rows = verify_criterion(1, {});
  REQUIRE_FALSE(rows.empty());
  for (const auto& r : rows) CHECK(r.pass);
  auto doc = nlohmann::json::parse(rows_to_json(rows));
  CHECK(doc.size() == rows.size());
  CHECK(doc[0]["status"] == "pass");
  CHECK(rows_to_json(rows) == rows_to_json(verify_criterion(1, {})));
}
