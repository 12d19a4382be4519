#include "carlitz/powersum.hpp"
#include "carlitz/serialize.hpp"
#include "carlitz/zeta.hpp"
#include "doctest.h"

using namespace carlitz;

TEST_SUITE_BEGIN("external-interfaces");

TEST_CASE("field and element wire forms") {
  auto f9 = FieldCtx::make(3, 2);
  Json f = field_json(f9);
  CHECK(f["p"] == 3);
  CHECK(f["e"] == 2);
  CHECK(f["modulus"] == Json::array({1, 0, 1}));

  CHECK(elem_json(f9->element(5)) == Json::array({2, 1}));
  CHECK(f9->element(5).to_string() == "[2,1]");
}

TEST_CASE("polynomial and rational wire forms") {
  auto f3 = FieldCtx::make(3);
  Poly p = Poly::from_ints(f3, {1, 0, 2});
  Json j = poly_json(p);
  CHECK(j["coeffs"] == Json::array({Json::array({1}), Json::array({0}), Json::array({2})}));

  RatFunc r(Poly::from_ints(f3, {0, 2}), Poly::from_ints(f3, {1, 1}));
  Json rj = elem_json(r);
  CHECK(rj["num"] == "2*t");
  CHECK(rj["den"] == "t+1");
}

TEST_CASE("laurent wire form") {
  auto f3 = FieldCtx::make(3);
  LaurentSeries s = laurent_expand(
      RatFunc(Poly::one(f3), Poly::from_ints(f3, {0, -1, 0, 1})), 9);
  Json j = elem_json(s);
  CHECK(j["lead"] == 3);
  CHECK(j["prec"] == 9);
  CHECK(j["coeffs"].size() == 5);  // u^3 .. u^7
  CHECK(j["coeffs"][0] == Json::array({1}));

  Json exact = elem_json(LaurentSeries::of_poly(Poly::t(f3)));
  CHECK(exact["lead"] == -1);
  CHECK(exact["prec"] == "exact");
}

TEST_CASE("linear series and coefficient table wire forms") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);
  auto e = ct.exp_series(2);
  Json sj = series_json(e, "F_3(t)");
  CHECK(sj["schema"] == "carlitz-lab/1");
  CHECK(sj["record"] == "linear-series");
  CHECK(sj["q"] == 3);
  CHECK(sj["kind"] == "truncated");
  CHECK(sj["coeffs"].size() == 3);

  auto tab = h_table(e, 6);
  tab.source = "carlitz-exp";
  Json tj = table_json(tab);
  CHECK(tj["record"] == "coeff-table");
  CHECK(tj["family"] == "h");
  CHECK(tj["N"] == 6);
  // sparse: only nonzero entries appear
  CHECK(tj["values"].contains("0"));
  CHECK(tj["values"].contains("2"));
  CHECK(!tj["values"].contains("1"));
  CHECK(!tj["values"].contains("3"));
}

TEST_CASE("verify report wire form") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);
  auto h = h_table(ct.exp_series(3), 8);
  h.source = "carlitz-exp";
  auto rep = verify_thm1(h, 1, {0, 0, 0, 0});
  Json j = report_json(rep);
  CHECK(j["schema"] == "carlitz-lab/1");
  CHECK(j["record"] == "verify");
  CHECK(j["id"] == "thm1");
  CHECK(j["status"] == "expected-fail");
  CHECK(j["params"]["ks"] == "0,0,0,0");
  REQUIRE(j.contains("witness"));
  CHECK(j["witness"]["lhs"] != j["witness"]["rhs"]);

  // round trip through the serialized text
  Json parsed = Json::parse(j.dump());
  CHECK(parsed == j);
}

TEST_CASE("bernoulli wire form") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);
  Json j = bernoulli_json(ct.bernoulli(8, 8));
  CHECK(j["record"] == "bernoulli");
  CHECK(j["n"] == 8);
  CHECK(j["value"].contains("num"));
  CHECK(j["value"].contains("den"));
  CHECK(j["num_factors"]["complete"] == true);
  CHECK(j["den_factors"]["factors"].size() == 3);  // the monic irreducible quadratics
}

TEST_SUITE_END();
