#include <doctest.h>

#include <string>

#include "dmod/decomp.hpp"
#include "dmod/errors.hpp"
#include "dmod/io.hpp"
#include "dmod/random.hpp"

using dmod::Scalar;

TEST_CASE("reading an arrangement") {
  const auto arr = dmod::io::parse_arrangement(
      R"({"forms": [["1","0"],["0","1"],["1","1"]], "beta": ["1/2","1/3","1/5"]})");
  REQUIRE(arr.size() == 3);
  CHECK(arr.forms[2] == dmod::LinearForm(1, 1));
  CHECK(arr.beta[1] == Scalar::fraction(1, 3));

  const auto complex = dmod::io::parse_arrangement(R"({"beta": ["1/2+2/3i"], "forms": [["1/2i","-3"]]})");
  CHECK(complex.beta[0] == Scalar(dmod::Rational(1, 2), dmod::Rational(2, 3)));
  CHECK(complex.forms[0].a() == Scalar(dmod::Rational(0), dmod::Rational(1, 2)));
}

TEST_CASE("strict parsing") {
  using dmod::ParseError;
  const char* bad[] = {
      R"({"forms": [["1","0"]], "beta": ["1//2"]})",
      R"({"forms": [[1,0]], "beta": ["0"]})",
      R"({"forms": [["1","0"]], "beta": ["0"], "name": "x"})",
      R"({"forms": [["1","0","2"]], "beta": ["0"]})",
      R"({"forms": [["0","0"]], "beta": ["0"]})",
      R"({"forms": [["1","0"]]})",
      R"({"forms": {"a": 1}, "beta": []})",
      R"([1, 2])",
      R"({"forms": [["1","0"]], "beta": ["0"])",
      "",
  };
  for (const char* text : bad) CHECK_THROWS_AS(dmod::io::parse_arrangement(text), ParseError);
  CHECK_THROWS_AS(dmod::io::read_arrangement("/nonexistent/arrangement.json"), ParseError);
}

TEST_CASE("parsing does not validate") {
  const auto dup = dmod::io::parse_arrangement(R"({"forms": [["1","0"],["2","0"]], "beta": ["0","0"]})");
  CHECK_THROWS_AS(dmod::validate(dup), dmod::DuplicateLine);
  const auto mismatch = dmod::io::parse_arrangement(R"({"forms": [["1","0"],["0","1"]], "beta": ["0"]})");
  CHECK_THROWS_AS(dmod::validate(mismatch), dmod::LengthMismatch);
}

TEST_CASE("arrangement round trip") {
  dmod::Rng rng(91);
  for (int n = 0; n < 50; ++n) {
    dmod::Arrangement arr;
    const std::size_t m = 1 + rng.below(5);
    for (std::size_t i = 0; i < m; ++i) {
      Scalar a = rng.gaussian(9, 5), b = rng.gaussian(9, 5);
      if (a.is_zero() && b.is_zero()) a = 1;
      arr.forms.emplace_back(a, b);
      arr.beta.push_back(rng.gaussian(9, 7));
    }
    const std::string text = dmod::io::arrangement_to_json(arr).dump();
    const auto back = dmod::io::parse_arrangement(text);
    CHECK(back.forms == arr.forms);
    CHECK(back.beta == arr.beta);
    CHECK(dmod::io::arrangement_to_json(back).dump() == text);
  }
}

TEST_CASE("report json") {
  const auto arr = dmod::io::parse_arrangement(
      R"({"forms": [["1","0"],["0","1"],["1","1"]], "beta": ["1/2","1/2","1"]})");
  const auto json = dmod::io::report_to_json(dmod::count_factors(arr));
  CHECK(json["count"] == 3);
  CHECK(json["case"] == "SumInteger");
  CHECK(json["k"] == 1);
  CHECK(json["beta_H"] == "1");
  REQUIRE(json["factors"].size() == 3);
  CHECK(json["factors"][0]["kind"] == "Plane");
  CHECK(json["factors"][1]["kind"] == "Line");
  CHECK(json["factors"][1]["index"] == 3);
  CHECK(json["factors"][2]["kind"] == "Origin");
  CHECK(json["factors"][2]["multiplicity"] == 1);
  CHECK_FALSE(json.contains("nbc"));
  // Key order is fixed.
  CHECK(json.dump().rfind(R"({"count":3,"case":"SumInteger","k":1,"beta_H":"1","factors")", 0) == 0);

  const auto all = dmod::io::report_to_json(dmod::count_factors(
      dmod::io::parse_arrangement(R"({"forms": [["1","0"],["0","1"]], "beta": ["0","-2"]})")));
  CHECK(all["count"] == 4);
  CHECK(all["nbc"].dump() == "[[],[1],[2],[1,2]]");
  CHECK_FALSE(all.contains("beta_H"));
}

TEST_CASE("report text") {
  const auto arr = dmod::io::parse_arrangement(
      R"({"forms": [["1","0"],["0","1"],["1","1"]], "beta": ["1/2","1/2","1/2"]})");
  const std::string text = dmod::io::report_to_text(dmod::count_factors(arr));
  CHECK(text.find("count:   1") != std::string::npos);
  CHECK(text.find("SumNonInteger") != std::string::npos);
}
