#include "doctest.h"

#include "svf/errors.hpp"
#include "svf/params.hpp"

using svf::ModelParams;
using svf::Rational;

namespace {

const char* kFull = R"({
  "c": "1/2",
  "u": ["3", "-1/3"],
  "v": ["0"],
  "vectors": {"n": ["0","1"], "e": ["1","0"], "s": ["2/4","1"], "w": ["0","1"]},
  "split": [1, 0]
})";

}  // namespace

TEST_CASE("full parameter file round trip") {
  const ModelParams p = svf::params_from_json(kFull);
  CHECK(p.c == Rational(1, 2));
  REQUIRE(p.u.size() == 2);
  CHECK(p.u[1] == Rational(-1, 3));
  REQUIRE(p.v.size() == 1);
  CHECK(p.vectors.south.c1 == Rational(1, 2));  // canonicalized from 2/4
  REQUIRE(p.split.has_value());
  CHECK(p.split->first == 1);
  CHECK(p.split->second == 0);

  const auto doc = svf::params_to_json(p);
  const ModelParams again = svf::params_from_json(doc.dump());
  CHECK(svf::params_to_json(again) == doc);
  CHECK(doc["vectors"]["s"][0] == "1/2");
}

TEST_CASE("optional fields default to empty") {
  const ModelParams p = svf::params_from_json(
      R"({"c": "2", "vectors": {"n": ["1","1"], "e": ["1","1"],
          "s": ["1","1"], "w": ["1","1"]}})");
  CHECK(p.u.empty());
  CHECK(p.v.empty());
  CHECK(!p.split.has_value());
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(svf::params_from_json("not json"), svf::InputError);
  CHECK_THROWS_AS(svf::params_from_json("[]"), svf::InputError);
  CHECK_THROWS_WITH_AS(
      svf::params_from_json(R"({"vectors": {"n": ["1","1"], "e": ["1","1"],
                              "s": ["1","1"], "w": ["1","1"]}})"),
      doctest::Contains("missing field 'c'"), svf::InputError);
  CHECK_THROWS_WITH_AS(svf::params_from_json(R"({"c": "0", "vectors": {
        "n": ["1","1"], "e": ["1","1"], "s": ["1","1"], "w": ["1","1"]}})"),
                       doctest::Contains("nonzero"), svf::InputError);
  CHECK_THROWS_WITH_AS(svf::params_from_json(R"({"c": "1", "u": ["x"],
        "vectors": {"n": ["1","1"], "e": ["1","1"], "s": ["1","1"],
                    "w": ["1","1"]}})"),
                       doctest::Contains("u[0]"), svf::InputError);
  CHECK_THROWS_WITH_AS(svf::params_from_json(R"({"c": "1", "vectors": {
        "n": ["1","1"], "e": ["1","1"], "s": ["1","1"]}})"),
                       doctest::Contains("missing key 'w'"), svf::InputError);
  CHECK_THROWS_AS(svf::params_from_json(R"({"c": "1", "split": [1],
        "vectors": {"n": ["1","1"], "e": ["1","1"], "s": ["1","1"],
                    "w": ["1","1"]}})"),
                  svf::InputError);
  CHECK_THROWS_AS(svf::params_from_json(R"({"c": "1", "vectors": {
        "n": ["1"], "e": ["1","1"], "s": ["1","1"], "w": ["1","1"]}})"),
                  svf::InputError);
}
