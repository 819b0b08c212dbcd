// Exercises the shared library exactly the way an external client would:
// through svf/svf.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "json.hpp"
#include "svf/svf.h"

namespace {

constexpr const char* kOnesParams = R"({
  "c": "1", "u": ["1"], "v": ["0"],
  "vectors": {"n": ["1","1"], "e": ["1","1"], "s": ["1","1"], "w": ["1","1"]}
})";

struct Owned {
  char* ptr = nullptr;
  ~Owned() { svf_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct Params {
  svf_params* ptr = nullptr;
  ~Params() { svf_params_free(ptr); }
};

}  // namespace

TEST_CASE("version and error stubs") {
  CHECK(svf_version() != nullptr);
  CHECK(svf_last_error() != nullptr);
  svf_free(nullptr);  // must be a no-op
}

TEST_CASE("rational normalization") {
  Owned out;
  REQUIRE(svf_rational_normalize("3/6", &out.ptr) == SVF_OK);
  CHECK(out.str() == "1/2");
  Owned bad;
  CHECK(svf_rational_normalize("1/0", &bad.ptr) == SVF_ERR_INPUT);
  CHECK(bad.ptr == nullptr);
  CHECK(std::strstr(svf_last_error(), "zero denominator") != nullptr);
  CHECK(svf_rational_normalize(nullptr, &out.ptr) == SVF_ERR_INPUT);
}

TEST_CASE("params parse and eval") {
  Params p;
  REQUIRE(svf_params_parse(kOnesParams, &p.ptr) == SVF_OK);

  Owned result;
  REQUIRE(svf_eval(p.ptr, "z11", "factorized", 2, &result.ptr) == SVF_OK);
  const auto doc = nlohmann::json::parse(result.str());
  CHECK(doc["value"] == "8");
  CHECK(doc["float"] == "8.00");
  CHECK(doc["method"] == "factorized");
  CHECK(doc["params"]["c"] == "1");

  Owned gdw;
  REQUIRE(svf_eval(p.ptr, "gdw", nullptr, -1, &gdw.ptr) == SVF_OK);
  const auto gdw_doc = nlohmann::json::parse(gdw.str());
  CHECK(gdw_doc["method"] == "determinant");  // per-quantity default
  CHECK(gdw_doc["value"] == "8");
  CHECK(!gdw_doc.contains("float"));
}

TEST_CASE("eval failure paths") {
  Params p;
  REQUIRE(svf_params_parse(kOnesParams, &p.ptr) == SVF_OK);

  Owned err;
  CHECK(svf_eval(p.ptr, "triangular", "determinant", -1, &err.ptr) ==
        SVF_ERR_INPUT);
  const auto doc = nlohmann::json::parse(err.str());
  CHECK(doc["error"]["code"] == 1);

  Params pole;
  REQUIRE(svf_params_parse(R"({
    "c": "1", "u": ["0"], "v": ["0"],
    "vectors": {"n": ["1","1"], "e": ["1","1"], "s": ["1","1"], "w": ["1","1"]}
  })", &pole.ptr) == SVF_OK);
  Owned pole_doc;
  CHECK(svf_eval(pole.ptr, "gdw", "determinant", -1, &pole_doc.ptr) ==
        SVF_ERR_POLE);
  const auto perr = nlohmann::json::parse(pole_doc.str());
  CHECK(perr["error"]["code"] == 2);
  CHECK(perr["error"]["kind"] == "pole");
  CHECK(perr["error"]["factor"] == "u_1 - v_1 = 0");

  CHECK(svf_eval(nullptr, "gdw", nullptr, -1, nullptr) == SVF_ERR_INPUT);
  CHECK(svf_eval(p.ptr, "nonsense", nullptr, -1, nullptr) == SVF_ERR_INPUT);
}

TEST_CASE("params parse rejects bad documents") {
  svf_params* raw = reinterpret_cast<svf_params*>(0x1);
  CHECK(svf_params_parse("{", &raw) == SVF_ERR_INPUT);
  CHECK(raw == nullptr);
  CHECK(svf_params_parse(nullptr, &raw) == SVF_ERR_INPUT);
}

TEST_CASE("verify through the C surface") {
  Owned report;
  unsigned failures = 123;
  REQUIRE(svf_verify("unitarity", 8, 3, 4, &report.ptr, &failures) == SVF_OK);
  CHECK(failures == 0);
  const auto doc = nlohmann::json::parse(report.str());
  CHECK(doc["passes"] == 8);

  CHECK(svf_verify("bogus", 1, 0, 1, nullptr, nullptr) == SVF_ERR_INPUT);

  Owned names;
  REQUIRE(svf_suite_names(&names.ptr) == SVF_OK);
  CHECK(names.str().find("yang-baxter\n") != std::string::npos);
  CHECK(names.str().find("efp-regime\n") != std::string::npos);
}

TEST_CASE("bench through the C surface") {
  Owned csv;
  REQUIRE(svf_bench("triangular", "factorized", 2, 4, &csv.ptr) == SVF_OK);
  const std::string text = csv.str();
  CHECK(text.rfind("size,method,seconds,max_bits\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);  // header + 3 rows

  CHECK(svf_bench("triangular", "subset-sum", 2, 3, &csv.ptr) ==
        SVF_ERR_INPUT);
  CHECK(svf_bench("gdw", "determinant", 2, 40, &csv.ptr) == SVF_ERR_INPUT);
}
