#include "doctest.h"

#include "projconn/error.hpp"
#include "projconn/suites.hpp"

using namespace projconn;

TEST_CASE("every suite passes on the sphere") {
  SuiteOptions o;
  o.samples = 5;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    auto r = run_suite(name, o);
    CHECK(r.passed());
    CHECK_FALSE(r.checks.empty());
    CHECK_FALSE(r.seconds.has_value());
  }
}

TEST_CASE("curvature suite on (2,3,2)") {
  SuiteOptions o;
  o.exponents = {2, 3, 2};
  CHECK(run_suite("curvature", o).passed());
}

TEST_CASE("reports are deterministic for a fixed seed") {
  SuiteOptions o;
  o.samples = 5;
  o.seed = 9;
  CHECK(run_suite("connection", o).to_json() == run_suite("connection", o).to_json());
  CHECK(run_suite("weyl", o).to_text() == run_suite("weyl", o).to_text());
}

TEST_CASE("corrupted fundamental matrix is caught") {
  SuiteOptions o;
  o.corrupt_fundamental_matrix = true;
  auto r = run_suite("ellipsoid", o);
  CHECK_FALSE(r.passed());
  CHECK(r.to_text().find("witness") != std::string::npos);
}

TEST_CASE("bad input") {
  SuiteOptions o;
  CHECK_THROWS_AS(run_suite("nope", o), InputError);
  o.exponents = {2, 0, 2};
  CHECK_THROWS_AS(run_suite("ellipsoid", o), InputError);
}

TEST_CASE("ring report") {
  auto j = ring_report({2, 2, 2});
  CHECK(j["curvature"].size() == 3);
  CHECK(j["curvature"][0]["charpoly3"]["det"] == "0");
  auto text = ring_report_text(j);
  CHECK(text.find("R(d12,d13) =") != std::string::npos);
  CHECK(ring_report({2, 2})["curvature"].empty());
  CHECK(ring_report_text(ring_report({2, 2})).find("charpoly3") == std::string::npos);
}

TEST_CASE("jets and mcm reports") {
  auto j = jets_report({2, 2, 2}, 0, 1, 1);
  CHECK(j["flat"] == false);
  CHECK(j["witness"]["name"] == "K^(1,1)(dx1)");
  CHECK(jets_report({2, 2, 2}, 3, 2, 2)["flat"] == true);
  CHECK_THROWS_AS(jets_report({2, 2, 2}, 0, 1, 1, 2), ResourceError);
  CHECK(mcm_report(2, 2, 1, 1)["passed"] == true);
}
