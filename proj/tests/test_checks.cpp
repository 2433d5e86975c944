// Tests of the named check registry behind the `verify` subcommand:
// catalog consistency, parameter validation and a few cheap runs.
#include <catch2/catch_amalgamated.hpp>

#include <hesskit/checks.hpp>

#include <set>
#include <string>

using namespace hesskit;

namespace {

SampleConfig quick_config() {
  SampleConfig cfg;
  cfg.trials = 6;
  cfg.sample_points = 10;
  return cfg;
}

}  // namespace

TEST_CASE("check catalog lists every runnable id exactly once") {
  const auto& catalog = check_catalog();
  CHECK(catalog.size() == 15);
  std::set<std::string> ids;
  for (const auto& entry : catalog) {
    CHECK(ids.insert(entry.id).second);
    CHECK_FALSE(entry.summary.empty());
  }
  CHECK(ids.count("segre-alpha") == 1);
  CHECK(ids.count("res-invariance") == 1);
}

TEST_CASE("unknown ids and parameters are rejected") {
  auto cfg = quick_config();
  CHECK_THROWS_WITH(run_check("segre-delta", {}, cfg), "unknown check 'segre-delta'");
  CHECK_THROWS_WITH(run_check("p5-relation", {{"n", "2"}}, cfg),
                    "check 'p5-relation' does not take parameter 'n'");
  CHECK_THROWS_AS(run_check("pencil-grid", {{"g", "z1^2 +"}}, cfg), Error);
}

TEST_CASE("expensive symbolic checks refuse oversized instances") {
  auto cfg = quick_config();
  CHECK_THROWS_AS(run_check("adjugate", {{"size", "5"}}, cfg), Error);
  CHECK_THROWS_AS(run_check("pf-square", {{"m", "3"}}, cfg), Error);
}

TEST_CASE("structural checks pass on default parameters") {
  auto cfg = quick_config();
  for (const std::string id :
       {"res-common-factor", "res-degrees", "lagrange", "p5-relation",
        "pencil-euler", "pf-square", "scroll-match"}) {
    CAPTURE(id);
    auto reports = run_check(id, {}, cfg);
    REQUIRE_FALSE(reports.empty());
    for (const auto& rep : reports) {
      CAPTURE(rep.claim, rep.notes);
      CHECK(rep.passed);
    }
  }
}

TEST_CASE("hessian power checks measure the frozen constants") {
  auto cfg = quick_config();

  auto alpha = run_check("segre-alpha", {{"n", "2"}}, cfg);
  REQUIRE(alpha.size() == 1);
  CHECK(alpha[0].passed);
  REQUIRE(alpha[0].measured_constant.has_value());
  CHECK(*alpha[0].measured_constant == "-2");
  CHECK_FALSE(alpha[0].convention_flag);

  auto gamma = run_check("segre-gamma", {{"m", "2"}}, cfg);
  REQUIRE(gamma.size() == 1);
  CHECK(gamma[0].passed);
  REQUIRE(gamma[0].measured_constant.has_value());
  CHECK(*gamma[0].measured_constant == "2");
}

TEST_CASE("grid checks report one relation set per instance") {
  auto cfg = quick_config();
  auto reports = run_check("pencil-grid", {}, cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].passed);
  CHECK(reports[0].mode == "exact");

  auto dual = run_check("dual-cayley-grid", {{"r", "2"}}, cfg);
  REQUIRE(dual.size() == 1);
  CHECK(dual[0].passed);
}
