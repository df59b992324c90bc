#include <doctest.h>

#include <set>

#include "lieherm/scenario.hpp"

using namespace lieherm;

TEST_CASE("catalog contains the named scenarios") {
  std::set<std::string> names;
  for (const auto& s : scenario_catalog()) names.insert(s.name);
  CHECK(names.count("sl2m1-nonregular"));
  CHECK(names.count("su5-t2-astheno"));
  CHECK(names.count("reductive-ddc"));
  CHECK(names.count("sl2m1-balanced"));
  CHECK(names.count("sl3-Ilambda"));
  CHECK(names.count("sl2-product"));
}

TEST_CASE("scenario errors") {
  CHECK_THROWS_AS(run_scenario({"no-such-scenario", {}}), Error);
  try {
    run_scenario({"no-such-scenario", {}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownScenario);
  }
  try {
    run_scenario({"sl2m1-nonregular", {{"m", "17/2"}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameter);
  }
  try {
    run_scenario({"sl2m1-nonregular", {{"q", "1"}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParameter);
  }
}

TEST_CASE("representative runs match catalog expectations") {
  CHECK(run_scenario({"sl2m1-nonregular", {{"m", "2"}}}).as_expected);
  CHECK(run_scenario({"sl2m1-balanced", {{"m", "3"}}}).as_expected);
  CHECK(run_scenario({"sl3-structure-eqs", {}}).as_expected);
  CHECK(run_scenario({"sl3-Ilambda", {{"lambda", "0,1/2"}}}).as_expected);
  CHECK(run_scenario({"sl2-product", {{"n", "3"}}}).as_expected);
  Report astheno = run_scenario({"su5-t2-astheno", {}});
  CHECK(astheno.as_expected);
  CHECK(astheno.doc["c2"] == "7/4");
  Report astheno2 = run_scenario(
      {"su5-t2-astheno", {{"beta1", "1,0,0,-3"}, {"beta2", "0,1,-1,0"}}});
  CHECK(astheno2.as_expected);
  CHECK(astheno2.doc["c2"] == "7/5");
}

TEST_CASE("reports are byte-identical across runs") {
  Scenario s{"sl3-Ilambda", {{"lambda", "1/2"}}};
  std::string a = run_scenario(s).doc.dump(2);
  std::string b = run_scenario(s).doc.dump(2);
  CHECK(a == b);
  Scenario s2{"su5-t2-scan", {{"range", "3"}}};
  CHECK(run_scenario(s2).doc.dump() == run_scenario(s2).doc.dump());
  CHECK(run_scenario(s2).csv == run_scenario(s2).csv);
}

TEST_CASE("expectation matching") {
  Report rep = run_scenario({"su5-t2-astheno", {}});
  CHECK(check_expectations(rep, nlohmann::json{{"c2", "7/4"}}));
  CHECK_FALSE(check_expectations(rep, nlohmann::json{{"c2", "7/5"}}));
  CHECK_FALSE(check_expectations(rep, nlohmann::json{{"missing", "1"}}));
  CHECK(check_expectations(rep, nlohmann::json{{"pairing_check", true}}));
}
