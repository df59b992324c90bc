#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieherm/error.hpp"

namespace lieherm {

struct Scenario {
  std::string name;
  std::map<std::string, std::string> params;
};

struct ScenarioSpec {
  std::string name;
  std::string description;
  std::map<std::string, std::string> defaults;  // accepted keys with defaults
};

struct Report {
  nlohmann::ordered_json doc;   // canonical, deterministic
  bool as_expected = true;      // catalog expectations
  std::string csv;              // optional tabular payload
};

const std::vector<ScenarioSpec>& scenario_catalog();

/// Runs a scenario; throws UnknownScenario/BadParameter.  Params are exact
/// rational strings (or comma-separated lists); unknown keys are rejected.
Report run_scenario(const Scenario& s);

/// Compares a report against an expectation object {key: value}; string
/// values compare against the JSON dump of the field.
bool check_expectations(const Report& rep, const nlohmann::json& expect);

}  // namespace lieherm
