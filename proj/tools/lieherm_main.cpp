#include <chrono>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "lieherm/scenario.hpp"

namespace {

using lieherm::Report;
using lieherm::Scenario;

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    os << content;
  }
  std::rename(tmp.c_str(), path.c_str());
}

int run_one(const Scenario& s, const std::string& json_path,
            const std::string& csv_path, const nlohmann::json* expectations,
            bool quiet) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep = lieherm::run_scenario(s);
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  bool ok = rep.as_expected;
  if (expectations) {
    for (const auto& entry : *expectations) {
      if (entry.value("scenario", "") != s.name) continue;
      bool params_match = true;
      if (entry.contains("params"))
        for (auto it = entry["params"].begin(); it != entry["params"].end(); ++it) {
          auto found = s.params.find(it.key());
          std::string have = found == s.params.end() ? "" : found->second;
          if (have != it.value().get<std::string>()) params_match = false;
        }
      if (!params_match) continue;
      if (entry.contains("expect"))
        ok = ok && lieherm::check_expectations(rep, entry["expect"]);
    }
  }
  if (!json_path.empty()) write_atomic(json_path, rep.doc.dump(2) + "\n");
  if (!csv_path.empty() && !rep.csv.empty()) write_atomic(csv_path, rep.csv);
  if (!quiet) {
    std::cout << rep.doc.dump(2) << "\n";
    std::cerr << "[" << s.name << "] " << (ok ? "ok" : "MISMATCH") << " ("
              << dt << "s)\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lieherm: exact checks for invariant complex structures and "
               "special Hermitian metrics on reductive Lie algebras"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list available scenarios");

  auto* run = app.add_subcommand("run", "run a scenario (or 'all')");
  std::string name;
  std::vector<std::string> params;
  std::string json_path, csv_path, expectations_path;
  uint64_t seed = 1;
  int jobs = 1;
  run->add_option("scenario", name, "scenario name or 'all'")->required();
  run->add_option("--param,-p", params, "key=value (exact rationals)");
  run->add_option("--json", json_path, "write the canonical JSON report here");
  run->add_option("--csv", csv_path, "write tabular output here (scan scenarios)");
  run->add_option("--seed", seed, "seed for randomized subchecks");
  run->add_option("--jobs,-j", jobs, "parallel scenarios when running 'all'");
  run->add_option("--expectations", expectations_path,
                  "JSON array of {scenario, params, expect} overrides");

  CLI11_PARSE(app, argc, argv);

  if (*list) {
    for (const auto& spec : lieherm::scenario_catalog()) {
      std::cout << spec.name;
      if (!spec.defaults.empty()) {
        std::cout << " [";
        bool first = true;
        for (const auto& [k, v] : spec.defaults) {
          std::cout << (first ? "" : ", ") << k << "=" << v;
          first = false;
        }
        std::cout << "]";
      }
      std::cout << "\n    " << spec.description << "\n";
    }
    return 0;
  }

  std::map<std::string, std::string> parsed;
  for (const std::string& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "bad --param (need key=value): " << kv << "\n";
      return 2;
    }
    parsed[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (run->count("--seed") && !parsed.count("seed")) {
    for (const auto& spec : lieherm::scenario_catalog())
      if (spec.name == name && spec.defaults.count("seed"))
        parsed["seed"] = std::to_string(seed);
  }

  nlohmann::json expectations;
  const nlohmann::json* expect_ptr = nullptr;
  if (!expectations_path.empty()) {
    std::ifstream is(expectations_path);
    if (!is) {
      std::cerr << "cannot read expectations file " << expectations_path << "\n";
      return 2;
    }
    is >> expectations;
    expect_ptr = &expectations;
  }

  try {
    if (name == "all") {
      // Catalog sweep runs every scenario with its defaults.
      std::vector<Scenario> scenarios;
      for (const auto& spec : lieherm::scenario_catalog())
        scenarios.push_back({spec.name, spec.defaults});
      // Scenario payloads are pure, so independent runs can go in parallel.
      std::vector<std::future<int>> futures;
      int worst = 0;
      size_t next = 0;
      while (next < scenarios.size() || !futures.empty()) {
        while (next < scenarios.size() &&
               static_cast<int>(futures.size()) < std::max(1, jobs)) {
          Scenario s = scenarios[next++];
          futures.push_back(std::async(std::launch::async, [s, expect_ptr]() {
            return run_one(s, "", "", expect_ptr, false);
          }));
        }
        worst = std::max(worst, futures.front().get());
        futures.erase(futures.begin());
      }
      return worst;
    }
    Scenario s{name, parsed};
    return run_one(s, json_path, csv_path, expect_ptr, false);
  } catch (const lieherm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    using lieherm::ErrorKind;
    return (e.kind() == ErrorKind::UnknownScenario ||
            e.kind() == ErrorKind::BadParameter)
               ? 2
               : 1;
  }
}
