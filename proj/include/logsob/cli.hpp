#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "logsob/experiments.hpp"

namespace logsob {

// Fully serializable run description; every artifact embeds the config that
// produced it so a run can be replayed exactly.
struct RunConfig {
  std::string subcommand = "seminorm";
  AnalyticFunction function = AnalyticFunction::gaussian(1.0);
  Domain domain{1, 8.0, 1024};
  SchemeSpec scheme;
  SeminormParams params;
  std::uint64_t seed = 42;
  std::string output_dir = "out";
  int threads = 0;              // 0 = library default
  bool deterministic = false;   // fixed timestamps in artifacts
  bool allow_gamma_zero = false;
  bool dump_values = false;     // CSV of the sampled function
  bool emit_svg = false;        // also render plot tables as SVG
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  static RunConfig from_json(const nlohmann::ordered_json& j);
  bool operator==(const RunConfig& other) const;
};

nlohmann::ordered_json function_to_json(const AnalyticFunction& g);
AnalyticFunction function_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json domain_to_json(const Domain& d);
Domain domain_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json params_to_json(const SeminormParams& p);
SeminormParams params_from_json(const nlohmann::ordered_json& j);

// Executes one run: writes the report JSON plus CSV plot data under the
// output directory and returns the exit status. Validation failures print a
// machine-readable error JSON to stdout and return nonzero.
int run(const RunConfig& config);

const std::vector<std::string>& known_experiments();

}  // namespace logsob
