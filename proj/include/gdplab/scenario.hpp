#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdplab/economy.hpp"
#include "gdplab/measurement.hpp"
#include "gdplab/paths.hpp"

namespace gdplab {

// A full experiment description: an initial economy, one technology schedule
// per sector, and the measurement policies to apply to the resulting series.
struct ScenarioConfig {
  std::string name;
  std::string summary;
  EconomyConfig economy;
  std::vector<TechSchedule> schedules;
  int years = 98;
  double wage_growth = 0.0;
  int start_year = 1900;
  std::vector<BasePolicy> policies;
  std::vector<std::string> outputs{"records", "growth"};
};

struct RunOptions {
  std::string out_dir;  // empty: print summary only, write no files
  bool svg = false;
  std::optional<std::vector<BasePolicy>> policy_override;
};

struct ScenarioOutcome {
  SimulationRun run;
  std::vector<GrowthSeries> growth;
  std::vector<std::string> artifacts;  // paths written, in write order
};

// JSON file with field names mirroring the structs above. Economic fields
// absent from the file take the documented defaults (lambda 2/3, delta 0.055,
// rate_of_return 0.055, wage 200, total_labor 100000, wage_growth 0.06).
// Throws std::runtime_error naming the offending field on bad input.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(const std::string& text, const std::string& origin);

std::vector<std::string> list_builtins();
bool is_builtin(const std::string& name);

// Configs for the six simulation builtins (exp1-*, exp2-*). The three demo
// builtins (kaldor-demo, curl-demo, ppp-demo) are procedural; asking for them
// here throws std::invalid_argument.
ScenarioConfig builtin_scenario(const std::string& name);

// Simulates, prints a summary table, and writes requested CSV/SVG artifacts.
ScenarioOutcome run_scenario(const ScenarioConfig& config, const RunOptions& options,
                             std::ostream& log);

void run_kaldor_demo(std::ostream& log);
void run_curl_demo(std::ostream& log);
void run_ppp_demo(const RunOptions& options, std::ostream& log);

// Dispatches any name from list_builtins(). Throws std::invalid_argument for
// unknown names.
void run_builtin(const std::string& name, const RunOptions& options, std::ostream& log);

} // namespace gdplab
