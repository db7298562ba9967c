#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "app/scenario.hpp"
#include "yukawa/harness.hpp"

namespace yukawa::app {

std::string_view tool_version();

struct RunConfig {
  int parallel = 1;
  std::optional<std::uint64_t> seed;
};

struct Bundle {
  std::string scenario;
  std::string scenario_hash;
  std::string solution;
  std::uint64_t seed = 1;
  std::vector<MarginReport> reports;
  std::vector<MeanCurve> mean_curves;
  std::optional<SweepTable> sweep;
  std::vector<std::string> warnings;
  std::vector<std::string> errors;
  bool config_error = false;

  bool failed() const;
  std::string status() const { return failed() ? "failed" : "passed"; }
  /// 0 when every applicable check passed, 1 on a failing check or runtime
  /// error, 2 on a configuration error.
  int exit_code() const;
};

/// Runs every requested check in order. Checks that throw are recorded as
/// failing reports; the remaining checks still run.
Bundle run_scenario(Scenario scenario, const RunConfig& config);

/// Bundle for a scenario that could not be loaded.
Bundle config_failure(const std::string& scenario, const std::string& message);

/// Value and gradient mean curves for each p in `p_list`.
std::vector<MeanCurve> mean_curves(const Solution& f, const std::vector<double>& p_list,
                                   const std::vector<double>& r_grid, bool gradient, const HarnessOptions& opt);

}  // namespace yukawa::app
