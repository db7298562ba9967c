#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "yukawa/harness.hpp"

namespace yukawa::app {

/// Scenario file that fails to parse or violates the schema. `field` is a
/// JSON pointer, `line` is 1-based (0 when unknown).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string message, std::string field = {}, int line = 0);

  const std::string& field() const { return field_; }
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string field_;
  int line_;
  std::string detail_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name;
  nlohmann::json source;
  std::string solution_label;
  std::optional<Solution> solution;
  std::vector<std::string> checks;
  CheckParams params;
  HarnessOptions options;
  bool seed_given = false;
  std::optional<std::vector<double>> mean_r_grid;
  std::uint64_t hash = 0;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Builds a solution from a descriptor object: either {"catalogue": name} or
/// a family layout mirroring the constructors. `pointer` prefixes error paths.
Solution parse_solution(const nlohmann::json& j, const std::string& pointer = "/solution");

Majorant parse_majorant(const nlohmann::json& j, const std::string& pointer);

/// Parses scenario text. Errors carry the offending field and, where it can be
/// located, its line in `text`.
Scenario parse_scenario(std::string_view text, std::string name = "scenario");
Scenario load_scenario(const std::filesystem::path& path);

/// Whether any requested check draws seeded samples or uses Monte Carlo rules.
bool needs_seed(const Scenario& s);

/// Range [start, stop] with `count` evenly spaced points, parsed from "a:b:n".
std::vector<double> parse_range(std::string_view spec);

}  // namespace yukawa::app
