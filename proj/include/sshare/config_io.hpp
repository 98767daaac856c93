#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sshare/experiment.hpp"

namespace sshare {

enum class OutputFormat { Csv, Json };

/// Scenario file grammar is documented in README.md ("Configuration files").
ScenarioConfig parse_config(const std::filesystem::path& path);
ScenarioConfig parse_config_text(std::string_view text);

/// Canonical text form; parse_config_text(format_config(c)) == c.
std::string format_config(const ScenarioConfig& config);

std::string selector_name(StatisticSelector selector);  // e.g. "mean_lower"
StatisticSelector parse_selector(std::string_view text);

/// Shortest decimal that round-trips, independent of the C locale.
std::string format_double(double value);

/// Sweep tables, the statistics table and the provenance file, in that
/// order. Returns the written paths.
std::vector<std::filesystem::path> write_results(const ScenarioResult& result,
                                                 const std::filesystem::path& dir,
                                                 OutputFormat format);

}  // namespace sshare
