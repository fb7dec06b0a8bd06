#pragma once

#include <string>
#include <vector>

namespace lmpc::harness {

/// Files below an output directory that the report reads.
std::vector<std::string> report_inputs();
/// The subset of report_inputs() missing from dir.
std::vector<std::string> missing_report_inputs(const std::string& dir);

/// Writes dir/report/{realized_cost,value_trend,value_grid_learned,
/// value_grid_vi}.csv and returns their paths. Throws ConfigError listing
/// every missing input.
std::vector<std::string> write_report(const std::string& dir);

}  // namespace lmpc::harness
