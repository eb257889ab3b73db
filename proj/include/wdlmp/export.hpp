#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wdlmp/experiment.hpp"

namespace wdlmp {

struct ExportOptions {
  bool plot = false;  // also write learning_curve_<algorithm>.svg
};

/// Shortest round-trip decimal form, '.' separator, locale independent.
std::string format_double(double x);

/// Writes msd_curves.csv, per_node_msd.csv, weights_final.csv, weights_trace.csv,
/// config_echo.json and run_summary.json into `out_dir` (created if missing).
/// Returns the written paths. Throws wdlmp::Error naming the path on I/O failure.
std::vector<std::filesystem::path> export_results(const ExperimentResult& result,
                                                  const std::filesystem::path& out_dir,
                                                  const ExportOptions& options = {});

}  // namespace wdlmp
