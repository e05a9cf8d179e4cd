#pragma once

// CSV curve tables and JSON run metadata.

#include <iosfwd>
#include <string>
#include <vector>

#include "paprlab/experiment.hpp"

namespace paprlab::cli {

/// Column names "ccdf_<label>", suffixed with _N<n> when the runs span several N.
std::vector<std::string> column_names(const std::vector<ExperimentResult>& results);

/// threshold_db plus one probability column per result; %.9g, LF line endings.
/// All results must share one threshold grid.
void write_csv(std::ostream& out, const std::vector<ExperimentResult>& results);

std::string config_to_json(const SimConfig& config);
SimConfig config_from_json(const std::string& text);

struct RunInfo {
    std::string command;
    double wall_time_s = 0.0;
    unsigned threads = 0;
};

/// Tool version, wall time, and per-run config echo with side-information bit counts.
std::string metadata_json(const std::vector<ExperimentResult>& results, const RunInfo& info);

/// Configs echoed in a metadata document, in run order.
std::vector<SimConfig> configs_from_metadata(const std::string& text);

const char* tool_version() noexcept;

}  // namespace paprlab::cli
