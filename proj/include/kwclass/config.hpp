#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "kwclass/tokenize.hpp"

namespace kwclass {

// Settings shared by the CLI subcommands. Each value resolves as
// command-line flag, then config file, then the default below.
struct RunConfig {
    int k = 20;
    double threshold = 0.6;
    MatchMode match_mode = MatchMode::exact;
    std::string corpus;      // corpus root directory
    std::string candidates;  // candidate keyword file
    std::string model;       // model file
    std::string report;      // report output file
};

// JSON object mirroring the RunConfig field names. Unknown keys are
// rejected. Fields absent from the file keep their value from `defaults`.
RunConfig load_run_config(const std::filesystem::path& path, const RunConfig& defaults = {});

// Threshold grid: either a single number or "start:stop:step" with step > 0.
// The grid is start, start+step, ... and includes stop when step divides the
// range within 1e-9. All values must lie in [0, 1].
std::vector<double> parse_threshold_grid(const std::string& text);

}  // namespace kwclass
