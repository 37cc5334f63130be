#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "config.hpp"

namespace ramanpump::cli {

struct GridOverride {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
};

struct RunOptions {
    std::filesystem::path out_dir;
    int jobs = 0;
    std::optional<GridOverride> grid;
};

struct RunOutcome {
    nlohmann::ordered_json result;
    bool validation_failed = false;
};

/// Dispatch one subcommand; output files land in opts.out_dir, which must
/// exist. Throws ConfigError for configuration gaps and domain errors from
/// the physics layer.
RunOutcome run_command(const std::string& command, const RunConfig& cfg,
                       const RunOptions& opts);

bool is_known_command(const std::string& command);

}  // namespace ramanpump::cli
