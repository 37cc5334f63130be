#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ramanpump/ensemble.hpp"
#include "ramanpump/oracle.hpp"
#include "ramanpump/params.hpp"

namespace ramanpump::cli {

/// Configuration problem: missing file, syntax, unknown key, or an invariant
/// violation. The message carries the offending field path.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OutputConfig {
    std::optional<std::string> directory;
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    int grid_points = 2001;
    std::optional<double> render_delta_as;
};

enum class SweepScale { linear, log };

struct SweepConfig {
    std::string parameter;
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    SweepScale scale = SweepScale::linear;
};

struct RunConfig {
    MoleculeParams molecule;
    DriveParams drive;
    Environment environment;
    std::optional<EnsembleParams> ensemble;
    std::optional<DispersionData> dispersion;
    OracleConfig oracle;
    ValidationThresholds thresholds;
    OutputConfig output;
    std::optional<SweepConfig> sweep;
    nlohmann::ordered_json echo;  ///< resolved configuration, defaults applied
};

/// Parse and validate a JSON run configuration. Unknown keys are rejected;
/// every error names the offending field path.
RunConfig parse_config(const std::filesystem::path& path);

/// Same, from an already-loaded document (used for echo round-trips).
RunConfig parse_config_json(const nlohmann::ordered_json& doc);

/// Rebuild the physical parameter set with one swept field replaced.
/// Supported paths: molecule.*, drive.*, environment.kT_eV.
struct SweepPoint {
    MoleculeParams molecule;
    DriveParams drive;
    Environment environment;
};

SweepPoint apply_sweep_value(const RunConfig& base, const std::string& path,
                             double value);

}  // namespace ramanpump::cli
