#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "ramanpump/integrator.hpp"
#include "report.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ramanpump;
using namespace ramanpump::cli;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPhysics = 2;
constexpr int kExitValidation = 3;

fs::path resolve_out_dir(const std::string& cli_out, const RunConfig& cfg) {
    if (!cli_out.empty()) return cli_out;
    if (const char* env = std::getenv("RAMANPUMP_OUT"); env && *env)
        return env;
    if (cfg.output.directory) return *cfg.output.directory;
    return "ramanpump_out";
}

std::optional<GridOverride> parse_grid_flag(const std::string& text) {
    if (text.empty()) return std::nullopt;
    GridOverride g;
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf,%d%c", &g.min, &g.max, &g.points,
                    &extra) != 3 ||
        !(g.min < g.max) || g.points < 2)
        throw ConfigError("--grid expects MIN,MAX,POINTS with MIN < MAX");
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramanpump: IR-pumped coherent Raman model and its full-quantum validation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir_flag;
    std::string grid_flag;
    int jobs = 0;

    for (const char* name : {"spectrum", "coherence", "chi3", "xsection",
                             "enhance", "validate", "sweep"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("config", config_path, "JSON run configuration")
            ->required();
        sub->add_option("--out", out_dir_flag, "output directory");
        sub->add_option("--jobs", jobs, "parallel workers");
        sub->add_option("--grid", grid_flag, "frequency grid MIN,MAX,POINTS");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto t0 = std::chrono::steady_clock::now();

    try {
        const RunConfig cfg = parse_config(config_path);

        RunOptions opts;
        opts.out_dir = resolve_out_dir(out_dir_flag, cfg);
        opts.jobs = jobs;
        opts.grid = parse_grid_flag(grid_flag);
        fs::create_directories(opts.out_dir);

        const RunOutcome outcome = run_command(command, cfg, opts);

        RunReport report;
        report.command = command;
        report.config = cfg.echo;
        report.result = outcome.result;
        report.diagnostics = validate_params(cfg.molecule, cfg.drive,
                                             cfg.environment, cfg.thresholds);
        report.duration_ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
        const fs::path report_path = opts.out_dir / "report.json";
        write_report(report, report_path);

        std::cout << command << ": wrote " << report_path.string() << "\n";
        for (const auto& w : report.diagnostics.warnings)
            std::cout << "warning: " << w << "\n";
        if (outcome.validation_failed) {
            std::cout << "validation FAILED (see report)\n";
            return kExitValidation;
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IntegrationError& e) {
        std::cerr << "oracle error: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return kExitPhysics;
    }
}
