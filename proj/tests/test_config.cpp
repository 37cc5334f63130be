#include <doctest.h>

#include <fstream>

#include "commands.hpp"
#include "config.hpp"

using namespace ramanpump;
using namespace ramanpump::cli;
using json = nlohmann::ordered_json;

namespace {

json minimal_doc() {
    return json::parse(R"({
      "molecule": {
        "omega0_eV": 3.0, "omega_v_eV": 0.1, "gamma_perp_eV": 0.01,
        "gamma_v_eV": 0.001, "g_eV": 0.01, "d_eg_e_nm": 0.2
      },
      "drive": {
        "omega_vis_eV": 2.0, "rabi_vis_eV": 0.01,
        "omega_ir_eV": 0.05, "rabi_ir_eV": 0.01
      }
    })");
}

}  // namespace

TEST_CASE("minimal config gets defaults") {
    const RunConfig cfg = parse_config_json(minimal_doc());
    CHECK(cfg.environment.kT == 0.025);
    CHECK(cfg.oracle.rtol == 1.0e-8);
    CHECK(cfg.oracle.atol == 1.0e-10);
    CHECK(cfg.oracle.fock_cutoff == 8);
    CHECK_FALSE(cfg.ensemble.has_value());
    CHECK_FALSE(cfg.sweep.has_value());
    // defaults are echoed
    CHECK(cfg.echo.at("environment").at("kT_eV") == 0.025);
}

TEST_CASE("field errors carry the field path") {
    SUBCASE("negative decay rate") {
        json doc = minimal_doc();
        doc["molecule"]["gamma_v_eV"] = -1.0e-3;
        try {
            parse_config_json(doc);
            CHECK(false);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("molecule.gamma_v_eV") !=
                  std::string::npos);
        }
    }
    SUBCASE("unknown key") {
        json doc = minimal_doc();
        doc["molecule"]["omega_zero_eV"] = 3.0;
        try {
            parse_config_json(doc);
            CHECK(false);
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("unknown key") != std::string::npos);
            CHECK(msg.find("molecule.omega_zero_eV") != std::string::npos);
        }
    }
    SUBCASE("missing required key") {
        json doc = minimal_doc();
        doc["drive"].erase("omega_ir_eV");
        try {
            parse_config_json(doc);
            CHECK(false);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("drive.omega_ir_eV") !=
                  std::string::npos);
        }
    }
    SUBCASE("wrong type") {
        json doc = minimal_doc();
        doc["molecule"]["omega0_eV"] = "three";
        CHECK_THROWS_AS(parse_config_json(doc), ConfigError);
    }
    SUBCASE("relational invariant") {
        json doc = minimal_doc();
        doc["molecule"]["gamma_v_eV"] = 0.2;  // exceeds omega_v
        try {
            parse_config_json(doc);
            CHECK(false);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("molecule.gamma_v_eV") !=
                  std::string::npos);
        }
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(parse_config("/nonexistent/path.json"), ConfigError);
    }
}

TEST_CASE("shipped organic configuration parses and is in regime") {
    const RunConfig cfg = parse_config(std::string(RAMANPUMP_SOURCE_DIR) +
                                       "/configs/organic.json");
    const Diagnostics diag = validate_params(cfg.molecule, cfg.drive,
                                             cfg.environment, cfg.thresholds);
    CHECK(diag.valid);
    CHECK(cfg.molecule.omega0 == 3.0);
    CHECK(cfg.molecule.omega_v == 0.1);
    CHECK(cfg.drive.omega_ir == 0.05);
    REQUIRE(cfg.ensemble.has_value());
    CHECK(cfg.ensemble->resolve_count() == doctest::Approx(1.0e16));
}

TEST_CASE("config echo round-trips to the identical run") {
    const RunConfig first = parse_config_json(minimal_doc());
    const RunConfig second = parse_config_json(first.echo);
    CHECK(first.echo == second.echo);

    RunOptions opts;
    opts.out_dir = std::filesystem::temp_directory_path() / "rp_roundtrip";
    std::filesystem::create_directories(opts.out_dir);
    const RunOutcome a = run_command("coherence", first, opts);
    const RunOutcome b = run_command("coherence", second, opts);
    CHECK(a.result.dump() == b.result.dump());
}

TEST_CASE("sweep value application") {
    const RunConfig cfg = parse_config_json(minimal_doc());
    const SweepPoint p = apply_sweep_value(cfg, "drive.rabi_ir_eV", 0.02);
    CHECK(p.drive.rabi_ir == 0.02);
    CHECK(p.drive.omega_ir == cfg.drive.omega_ir);
    const SweepPoint q = apply_sweep_value(cfg, "environment.kT_eV", 0.05);
    CHECK(q.environment.kT == 0.05);
    CHECK_THROWS_AS(apply_sweep_value(cfg, "molecule.bogus", 1.0), ConfigError);
    // invalid swept value keeps the field path in the message
    try {
        apply_sweep_value(cfg, "molecule.gamma_v_eV", -1.0);
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("molecule.gamma_v_eV") !=
              std::string::npos);
    }
}

TEST_CASE("sweep command emits a slope-recoverable table") {
    json doc = minimal_doc();
    doc["sweep"] = {{"parameter", "drive.rabi_ir_eV"},
                    {"min", 0.003},
                    {"max", 0.03},
                    {"points", 10},
                    {"scale", "log"}};
    const RunConfig cfg = parse_config_json(doc);
    RunOptions opts;
    opts.out_dir = std::filesystem::temp_directory_path() / "rp_sweep";
    std::filesystem::create_directories(opts.out_dir);
    run_command("sweep", cfg, opts);

    std::ifstream in(opts.out_dir / "sweep.csv");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "parameter,value,observable,result");

    // recover the fourth-power law of the coherent quanta from the file
    std::vector<double> lx, ly;
    std::string line;
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        const std::string obs = line.substr(c2 + 1, c3 - c2 - 1);
        if (obs != "n_coh") continue;
        lx.push_back(std::log(std::stod(line.substr(c1 + 1, c2 - c1 - 1))));
        ly.push_back(std::log(std::stod(line.substr(c3 + 1))));
    }
    REQUIRE(lx.size() == 10);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double n = double(lx.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope == doctest::Approx(4.0).epsilon(1e-9));
}
