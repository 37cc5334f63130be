#include "config.hpp"

#include <fstream>
#include <set>

namespace ramanpump::cli {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, const std::string& section,
                         const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key: " +
                              (section.empty() ? it.key()
                                               : section + "." + it.key()));
    }
}

double get_number(const json& obj, const std::string& section,
                  const std::string& key) {
    if (!obj.contains(key))
        throw ConfigError("missing key: " + section + "." + key);
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("not a number: " + section + "." + key);
    return v.get<double>();
}

double get_number_or(const json& obj, const std::string& section,
                     const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("not a number: " + section + "." + key);
    return v.get<double>();
}

void require_positive(double v, const std::string& path) {
    if (!(v > 0.0)) throw ConfigError(path + ": must be > 0");
}

void require_non_negative(double v, const std::string& path) {
    if (!(v >= 0.0)) throw ConfigError(path + ": must be >= 0");
}

MoleculeParams parse_molecule(const json& j) {
    reject_unknown_keys(j, "molecule",
                        {"omega0_eV", "omega_v_eV", "gamma_perp_eV",
                         "gamma_v_eV", "g_eV", "d_eg_e_nm"});
    const double omega0 = get_number(j, "molecule", "omega0_eV");
    const double omega_v = get_number(j, "molecule", "omega_v_eV");
    const double gamma_perp = get_number(j, "molecule", "gamma_perp_eV");
    const double gamma_v = get_number(j, "molecule", "gamma_v_eV");
    const double g = get_number(j, "molecule", "g_eV");
    const double d_eg = get_number(j, "molecule", "d_eg_e_nm");
    require_positive(omega0, "molecule.omega0_eV");
    require_positive(omega_v, "molecule.omega_v_eV");
    require_positive(gamma_perp, "molecule.gamma_perp_eV");
    require_positive(gamma_v, "molecule.gamma_v_eV");
    require_non_negative(g, "molecule.g_eV");
    require_positive(d_eg, "molecule.d_eg_e_nm");
    if (!(gamma_v < omega_v))
        throw ConfigError(
            "molecule.gamma_v_eV: must be < molecule.omega_v_eV (underdamped vibration)");
    if (!(gamma_perp < omega0))
        throw ConfigError("molecule.gamma_perp_eV: must be < molecule.omega0_eV");
    return MoleculeParams(omega0, omega_v, gamma_perp, gamma_v, g, d_eg);
}

DriveParams parse_drive(const json& j) {
    reject_unknown_keys(
        j, "drive", {"omega_vis_eV", "rabi_vis_eV", "omega_ir_eV", "rabi_ir_eV"});
    const double omega_vis = get_number(j, "drive", "omega_vis_eV");
    const double rabi_vis = get_number(j, "drive", "rabi_vis_eV");
    const double omega_ir = get_number(j, "drive", "omega_ir_eV");
    const double rabi_ir = get_number(j, "drive", "rabi_ir_eV");
    require_non_negative(omega_vis, "drive.omega_vis_eV");
    require_non_negative(rabi_vis, "drive.rabi_vis_eV");
    require_non_negative(omega_ir, "drive.omega_ir_eV");
    require_non_negative(rabi_ir, "drive.rabi_ir_eV");
    if (!(omega_vis > omega_ir))
        throw ConfigError("drive.omega_vis_eV: must be > drive.omega_ir_eV");
    return DriveParams(omega_vis, rabi_vis, omega_ir, rabi_ir);
}

Environment parse_environment(const json& j) {
    reject_unknown_keys(j, "environment", {"kT_eV"});
    const double kT = get_number_or(j, "environment", "kT_eV", 0.025);
    require_positive(kT, "environment.kT_eV");
    return Environment(kT);
}

EnsembleParams parse_ensemble(const json& j) {
    reject_unknown_keys(j, "ensemble",
                        {"concentration_cm3", "interaction_volume_mm3",
                         "molecule_count"});
    EnsembleParams ens;
    if (j.contains("concentration_cm3")) {
        ens.concentration = get_number(j, "ensemble", "concentration_cm3");
        require_positive(*ens.concentration, "ensemble.concentration_cm3");
    }
    if (j.contains("interaction_volume_mm3")) {
        ens.interaction_volume =
            get_number(j, "ensemble", "interaction_volume_mm3");
        require_positive(*ens.interaction_volume,
                         "ensemble.interaction_volume_mm3");
    }
    if (j.contains("molecule_count")) {
        ens.molecule_count = get_number(j, "ensemble", "molecule_count");
        if (*ens.molecule_count < 1.0)
            throw ConfigError("ensemble.molecule_count: must be >= 1");
    }
    return ens;
}

DispersionData parse_dispersion(const json& j) {
    reject_unknown_keys(j, "dispersion", {"delta_n", "n_vis", "n_ir", "n_ast"});
    if (j.contains("delta_n")) {
        if (j.contains("n_vis") || j.contains("n_ir") || j.contains("n_ast"))
            throw ConfigError(
                "dispersion.delta_n: exclusive with explicit indices");
        return DispersionData::constant_offset(
            get_number(j, "dispersion", "delta_n"));
    }
    try {
        return DispersionData(get_number_or(j, "dispersion", "n_vis", 1.0),
                              get_number_or(j, "dispersion", "n_ir", 1.0),
                              get_number_or(j, "dispersion", "n_ast", 1.0));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("dispersion: ") + e.what());
    }
}

OracleConfig parse_oracle(const json& j, const MoleculeParams& mol) {
    reject_unknown_keys(
        j, "oracle",
        {"fock_cutoff", "t_final", "rtol", "atol", "demod_t_start",
         "demod_t_end", "n_bar_override", "spectrum_enabled", "tau_max",
         "window", "truncation_threshold", "n_time_samples", "n_tau_samples",
         "jobs"});
    OracleConfig cfg;
    if (j.contains("fock_cutoff")) {
        if (!j.at("fock_cutoff").is_number_integer())
            throw ConfigError("not an integer: oracle.fock_cutoff");
        cfg.fock_cutoff = j.at("fock_cutoff").get<int>();
        if (cfg.fock_cutoff < 2)
            throw ConfigError("oracle.fock_cutoff: must be >= 2");
    }
    cfg.t_final =
        get_number_or(j, "oracle", "t_final", 8.0 / mol.gamma_v);
    cfg.rtol = get_number_or(j, "oracle", "rtol", cfg.rtol);
    cfg.atol = get_number_or(j, "oracle", "atol", cfg.atol);
    cfg.demod_t_start = get_number_or(j, "oracle", "demod_t_start",
                                      0.5 * cfg.t_final);
    cfg.demod_t_end =
        get_number_or(j, "oracle", "demod_t_end", cfg.t_final);
    if (j.contains("n_bar_override"))
        cfg.n_bar_override = get_number(j, "oracle", "n_bar_override");
    if (j.contains("spectrum_enabled")) {
        if (!j.at("spectrum_enabled").is_boolean())
            throw ConfigError("not a boolean: oracle.spectrum_enabled");
        cfg.spectrum_enabled = j.at("spectrum_enabled").get<bool>();
    }
    cfg.tau_max = get_number_or(j, "oracle", "tau_max", 0.0);
    if (j.contains("window")) {
        const std::string w = j.at("window").get<std::string>();
        if (w == "hann")
            cfg.window = SpectrumWindow::hann;
        else if (w == "rectangular")
            cfg.window = SpectrumWindow::rectangular;
        else
            throw ConfigError("oracle.window: must be \"hann\" or \"rectangular\"");
    }
    cfg.truncation_threshold = get_number_or(j, "oracle", "truncation_threshold",
                                             cfg.truncation_threshold);
    cfg.n_time_samples = int(get_number_or(j, "oracle", "n_time_samples",
                                           cfg.n_time_samples));
    cfg.n_tau_samples = int(get_number_or(j, "oracle", "n_tau_samples",
                                          cfg.n_tau_samples));
    cfg.jobs = int(get_number_or(j, "oracle", "jobs", 0));
    return cfg;
}

ValidationThresholds parse_thresholds(const json& j) {
    reject_unknown_keys(j, "validation",
                        {"detuning_factor", "kt_factor", "epsilon_max"});
    ValidationThresholds t;
    t.detuning_factor = get_number_or(j, "validation", "detuning_factor",
                                      t.detuning_factor);
    t.kt_factor = get_number_or(j, "validation", "kt_factor", t.kt_factor);
    t.epsilon_max = get_number_or(j, "validation", "epsilon_max", t.epsilon_max);
    return t;
}

OutputConfig parse_output(const json& j) {
    reject_unknown_keys(j, "output",
                        {"directory", "grid", "render_delta_as"});
    OutputConfig out;
    if (j.contains("directory"))
        out.directory = j.at("directory").get<std::string>();
    if (j.contains("render_delta_as")) {
        out.render_delta_as = get_number(j, "output", "render_delta_as");
        require_positive(*out.render_delta_as, "output.render_delta_as");
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        reject_unknown_keys(g, "output.grid",
                            {"omega_min_eV", "omega_max_eV", "n_points"});
        out.grid_min = get_number(g, "output.grid", "omega_min_eV");
        out.grid_max = get_number(g, "output.grid", "omega_max_eV");
        if (!(*out.grid_min < *out.grid_max))
            throw ConfigError(
                "output.grid.omega_min_eV: must be < output.grid.omega_max_eV");
        out.grid_points = int(get_number_or(g, "output.grid", "n_points", 2001));
        if (out.grid_points < 2)
            throw ConfigError("output.grid.n_points: must be >= 2");
    }
    return out;
}

SweepConfig parse_sweep(const json& j) {
    reject_unknown_keys(j, "sweep",
                        {"parameter", "min", "max", "points", "scale"});
    SweepConfig s;
    if (!j.contains("parameter"))
        throw ConfigError("missing key: sweep.parameter");
    s.parameter = j.at("parameter").get<std::string>();
    s.min = get_number(j, "sweep", "min");
    s.max = get_number(j, "sweep", "max");
    if (!(s.min < s.max)) throw ConfigError("sweep.min: must be < sweep.max");
    s.points = int(get_number(j, "sweep", "points"));
    if (s.points < 2) throw ConfigError("sweep.points: must be >= 2");
    if (j.contains("scale")) {
        const std::string sc = j.at("scale").get<std::string>();
        if (sc == "linear")
            s.scale = SweepScale::linear;
        else if (sc == "log")
            s.scale = SweepScale::log;
        else
            throw ConfigError("sweep.scale: must be \"linear\" or \"log\"");
    }
    if (s.scale == SweepScale::log && s.min <= 0.0)
        throw ConfigError("sweep.min: must be > 0 for log scale");
    return s;
}

json echo_config(const RunConfig& cfg) {
    json e;
    e["molecule"] = {{"omega0_eV", cfg.molecule.omega0},
                     {"omega_v_eV", cfg.molecule.omega_v},
                     {"gamma_perp_eV", cfg.molecule.gamma_perp},
                     {"gamma_v_eV", cfg.molecule.gamma_v},
                     {"g_eV", cfg.molecule.g},
                     {"d_eg_e_nm", cfg.molecule.d_eg}};
    e["drive"] = {{"omega_vis_eV", cfg.drive.omega_vis},
                  {"rabi_vis_eV", cfg.drive.rabi_vis},
                  {"omega_ir_eV", cfg.drive.omega_ir},
                  {"rabi_ir_eV", cfg.drive.rabi_ir}};
    e["environment"] = {{"kT_eV", cfg.environment.kT}};
    if (cfg.ensemble) {
        json ens;
        if (cfg.ensemble->concentration)
            ens["concentration_cm3"] = *cfg.ensemble->concentration;
        if (cfg.ensemble->interaction_volume)
            ens["interaction_volume_mm3"] = *cfg.ensemble->interaction_volume;
        if (cfg.ensemble->molecule_count)
            ens["molecule_count"] = *cfg.ensemble->molecule_count;
        e["ensemble"] = ens;
    }
    if (cfg.dispersion)
        e["dispersion"] = {{"n_vis", cfg.dispersion->n_vis},
                           {"n_ir", cfg.dispersion->n_ir},
                           {"n_ast", cfg.dispersion->n_ast}};
    e["oracle"] = {
        {"fock_cutoff", cfg.oracle.fock_cutoff},
        {"t_final", cfg.oracle.t_final},
        {"rtol", cfg.oracle.rtol},
        {"atol", cfg.oracle.atol},
        {"demod_t_start", cfg.oracle.demod_t_start},
        {"demod_t_end", cfg.oracle.demod_t_end},
        {"spectrum_enabled", cfg.oracle.spectrum_enabled},
        {"tau_max", cfg.oracle.tau_max},
        {"window",
         cfg.oracle.window == SpectrumWindow::hann ? "hann" : "rectangular"},
        {"truncation_threshold", cfg.oracle.truncation_threshold},
        {"n_time_samples", cfg.oracle.n_time_samples},
        {"n_tau_samples", cfg.oracle.n_tau_samples},
        {"jobs", cfg.oracle.jobs}};
    if (cfg.oracle.n_bar_override)
        e["oracle"]["n_bar_override"] = *cfg.oracle.n_bar_override;
    e["validation"] = {{"detuning_factor", cfg.thresholds.detuning_factor},
                       {"kt_factor", cfg.thresholds.kt_factor},
                       {"epsilon_max", cfg.thresholds.epsilon_max}};
    json out;
    if (cfg.output.directory) out["directory"] = *cfg.output.directory;
    if (cfg.output.grid_min && cfg.output.grid_max)
        out["grid"] = {{"omega_min_eV", *cfg.output.grid_min},
                       {"omega_max_eV", *cfg.output.grid_max},
                       {"n_points", cfg.output.grid_points}};
    if (cfg.output.render_delta_as)
        out["render_delta_as"] = *cfg.output.render_delta_as;
    if (!out.empty()) e["output"] = out;
    if (cfg.sweep)
        e["sweep"] = {
            {"parameter", cfg.sweep->parameter},
            {"min", cfg.sweep->min},
            {"max", cfg.sweep->max},
            {"points", cfg.sweep->points},
            {"scale", cfg.sweep->scale == SweepScale::log ? "log" : "linear"}};
    return e;
}

}  // namespace

RunConfig parse_config_json(const nlohmann::ordered_json& doc) {
    if (!doc.is_object()) throw ConfigError("top level: must be a JSON object");
    reject_unknown_keys(doc, "",
                        {"molecule", "drive", "environment", "ensemble",
                         "dispersion", "oracle", "validation", "output",
                         "sweep"});
    if (!doc.contains("molecule")) throw ConfigError("missing section: molecule");
    if (!doc.contains("drive")) throw ConfigError("missing section: drive");

    MoleculeParams mol = parse_molecule(doc.at("molecule"));
    DriveParams drive = parse_drive(doc.at("drive"));
    Environment env = parse_environment(
        doc.contains("environment") ? doc.at("environment") : json::object());

    RunConfig cfg{std::move(mol),
                  std::move(drive),
                  std::move(env),
                  std::nullopt,
                  std::nullopt,
                  OracleConfig{},
                  ValidationThresholds{},
                  OutputConfig{},
                  std::nullopt,
                  json::object()};

    if (doc.contains("ensemble")) cfg.ensemble = parse_ensemble(doc.at("ensemble"));
    if (doc.contains("dispersion"))
        cfg.dispersion = parse_dispersion(doc.at("dispersion"));
    cfg.oracle = parse_oracle(
        doc.contains("oracle") ? doc.at("oracle") : json::object(), cfg.molecule);
    if (doc.contains("validation"))
        cfg.thresholds = parse_thresholds(doc.at("validation"));
    if (doc.contains("output")) cfg.output = parse_output(doc.at("output"));
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc.at("sweep"));

    cfg.echo = echo_config(cfg);
    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return parse_config_json(doc);
}

SweepPoint apply_sweep_value(const RunConfig& base, const std::string& path,
                             double value) {
    const MoleculeParams& m = base.molecule;
    const DriveParams& d = base.drive;
    auto mol = [&](double o0, double ov, double gp, double gv, double g,
                   double deg) {
        return SweepPoint{MoleculeParams(o0, ov, gp, gv, g, deg), d,
                          base.environment};
    };
    auto drv = [&](double wv, double rv, double wi, double ri) {
        return SweepPoint{m, DriveParams(wv, rv, wi, ri), base.environment};
    };
    try {
        if (path == "molecule.omega0_eV")
            return mol(value, m.omega_v, m.gamma_perp, m.gamma_v, m.g, m.d_eg);
        if (path == "molecule.omega_v_eV")
            return mol(m.omega0, value, m.gamma_perp, m.gamma_v, m.g, m.d_eg);
        if (path == "molecule.gamma_perp_eV")
            return mol(m.omega0, m.omega_v, value, m.gamma_v, m.g, m.d_eg);
        if (path == "molecule.gamma_v_eV")
            return mol(m.omega0, m.omega_v, m.gamma_perp, value, m.g, m.d_eg);
        if (path == "molecule.g_eV")
            return mol(m.omega0, m.omega_v, m.gamma_perp, m.gamma_v, value,
                       m.d_eg);
        if (path == "molecule.d_eg_e_nm")
            return mol(m.omega0, m.omega_v, m.gamma_perp, m.gamma_v, m.g, value);
        if (path == "drive.omega_vis_eV")
            return drv(value, d.rabi_vis, d.omega_ir, d.rabi_ir);
        if (path == "drive.rabi_vis_eV")
            return drv(d.omega_vis, value, d.omega_ir, d.rabi_ir);
        if (path == "drive.omega_ir_eV")
            return drv(d.omega_vis, d.rabi_vis, value, d.rabi_ir);
        if (path == "drive.rabi_ir_eV")
            return drv(d.omega_vis, d.rabi_vis, d.omega_ir, value);
        if (path == "environment.kT_eV")
            return SweepPoint{m, d, Environment(value)};
    } catch (const std::invalid_argument& e) {
        throw ConfigError("sweep value " + std::to_string(value) + " for " +
                          path + " is invalid: " + e.what());
    }
    throw ConfigError("sweep.parameter: unsupported path \"" + path + "\"");
}

}  // namespace ramanpump::cli
