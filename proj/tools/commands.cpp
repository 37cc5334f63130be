#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <mutex>
#include <thread>
#include <vector>

#include "ramanpump/analytic.hpp"
#include "ramanpump/ensemble.hpp"
#include "ramanpump/oracle.hpp"
#include "ramanpump/spectrum.hpp"
#include "report.hpp"

namespace ramanpump::cli {

namespace {

using json = nlohmann::ordered_json;

FrequencyGrid resolve_grid(const RunConfig& cfg, const RunOptions& opts) {
    if (opts.grid)
        return FrequencyGrid(opts.grid->min, opts.grid->max,
                             std::size_t(std::max(2, opts.grid->points)));
    if (cfg.output.grid_min && cfg.output.grid_max)
        return FrequencyGrid(*cfg.output.grid_min, *cfg.output.grid_max,
                             std::size_t(cfg.output.grid_points));
    return FrequencyGrid::probe_centered(cfg.drive.omega_vis,
                                         cfg.molecule.omega_v);
}

json complex_to_json(const std::complex<double>& z) {
    return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}};
}

json coherence_result(const MoleculeParams& mol, const DriveParams& drive,
                      const Environment& env) {
    const auto amp = coherent_vibration_amplitude(mol, drive);
    const double n_coh = coherent_quanta(mol, drive);
    const double n_incoh = thermal_occupation(mol.omega_v, env.kT);
    json r;
    r["n_coh"] = n_coh;
    r["n_coh_general"] = coherent_quanta_general(mol, drive);
    r["n_coh_resonant_form"] = coherent_quanta_resonant(mol, drive);
    r["n_incoh"] = n_incoh;
    r["ratio_coh_over_incoh"] = n_coh / n_incoh;
    r["b_coh"] = complex_to_json(amp.b_coh);
    r["b_coh"]["arg"] = std::arg(amp.b_coh);
    r["b_coh_frequency_eV"] = amp.frequency;
    r["coherent_stokes_antistokes_ratio"] =
        coherent_stokes_antistokes_ratio(mol, drive);
    r["incoherent_stokes_antistokes_ratio"] =
        incoherent_stokes_antistokes_ratio(env, mol);
    return r;
}

json line_model_json(const SpectrumModel& model) {
    json lines;
    lines["delta"] = json::array();
    for (const auto& d : model.delta_lines)
        lines["delta"].push_back({{"center_eV", d.center},
                                  {"weight_arb", d.weight},
                                  {"component", to_string(d.label)}});
    lines["lorentz"] = json::array();
    for (const auto& l : model.lorentz_lines)
        lines["lorentz"].push_back({{"center_eV", l.center},
                                    {"weight_arb", l.weight},
                                    {"hw_eV", l.hw},
                                    {"component", to_string(l.label)}});
    return lines;
}

RunOutcome cmd_spectrum(const RunConfig& cfg, const RunOptions& opts) {
    SpectrumModel model =
        incoherent_spectrum(cfg.molecule, cfg.drive, cfg.environment);
    const SpectrumModel coherent =
        coherent_sideband_weights(cfg.molecule, cfg.drive);
    model.delta_lines.insert(model.delta_lines.end(),
                             coherent.delta_lines.begin(),
                             coherent.delta_lines.end());

    const FrequencyGrid grid = resolve_grid(cfg, opts);

    CsvWriter continuum({"omega_eV", "intensity_arb", "component"});
    for (const auto& line : model.lorentz_lines) {
        SpectrumModel single;
        single.lorentz_lines.push_back(line);
        const SampledSpectrum s = sample(single, grid);
        for (std::size_t i = 0; i < s.omega.size(); ++i)
            continuum.add_row({format_number(s.omega[i]),
                               format_number(s.intensity[i]),
                               to_string(line.label)});
    }
    SampleOptions sample_opts;
    sample_opts.render_delta_as = cfg.output.render_delta_as;
    const SampledSpectrum total = sample(model, grid, sample_opts);
    for (std::size_t i = 0; i < total.omega.size(); ++i)
        continuum.add_row({format_number(total.omega[i]),
                           format_number(total.intensity[i]), "total"});

    json r;
    if (cfg.oracle.spectrum_enabled) {
        const SampledSpectrum oracle_spec = emission_spectrum(
            cfg.molecule, cfg.drive, cfg.environment, cfg.oracle, grid);
        for (std::size_t i = 0; i < oracle_spec.omega.size(); ++i)
            continuum.add_row({format_number(oracle_spec.omega[i]),
                               format_number(oracle_spec.intensity[i]),
                               "oracle"});
        r["oracle_spectrum_included"] = true;
    }

    CsvWriter deltas({"omega_eV", "weight_arb", "component"});
    for (const auto& d : model.delta_lines)
        deltas.add_row({format_number(d.center), format_number(d.weight),
                        to_string(d.label)});

    continuum.write(opts.out_dir / "spectrum.csv");
    deltas.write(opts.out_dir / "spectrum.deltas.csv");

    r["lines"] = line_model_json(model);
    if (total.delta_render_width)
        r["delta_render_width_eV"] = *total.delta_render_width;
    r["files"] = {{"continuum", "spectrum.csv"},
                  {"deltas", "spectrum.deltas.csv"}};
    return {r, false};
}

RunOutcome cmd_coherence(const RunConfig& cfg, const RunOptions&) {
    return {coherence_result(cfg.molecule, cfg.drive, cfg.environment), false};
}

RunOutcome cmd_chi3(const RunConfig& cfg, const RunOptions& opts) {
    if (!cfg.ensemble || !cfg.ensemble->concentration)
        throw ConfigError("chi3 needs ensemble.concentration_cm3");
    const double n = *cfg.ensemble->concentration;

    const double gv = cfg.molecule.gamma_v;
    double lo = -10.0 * gv, hi = 10.0 * gv;
    int points = 401;
    if (opts.grid) {
        lo = opts.grid->min;
        hi = opts.grid->max;
        points = std::max(2, opts.grid->points);
    }

    CsvWriter csv({"detuning_eV", "chi3_stokes_re", "chi3_stokes_im",
                   "chi3_stokes_abs", "chi3_antistokes_re",
                   "chi3_antistokes_im", "chi3_antistokes_abs"});
    for (int i = 0; i < points; ++i) {
        const double detuning = lo + (hi - lo) * double(i) / double(points - 1);
        const double omega_ir = 0.5 * (cfg.molecule.omega_v - detuning);
        if (!(omega_ir > 0.0) || !(omega_ir < cfg.drive.omega_vis)) continue;
        DriveParams d(cfg.drive.omega_vis, cfg.drive.rabi_vis, omega_ir,
                      cfg.drive.rabi_ir);
        const Chi3Pair pair = chi3(cfg.molecule, d, n);
        csv.add_row({format_number(detuning),
                     format_number(pair.stokes.value.real()),
                     format_number(pair.stokes.value.imag()),
                     format_number(std::abs(pair.stokes.value)),
                     format_number(pair.antistokes.value.real()),
                     format_number(pair.antistokes.value.imag()),
                     format_number(std::abs(pair.antistokes.value))});
    }
    csv.write(opts.out_dir / "chi3.csv");

    const Chi3Pair at_config = chi3(cfg.molecule, cfg.drive, n);
    json r;
    r["chi3_stokes"] = complex_to_json(at_config.stokes.value);
    r["chi3_antistokes"] = complex_to_json(at_config.antistokes.value);
    r["bracket_stokes_abs"] = std::abs(
        sideband_bracket(cfg.molecule, cfg.drive, SidebandBranch::stokes));
    r["bracket_antistokes_abs"] = std::abs(
        sideband_bracket(cfg.molecule, cfg.drive, SidebandBranch::antistokes));
    r["units"] = "(e nm)^4 / eV^3 * cm^-3";
    r["files"] = {{"dispersion", "chi3.csv"}};
    return {r, false};
}

RunOutcome cmd_xsection(const RunConfig& cfg, const RunOptions& opts) {
    const FrequencyGrid grid = resolve_grid(cfg, opts);
    CsvWriter csv({"omega_vis_eV", "sigma_nm2"});
    int skipped = 0;
    for (double w : grid.points()) {
        if (!(w > cfg.drive.omega_ir)) {
            ++skipped;
            continue;
        }
        try {
            DriveParams d(w, cfg.drive.rabi_vis, cfg.drive.omega_ir,
                          cfg.drive.rabi_ir);
            csv.add_row({format_number(w),
                         format_number(stokes_cross_section(cfg.molecule, d))});
        } catch (const std::domain_error&) {
            ++skipped;
        }
    }
    csv.write(opts.out_dir / "xsection.csv");

    json r;
    r["sigma_nm2"] = stokes_cross_section(cfg.molecule, cfg.drive);
    r["omega_stokes_eV"] = cfg.drive.omega_vis - cfg.molecule.omega_v;
    r["skipped_grid_points"] = skipped;
    r["files"] = {{"scan", "xsection.csv"}};
    return {r, false};
}

RunOutcome cmd_enhance(const RunConfig& cfg, const RunOptions&) {
    if (!cfg.ensemble)
        throw ConfigError("enhance needs an ensemble section");

    const DispersionData disp =
        cfg.dispersion ? *cfg.dispersion : DispersionData{};
    const double delta_k = wavevector_mismatch(disp, cfg.drive);
    const CoherenceLength lc = coherence_length(delta_k);
    const double n_coh = coherent_quanta(cfg.molecule, cfg.drive);
    const double n_incoh =
        thermal_occupation(cfg.molecule.omega_v, cfg.environment.kT);
    const double count = cfg.ensemble->resolve_count();
    const double factor = enhancement_factor(*cfg.ensemble, n_coh, n_incoh);

    json r;
    r["delta_k_per_nm"] = delta_k;
    r["delta_k_per_m"] = delta_k * 1.0e9;
    r["coherence_length_m"] =
        lc.unbounded ? json("unbounded") : json(lc.meters);
    r["phase_matched"] = lc.unbounded;
    r["molecule_count"] = count;
    r["n_coh"] = n_coh;
    r["n_incoh"] = n_incoh;
    r["ratio_coh_over_incoh"] = n_coh / n_incoh;
    r["enhancement_factor"] = factor;
    return {r, false};
}

RunOutcome cmd_validate(const RunConfig& cfg, const RunOptions& opts) {
    OracleConfig oracle = cfg.oracle;
    if (opts.jobs > 0) oracle.jobs = opts.jobs;
    const ValidationReport report =
        compare_with_analytic(cfg.molecule, cfg.drive, cfg.environment, oracle);

    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"observable", row.name},
                        {"analytic", row.analytic},
                        {"oracle", row.oracle},
                        {"error", row.error},
                        {"tolerance", row.tolerance},
                        {"error_kind", row.absolute_error ? "absolute" : "relative"},
                        {"pass", row.pass}});
    json r;
    r["rows"] = rows;
    r["all_pass"] = report.all_pass;
    r["perturbation_flagged"] = report.perturbation_flagged;
    r["oracle_diagnostics"] = diagnostics_to_json(report.diagnostics);
    return {r, !report.all_pass};
}

RunOutcome cmd_sweep(const RunConfig& cfg, const RunOptions& opts) {
    if (!cfg.sweep) throw ConfigError("sweep needs a sweep section");
    const SweepConfig& sw = *cfg.sweep;

    std::vector<double> values(std::size_t(sw.points));
    for (int i = 0; i < sw.points; ++i) {
        const double f = double(i) / double(sw.points - 1);
        values[std::size_t(i)] =
            sw.scale == SweepScale::log
                ? sw.min * std::pow(sw.max / sw.min, f)
                : sw.min + (sw.max - sw.min) * f;
    }

    struct PointResult {
        double epsilon, n_coh, n_incoh, ratio, abs_b_coh;
    };
    std::vector<PointResult> results(values.size());

    int jobs = opts.jobs > 0 ? opts.jobs
                             : int(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, int(values.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= values.size()) return;
            try {
                const SweepPoint p =
                    apply_sweep_value(cfg, sw.parameter, values[i]);
                PointResult& out = results[i];
                out.epsilon =
                    validate_params(p.molecule, p.drive, p.environment,
                                    cfg.thresholds)
                        .epsilon;
                out.n_coh = coherent_quanta(p.molecule, p.drive);
                out.n_incoh =
                    thermal_occupation(p.molecule.omega_v, p.environment.kT);
                out.ratio = out.n_coh / out.n_incoh;
                out.abs_b_coh = std::abs(
                    coherent_vibration_amplitude(p.molecule, p.drive).b_coh);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);

    CsvWriter csv({"parameter", "value", "observable", "result"});
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string v = format_number(values[i]);
        const PointResult& p = results[i];
        csv.add_row({sw.parameter, v, "epsilon", format_number(p.epsilon)});
        csv.add_row({sw.parameter, v, "n_coh", format_number(p.n_coh)});
        csv.add_row({sw.parameter, v, "n_incoh", format_number(p.n_incoh)});
        csv.add_row(
            {sw.parameter, v, "ratio_coh_over_incoh", format_number(p.ratio)});
        csv.add_row({sw.parameter, v, "abs_b_coh", format_number(p.abs_b_coh)});
    }
    csv.write(opts.out_dir / "sweep.csv");

    json r;
    r["parameter"] = sw.parameter;
    r["points"] = sw.points;
    r["scale"] = sw.scale == SweepScale::log ? "log" : "linear";
    r["files"] = {{"sweep", "sweep.csv"}};
    return {r, false};
}

}  // namespace

bool is_known_command(const std::string& command) {
    static const std::vector<std::string> known{
        "spectrum", "coherence", "chi3", "xsection",
        "enhance",  "validate",  "sweep"};
    return std::find(known.begin(), known.end(), command) != known.end();
}

RunOutcome run_command(const std::string& command, const RunConfig& cfg,
                       const RunOptions& opts) {
    if (command == "spectrum") return cmd_spectrum(cfg, opts);
    if (command == "coherence") return cmd_coherence(cfg, opts);
    if (command == "chi3") return cmd_chi3(cfg, opts);
    if (command == "xsection") return cmd_xsection(cfg, opts);
    if (command == "enhance") return cmd_enhance(cfg, opts);
    if (command == "validate") return cmd_validate(cfg, opts);
    if (command == "sweep") return cmd_sweep(cfg, opts);
    throw ConfigError("unknown subcommand: " + command);
}

}  // namespace ramanpump::cli
