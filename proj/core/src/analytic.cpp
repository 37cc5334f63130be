#include "ramanpump/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ramanpump/units.hpp"

namespace ramanpump {

namespace {

constexpr complexd kImag{0.0, 1.0};

void require_nonzero(double x, const char* what) {
    if (x == 0.0) throw std::domain_error(what);
}

}  // namespace

std::string to_string(LineLabel label) {
    switch (label) {
        case LineLabel::rayleigh_vis: return "rayleigh_vis";
        case LineLabel::rayleigh_ir: return "rayleigh_ir";
        case LineLabel::stokes_vis: return "stokes_vis";
        case LineLabel::antistokes_vis: return "antistokes_vis";
        case LineLabel::stokes_ir: return "stokes_ir";
        case LineLabel::antistokes_ir: return "antistokes_ir";
        case LineLabel::coherent_stokes: return "coherent_stokes";
        case LineLabel::coherent_antistokes: return "coherent_antistokes";
    }
    return "unknown";
}

std::string to_string(ForceLabel label) {
    switch (label) {
        case ForceLabel::two_vis: return "2*omega_vis";
        case ForceLabel::vis_minus_ir: return "omega_vis-omega_ir";
        case ForceLabel::vis_plus_ir: return "omega_vis+omega_ir";
        case ForceLabel::two_ir: return "2*omega_ir";
        case ForceLabel::dc: return "dc";
    }
    return "unknown";
}

LinearResponse linear_response(const MoleculeParams& mol,
                               const DriveParams& drive) {
    require_nonzero(drive.omega_vis - mol.omega0,
                    "linear_response: probe exactly resonant with omega0");
    require_nonzero(drive.omega_ir - mol.omega0,
                    "linear_response: IR pump exactly resonant with omega0");
    // The counter-rotating amplitudes carry a minus sign: the static limit
    // of the driven TLS polarization is -u/omega0, and the full-quantum
    // propagation confirms the resulting quadrature phase of the coherent
    // vibration.
    LinearResponse r;
    r.c_vis_minus = drive.rabi_vis / (2.0 * (drive.omega_vis - mol.omega0));
    r.c_vis_plus = -drive.rabi_vis / (2.0 * (drive.omega_vis + mol.omega0));
    r.c_ir_minus = drive.rabi_ir / (2.0 * (drive.omega_ir - mol.omega0));
    r.c_ir_plus = -drive.rabi_ir / (2.0 * (drive.omega_ir + mol.omega0));
    return r;
}

std::vector<ForceComponent> effective_force_components(
    const MoleculeParams& mol, const DriveParams& drive) {
    const LinearResponse lr = linear_response(mol, drive);
    const complexd mig = -kImag * mol.g;

    // The TLS population sigma1^dag sigma1 is a bilinear form in the four
    // oscillating amplitudes; collecting equal frequency differences leaves
    // exactly five non-negative frequencies.
    const complexd c_vm = lr.c_vis_minus;  // e^{-i w_vis t}
    const complexd c_vp = lr.c_vis_plus;   // e^{+i w_vis t}
    const complexd c_im = lr.c_ir_minus;   // e^{-i w_ir t}
    const complexd c_ip = lr.c_ir_plus;    // e^{+i w_ir t}

    std::vector<ForceComponent> out;
    out.reserve(5);
    out.push_back({2.0 * drive.omega_vis, mig * std::conj(c_vp) * c_vm,
                   ForceLabel::two_vis});
    out.push_back({drive.omega_vis - drive.omega_ir,
                   mig * (std::conj(c_im) * c_vm + std::conj(c_vp) * c_ip),
                   ForceLabel::vis_minus_ir});
    out.push_back({drive.omega_vis + drive.omega_ir,
                   mig * (std::conj(c_ip) * c_vm + std::conj(c_vp) * c_im),
                   ForceLabel::vis_plus_ir});
    out.push_back({2.0 * drive.omega_ir, mig * std::conj(c_ip) * c_im,
                   ForceLabel::two_ir});
    out.push_back({0.0,
                   mig * (std::norm(c_vm) + std::norm(c_vp) + std::norm(c_im) +
                          std::norm(c_ip)),
                   ForceLabel::dc});
    return out;
}

CoherentAmplitude coherent_vibration_amplitude(const MoleculeParams& mol,
                                               const DriveParams& drive) {
    const double denom_e = mol.omega0 * mol.omega0 - drive.omega_ir * drive.omega_ir;
    require_nonzero(denom_e,
                    "coherent_vibration_amplitude: IR pump resonant with omega0");
    const complexd resonant_denom =
        complexd(mol.omega_v - 2.0 * drive.omega_ir, -mol.gamma_v);
    // overall sign follows the -i(g/4) force component; at resonance the
    // amplitude sits at -i times a positive magnitude
    CoherentAmplitude amp;
    amp.b_coh = -0.25 * mol.g / resonant_denom * drive.rabi_ir * drive.rabi_ir /
                denom_e;
    amp.frequency = 2.0 * drive.omega_ir;
    return amp;
}

double coherent_quanta_general(const MoleculeParams& mol,
                               const DriveParams& drive) {
    return std::norm(coherent_vibration_amplitude(mol, drive).b_coh);
}

double coherent_quanta_resonant(const MoleculeParams& mol,
                                const DriveParams& drive) {
    const double x = drive.rabi_ir / mol.omega0;
    const double y = mol.g / mol.gamma_v;
    return x * x * x * x * y * y / 16.0;
}

double coherent_quanta(const MoleculeParams& mol, const DriveParams& drive) {
    if (mol.omega_v == 2.0 * drive.omega_ir)
        return coherent_quanta_resonant(mol, drive);
    return coherent_quanta_general(mol, drive);
}

SpectrumModel incoherent_spectrum(const MoleculeParams& mol,
                                  const DriveParams& drive,
                                  const Environment& env) {
    const double nbar = env.n_bar(mol.omega_v);
    const double g2 = mol.g * mol.g;

    auto rayleigh_weight = [&](double omega, double rabi) {
        const double det = omega - mol.omega0;
        require_nonzero(det, "incoherent_spectrum: drive resonant with omega0");
        const double amp = rabi / det;
        return 0.25 * std::pow(omega, 4) * amp * amp;
    };
    auto sideband_weight = [&](double omega, double rabi, double center,
                               double occupation) {
        const double det = omega - mol.omega0;
        const double emit_det = mol.omega0 - center;
        require_nonzero(emit_det,
                        "incoherent_spectrum: sideband resonant with omega0");
        const double amp = rabi / det;
        return 0.25 * amp * amp * std::pow(center, 4) * g2 /
               (emit_det * emit_det) * occupation;
    };

    SpectrumModel m;
    m.delta_lines.push_back({drive.omega_vis,
                             rayleigh_weight(drive.omega_vis, drive.rabi_vis),
                             LineLabel::rayleigh_vis});
    m.delta_lines.push_back({drive.omega_ir,
                             rayleigh_weight(drive.omega_ir, drive.rabi_ir),
                             LineLabel::rayleigh_ir});

    const double st_vis = drive.omega_vis - mol.omega_v;
    const double ast_vis = drive.omega_vis + mol.omega_v;
    const double st_ir = drive.omega_ir - mol.omega_v;
    const double ast_ir = drive.omega_ir + mol.omega_v;
    m.lorentz_lines.push_back(
        {st_vis, sideband_weight(drive.omega_vis, drive.rabi_vis, st_vis, 1.0 + nbar),
         mol.gamma_v, LineLabel::stokes_vis});
    m.lorentz_lines.push_back(
        {ast_vis, sideband_weight(drive.omega_vis, drive.rabi_vis, ast_vis, nbar),
         mol.gamma_v, LineLabel::antistokes_vis});
    m.lorentz_lines.push_back(
        {st_ir, sideband_weight(drive.omega_ir, drive.rabi_ir, st_ir, 1.0 + nbar),
         mol.gamma_v, LineLabel::stokes_ir});
    m.lorentz_lines.push_back(
        {ast_ir, sideband_weight(drive.omega_ir, drive.rabi_ir, ast_ir, nbar),
         mol.gamma_v, LineLabel::antistokes_ir});
    return m;
}

complexd sideband_bracket(const MoleculeParams& mol, const DriveParams& drive,
                          SidebandBranch branch) {
    const double probe_det = drive.omega_vis - mol.omega0;
    require_nonzero(probe_det, "sideband_bracket: probe resonant with omega0");
    const double sign = branch == SidebandBranch::antistokes ? -1.0 : 1.0;
    const complexd resonant_denom(mol.omega_v - 2.0 * drive.omega_ir,
                                  sign * mol.gamma_v);
    return 1.0 + mol.g * mol.g / (8.0 * probe_det * resonant_denom);
}

SpectrumModel coherent_sideband_weights(const MoleculeParams& mol,
                                        const DriveParams& drive) {
    const double omega_st = drive.omega_vis - 2.0 * drive.omega_ir;
    const double omega_ast = drive.omega_vis + 2.0 * drive.omega_ir;
    if (omega_st <= 0.0)
        throw std::domain_error(
            "coherent_sideband_weights: Stokes line at non-positive frequency");
    const double denom_e =
        mol.omega0 * mol.omega0 - drive.omega_ir * drive.omega_ir;
    require_nonzero(denom_e,
                    "coherent_sideband_weights: IR pump resonant with omega0");

    const double common = drive.rabi_vis * drive.rabi_vis *
                          std::pow(drive.rabi_ir, 4) / (denom_e * denom_e);

    auto line_weight = [&](double omega, SidebandBranch branch) {
        const double emit_det = omega - mol.omega0;
        require_nonzero(emit_det,
                        "coherent_sideband_weights: sideband resonant with omega0");
        return common * std::norm(sideband_bracket(mol, drive, branch)) *
               std::pow(omega, 4) / (emit_det * emit_det);
    };

    SpectrumModel m;
    m.delta_lines.push_back({omega_st,
                             line_weight(omega_st, SidebandBranch::stokes),
                             LineLabel::coherent_stokes});
    m.delta_lines.push_back({omega_ast,
                             line_weight(omega_ast, SidebandBranch::antistokes),
                             LineLabel::coherent_antistokes});
    return m;
}

double incoherent_stokes_antistokes_ratio(const Environment& env,
                                          const MoleculeParams& mol) {
    return std::exp(-mol.omega_v / env.kT);
}

double coherent_stokes_antistokes_ratio(const MoleculeParams& mol,
                                        const DriveParams& drive) {
    const double omega_st = drive.omega_vis - 2.0 * drive.omega_ir;
    const double omega_ast = drive.omega_vis + 2.0 * drive.omega_ir;
    const double st_det = omega_st - mol.omega0;
    require_nonzero(st_det,
                    "coherent_stokes_antistokes_ratio: Stokes line resonant with omega0");
    const double r = (omega_ast - mol.omega0) / st_det;
    return r * r;
}

Chi3Pair chi3(const MoleculeParams& mol, const DriveParams& drive,
              double concentration) {
    if (concentration < 0.0)
        throw std::domain_error("chi3: concentration must be >= 0");
    const double denom_e =
        mol.omega0 * mol.omega0 - drive.omega_ir * drive.omega_ir;
    require_nonzero(denom_e, "chi3: IR pump resonant with omega0");
    const double d4 = std::pow(mol.d_eg, 4);

    auto branch_value = [&](SidebandBranch branch) {
        const double omega = branch == SidebandBranch::antistokes
                                 ? drive.omega_vis + 2.0 * drive.omega_ir
                                 : drive.omega_vis - 2.0 * drive.omega_ir;
        if (omega <= 0.0)
            throw std::domain_error("chi3: sideband at non-positive frequency");
        const double emit_det = omega - mol.omega0;
        require_nonzero(emit_det, "chi3: sideband resonant with omega0");
        return Chi3Value{concentration * d4 / (denom_e * emit_det) *
                             sideband_bracket(mol, drive, branch),
                         branch};
    };

    return {branch_value(SidebandBranch::stokes),
            branch_value(SidebandBranch::antistokes)};
}

double stokes_cross_section(const MoleculeParams& mol,
                            const DriveParams& drive) {
    const double omega_st = drive.omega_vis - mol.omega_v;
    if (omega_st <= 0.0)
        throw std::domain_error(
            "stokes_cross_section: Stokes line at non-positive frequency");
    const double probe_det = drive.omega_vis - mol.omega0;
    const double emit_det = mol.omega0 - omega_st;
    require_nonzero(probe_det, "stokes_cross_section: probe resonant with omega0");
    require_nonzero(emit_det, "stokes_cross_section: Stokes line resonant with omega0");

    const double k_st = omega_st / units::hbar_c_ev_nm;        // nm^-1
    const double d2 = mol.d_eg * mol.d_eg * units::e_sq_ev_nm;  // eV nm^3
    return (4.0 * std::numbers::pi / 3.0) * std::pow(k_st, 4) * d2 * d2 *
           mol.g * mol.g / (probe_det * probe_det * emit_det * emit_det);
}

Chi3Value chi3_from_cross_section(const MoleculeParams& mol,
                                  const DriveParams& drive,
                                  double concentration, double sigma) {
    if (sigma < 0.0)
        throw std::domain_error("chi3_from_cross_section: sigma must be >= 0");
    const double omega_st = drive.omega_vis - 2.0 * drive.omega_ir;
    if (omega_st <= 0.0)
        throw std::domain_error(
            "chi3_from_cross_section: Stokes line at non-positive frequency");
    const double denom_e =
        mol.omega0 * mol.omega0 - drive.omega_ir * drive.omega_ir;
    require_nonzero(denom_e, "chi3_from_cross_section: IR pump resonant with omega0");

    const double k_st = omega_st / units::hbar_c_ev_nm;
    const complexd resonant_denom(mol.omega_v - 2.0 * drive.omega_ir,
                                  mol.gamma_v);
    // The cross section carries the squared Gaussian e^2; divide it back out
    // so the returned value is the same raw d_eg^4 combination as chi3().
    const double sigma_raw =
        sigma / (units::e_sq_ev_nm * units::e_sq_ev_nm);
    const complexd value = 3.0 / (32.0 * std::numbers::pi) * concentration /
                           std::pow(k_st, 4) *
                           (drive.omega_vis - mol.omega0) *
                           (omega_st - mol.omega0) /
                           (denom_e * resonant_denom) * sigma_raw;
    return {value, SidebandBranch::stokes};
}

}  // namespace ramanpump
