#pragma once

#include <complex>
#include <vector>

#include "ramanpump/params.hpp"
#include "ramanpump/spectrum_model.hpp"

namespace ramanpump {

using complexd = std::complex<double>;

/// First-order TLS response: four dimensionless amplitudes attached to the
/// oscillation factors e^{-i omega_vis t}, e^{+i omega_vis t},
/// e^{-i omega_ir t}, e^{+i omega_ir t}, in that order. The co-rotating
/// amplitudes are rabi / (2 (omega - omega0)), the counter-rotating ones
/// -rabi / (2 (omega + omega0)).
struct LinearResponse {
    complexd c_vis_minus;
    complexd c_vis_plus;
    complexd c_ir_minus;
    complexd c_ir_plus;
};

/// One frequency component of the parametric force that the optically driven
/// TLS exerts on the vibrational mode.
enum class ForceLabel { two_vis, vis_minus_ir, vis_plus_ir, two_ir, dc };

std::string to_string(ForceLabel label);

struct ForceComponent {
    double frequency;        ///< [eV], non-negative
    complexd complex_weight; ///< coefficient of e^{-i frequency t}
    ForceLabel label;
};

/// Third-order susceptibility for one sideband. The value carries the raw
/// concentration * d_eg^4 / energy^3 combination, i.e. (e nm)^4 eV^-3 cm^-3.
enum class SidebandBranch { stokes, antistokes };

struct Chi3Value {
    complexd value;
    SidebandBranch branch;
};

struct Chi3Pair {
    Chi3Value stokes;
    Chi3Value antistokes;
};

/// First-order TLS amplitudes for both drives. Imaginary parts of the
/// denominators are dropped; exact resonance is a domain error.
LinearResponse linear_response(const MoleculeParams& mol,
                               const DriveParams& drive);

/// The five frequency components (DC, 2 omega_vis, omega_vis -+ omega_ir,
/// 2 omega_ir) of the product force -i g sigma1^dag sigma1 acting on the
/// vibrational mode. Weights are bilinear in the linear-response amplitudes.
std::vector<ForceComponent> effective_force_components(
    const MoleculeParams& mol, const DriveParams& drive);

/// Steady-state coherent vibrational amplitude driven at twice the IR
/// frequency, plus that frequency.
struct CoherentAmplitude {
    complexd b_coh;
    double frequency;  ///< 2 * omega_ir [eV]
};

CoherentAmplitude coherent_vibration_amplitude(const MoleculeParams& mol,
                                               const DriveParams& drive);

/// Number of coherent vibrational quanta. At exact resonance
/// (omega_v == 2 * omega_ir) this is the omega_ir << omega0 closed form;
/// otherwise it falls back to the full |b_coh|^2.
double coherent_quanta(const MoleculeParams& mol, const DriveParams& drive);

/// |b_coh|^2 from the full driven-oscillator amplitude (valid at any
/// detuning).
double coherent_quanta_general(const MoleculeParams& mol,
                               const DriveParams& drive);

/// Resonant closed form (1/16)(rabi_ir/omega0)^4 (g/gamma_v)^2; assumes
/// 2 omega_ir = omega_v and omega_ir << omega0. The general path exceeds it
/// by a relative O((omega_ir/omega0)^2).
double coherent_quanta_resonant(const MoleculeParams& mol,
                                const DriveParams& drive);

/// Rayleigh lines of both drives plus the four thermal Raman sidebands.
/// Always two delta lines and four Lorentzians; unlit drives keep their
/// lines with zero weight.
SpectrumModel incoherent_spectrum(const MoleculeParams& mol,
                                  const DriveParams& drive,
                                  const Environment& env);

/// The two coherent sidebands at omega_vis +- 2 omega_ir as delta lines.
SpectrumModel coherent_sideband_weights(const MoleculeParams& mol,
                                        const DriveParams& drive);

/// Resonant enhancement bracket shared by the coherent sidebands and chi3:
/// 1 + g^2 / (8 (omega_vis - omega0) ((omega_v - 2 omega_ir) -+ i gamma_v)),
/// with the minus sign for the anti-Stokes branch.
complexd sideband_bracket(const MoleculeParams& mol, const DriveParams& drive,
                          SidebandBranch branch);

/// Intensity ratio of the thermal anti-Stokes and Stokes sidebands,
/// exp(-omega_v / kT). Equals n_bar / (1 + n_bar).
double incoherent_stokes_antistokes_ratio(const Environment& env,
                                          const MoleculeParams& mol);

/// Intensity ratio of the coherent Stokes and anti-Stokes peaks,
/// ((omega_ast - omega0)/(omega_st - omega0))^2. Temperature never enters.
double coherent_stokes_antistokes_ratio(const MoleculeParams& mol,
                                        const DriveParams& drive);

/// Third-order susceptibilities of both sidebands for a molecular gas of the
/// given concentration [cm^-3].
Chi3Pair chi3(const MoleculeParams& mol, const DriveParams& drive,
              double concentration);

/// Frequency-integrated spontaneous Stokes cross section [nm^2], normalized
/// to the probe flux (independent of rabi_vis).
double stokes_cross_section(const MoleculeParams& mol,
                            const DriveParams& drive);

/// Stokes-branch chi3 reconstructed from a measured cross section; collapses
/// onto the resonant part of chi3() when fed stokes_cross_section().
Chi3Value chi3_from_cross_section(const MoleculeParams& mol,
                                  const DriveParams& drive,
                                  double concentration, double sigma);

}  // namespace ramanpump
