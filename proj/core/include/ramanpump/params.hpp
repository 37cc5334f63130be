#pragma once

#include <string>
#include <vector>

namespace ramanpump {

/// Two-level-system and vibrational-mode constants of a single molecule.
/// All energies in eV (hbar = 1), dipole moment in e*nm.
struct MoleculeParams {
    double omega0;       ///< electronic transition energy
    double omega_v;      ///< vibrational quantum
    double gamma_perp;   ///< TLS transverse relaxation rate
    double gamma_v;      ///< vibrational amplitude decay rate
    double g;            ///< electron-vibration (Froehlich) coupling
    double d_eg;         ///< transition dipole magnitude [e nm]

    MoleculeParams(double omega0, double omega_v, double gamma_perp,
                   double gamma_v, double g, double d_eg);
};

/// Probe (visible) and pump (IR) field parameters. Rabi energies are inputs
/// directly; the field amplitude never appears separately.
struct DriveParams {
    double omega_vis;  ///< probe frequency
    double rabi_vis;   ///< probe Rabi energy
    double omega_ir;   ///< IR pump frequency
    double rabi_ir;    ///< IR Rabi energy

    DriveParams(double omega_vis, double rabi_vis, double omega_ir,
                double rabi_ir);
};

/// Thermal bath, characterised solely by its temperature as an energy.
struct Environment {
    double kT;  ///< bath temperature [eV]

    explicit Environment(double kT);

    /// Bose-Einstein occupation of a mode with quantum omega_v.
    double n_bar(double omega_v) const;
};

/// Bose-Einstein occupation 1/(exp(omega_v/kT) - 1). This is also the
/// steady-state number of incoherent vibrational quanta.
double thermal_occupation(double omega_v, double kT);

/// Largest drive-strength-to-detuning ratio of the two fields. The
/// perturbative solutions are valid while this is small.
double perturbation_parameter(const MoleculeParams& mol,
                              const DriveParams& drive);

/// Factors that quantify the ">>" regime assumptions. A ratio has to exceed
/// the factor for the assumption to count as satisfied.
struct ValidationThresholds {
    double detuning_factor = 10.0;  ///< |omega_x - omega0| vs gamma_perp
    double kt_factor = 10.0;        ///< omega0 vs kT
    double epsilon_max = 0.1;       ///< perturbation parameter bound
};

/// Outcome of the regime check: the perturbation parameter plus one entry
/// per violated assumption. Never throws; sweeps may probe the boundary.
struct Diagnostics {
    double epsilon = 0.0;
    std::vector<std::string> warnings;
    bool valid = false;
};

Diagnostics validate_params(const MoleculeParams& mol,
                            const DriveParams& drive,
                            const Environment& env,
                            const ValidationThresholds& thresholds = {});

}  // namespace ramanpump
