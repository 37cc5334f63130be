#include "ramanpump/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ramanpump {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

MoleculeParams::MoleculeParams(double omega0_, double omega_v_,
                               double gamma_perp_, double gamma_v_, double g_,
                               double d_eg_)
    : omega0(omega0_),
      omega_v(omega_v_),
      gamma_perp(gamma_perp_),
      gamma_v(gamma_v_),
      g(g_),
      d_eg(d_eg_) {
    require(omega0 > 0.0, "molecule: omega0 must be > 0");
    require(omega_v > 0.0, "molecule: omega_v must be > 0");
    require(gamma_perp > 0.0, "molecule: gamma_perp must be > 0");
    require(gamma_v > 0.0, "molecule: gamma_v must be > 0");
    // g = 0 is the decoupled limit; every Raman quantity degrades to zero
    require(g >= 0.0, "molecule: g must be >= 0");
    require(d_eg > 0.0, "molecule: d_eg must be > 0");
    require(gamma_v < omega_v, "molecule: gamma_v must be < omega_v (underdamped vibration)");
    require(gamma_perp < omega0, "molecule: gamma_perp must be < omega0");
}

DriveParams::DriveParams(double omega_vis_, double rabi_vis_, double omega_ir_,
                         double rabi_ir_)
    : omega_vis(omega_vis_),
      rabi_vis(rabi_vis_),
      omega_ir(omega_ir_),
      rabi_ir(rabi_ir_) {
    require(omega_vis >= 0.0, "drive: omega_vis must be >= 0");
    require(rabi_vis >= 0.0, "drive: rabi_vis must be >= 0");
    require(omega_ir >= 0.0, "drive: omega_ir must be >= 0");
    require(rabi_ir >= 0.0, "drive: rabi_ir must be >= 0");
    require(omega_vis > omega_ir, "drive: omega_vis must be > omega_ir");
}

Environment::Environment(double kT_) : kT(kT_) {
    require(kT > 0.0, "environment: kT must be > 0");
}

double Environment::n_bar(double omega_v) const {
    return thermal_occupation(omega_v, kT);
}

double thermal_occupation(double omega_v, double kT) {
    if (omega_v <= 0.0) throw std::domain_error("thermal_occupation: omega_v must be > 0");
    if (kT <= 0.0) throw std::domain_error("thermal_occupation: kT must be > 0");
    // expm1 keeps the high-temperature limit accurate; overflow of the
    // exponential maps cleanly onto occupation 0.
    return 1.0 / std::expm1(omega_v / kT);
}

double perturbation_parameter(const MoleculeParams& mol,
                              const DriveParams& drive) {
    const double det_vis = std::abs(drive.omega_vis - mol.omega0);
    const double det_ir = std::abs(drive.omega_ir - mol.omega0);
    if (det_vis == 0.0 || det_ir == 0.0)
        throw std::domain_error("perturbation_parameter: drive exactly resonant with omega0");
    return std::max(drive.rabi_vis / det_vis, drive.rabi_ir / det_ir);
}

Diagnostics validate_params(const MoleculeParams& mol,
                            const DriveParams& drive,
                            const Environment& env,
                            const ValidationThresholds& thresholds) {
    Diagnostics diag;
    auto warn = [&diag](const std::string& msg) { diag.warnings.push_back(msg); };

    const double det_vis = std::abs(drive.omega_vis - mol.omega0);
    const double det_ir = std::abs(drive.omega_ir - mol.omega0);

    if (det_vis < thresholds.detuning_factor * mol.gamma_perp) {
        std::ostringstream os;
        os << "probe resonant with TLS: |omega_vis - omega0| = " << det_vis
           << " < " << thresholds.detuning_factor << " * gamma_perp";
        warn(os.str());
    }
    if (det_ir < thresholds.detuning_factor * mol.gamma_perp) {
        std::ostringstream os;
        os << "IR pump resonant with TLS: |omega_ir - omega0| = " << det_ir
           << " < " << thresholds.detuning_factor << " * gamma_perp";
        warn(os.str());
    }
    if (mol.omega0 < thresholds.kt_factor * env.kT) {
        std::ostringstream os;
        os << "omega0 >> kT violated: omega0 = " << mol.omega0 << " < "
           << thresholds.kt_factor << " * kT";
        warn(os.str());
    }

    try {
        diag.epsilon = perturbation_parameter(mol, drive);
    } catch (const std::domain_error&) {
        diag.epsilon = std::numeric_limits<double>::infinity();
    }
    if (!(diag.epsilon <= thresholds.epsilon_max)) {
        std::ostringstream os;
        os << "perturbation parameter not small: epsilon = " << diag.epsilon
           << " > " << thresholds.epsilon_max;
        warn(os.str());
    }

    diag.valid = diag.warnings.empty();
    return diag;
}

}  // namespace ramanpump
