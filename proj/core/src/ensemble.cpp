#include "ramanpump/ensemble.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ramanpump/units.hpp"

namespace ramanpump {

namespace {

void check_index(double n, const char* what) {
    if (!std::isfinite(n) || n < 1.0 - 1.0e-3)
        throw std::invalid_argument(what);
}

}  // namespace

DispersionData::DispersionData(double n_vis_, double n_ir_, double n_ast_)
    : n_vis(n_vis_), n_ir(n_ir_), n_ast(n_ast_) {
    check_index(n_vis, "dispersion: n_vis out of range");
    check_index(n_ir, "dispersion: n_ir out of range");
    check_index(n_ast, "dispersion: n_ast out of range");
}

DispersionData DispersionData::constant_offset(double delta_n) {
    return DispersionData(1.0, 1.0, 1.0 + delta_n);
}

double EnsembleParams::resolve_count() const {
    std::optional<double> from_density;
    if (concentration && interaction_volume) {
        if (*concentration <= 0.0)
            throw std::invalid_argument("ensemble: concentration must be > 0");
        if (*interaction_volume <= 0.0)
            throw std::invalid_argument("ensemble: interaction_volume must be > 0");
        from_density = *concentration * *interaction_volume / units::mm3_per_cm3;
    }
    if (molecule_count) {
        if (*molecule_count < 1.0)
            throw std::invalid_argument("ensemble: molecule_count must be >= 1");
        if (from_density &&
            std::abs(*from_density / *molecule_count - 1.0) > 0.01)
            throw std::invalid_argument(
                "ensemble: molecule_count disagrees with concentration * volume by more than 1%");
        return *molecule_count;
    }
    if (from_density) return *from_density;
    throw std::invalid_argument(
        "ensemble: need molecule_count or concentration + interaction_volume");
}

double wavevector_mismatch(const DispersionData& disp,
                           const DriveParams& drive) {
    // Written with omega_ast = omega_vis + 2 omega_ir eliminated, so equal
    // indices cancel exactly and tiny index offsets stay well conditioned.
    return ((disp.n_ast - disp.n_vis) * drive.omega_vis +
            2.0 * (disp.n_ast - disp.n_ir) * drive.omega_ir) /
           units::hbar_c_ev_nm;
}

CoherenceLength coherence_length(double delta_k_per_nm) {
    CoherenceLength out;
    if (delta_k_per_nm < 0.0) {
        out.from_negative_mismatch = true;
        delta_k_per_nm = -delta_k_per_nm;
    }
    if (delta_k_per_nm == 0.0) {
        out.unbounded = true;
        out.meters = std::numeric_limits<double>::infinity();
        return out;
    }
    out.meters = 2.0 * std::numbers::pi / delta_k_per_nm / units::nm_per_m;
    return out;
}

double enhancement_factor(const EnsembleParams& ens, double n_coh,
                          double n_incoh) {
    if (n_incoh <= 0.0)
        throw std::domain_error(
            "enhancement_factor: n_incoh must be > 0 (zero-temperature comparison undefined)");
    if (n_coh < 0.0)
        throw std::domain_error("enhancement_factor: n_coh must be >= 0");
    return ens.resolve_count() * n_coh / n_incoh;
}

}  // namespace ramanpump
