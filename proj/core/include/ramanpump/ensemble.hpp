#pragma once

#include <optional>

#include "ramanpump/params.hpp"

namespace ramanpump {

/// Refractive indices at the three legs of the forward four-wave-mixing
/// geometry. The constant-offset shorthand puts the whole index mismatch on
/// the anti-Stokes leg.
struct DispersionData {
    double n_vis = 1.0;
    double n_ir = 1.0;
    double n_ast = 1.0;

    DispersionData() = default;
    DispersionData(double n_vis, double n_ir, double n_ast);

    static DispersionData constant_offset(double delta_n);
};

/// Size of the illuminated ensemble: either an explicit molecule count or a
/// concentration [cm^-3] with an interaction volume [mm^3].
struct EnsembleParams {
    std::optional<double> concentration;       ///< [cm^-3]
    std::optional<double> interaction_volume;  ///< [mm^3]
    std::optional<double> molecule_count;

    /// Resolved molecule count. When both the explicit count and the
    /// concentration * volume product are given they must agree within 1%.
    double resolve_count() const;
};

/// Collinear wavevector mismatch [nm^-1] of the anti-Stokes leg against the
/// driving fields; the anti-Stokes frequency is omega_vis + 2 omega_ir.
double wavevector_mismatch(const DispersionData& disp,
                           const DriveParams& drive);

/// Propagation distance over which the induced polarization stays in phase.
struct CoherenceLength {
    double meters = 0.0;
    bool unbounded = false;  ///< exact phase matching, delta_k = 0
    bool from_negative_mismatch = false;
};

CoherenceLength coherence_length(double delta_k_per_nm);

/// Intensity gain of the coherent signal over the spontaneous one for N
/// molecules: N * n_coh / n_incoh.
double enhancement_factor(const EnsembleParams& ens, double n_coh,
                          double n_incoh);

}  // namespace ramanpump
