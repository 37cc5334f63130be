#pragma once

#include <string>
#include <vector>

namespace ramanpump {

/// Provenance of a spectral line.
enum class LineLabel {
    rayleigh_vis,
    rayleigh_ir,
    stokes_vis,
    antistokes_vis,
    stokes_ir,
    antistokes_ir,
    coherent_stokes,
    coherent_antistokes,
};

std::string to_string(LineLabel label);

/// Infinitely narrow line, kept symbolic: (center, integrated weight).
struct DeltaLine {
    double center;  ///< [eV]
    double weight;  ///< [arb. intensity]
    LineLabel label;
};

/// Lorentzian line. Evaluated as weight * hw / ((center - omega)^2 + hw^2/4),
/// so hw is the full width at half maximum and the area is 2*pi*weight.
struct LorentzLine {
    double center;  ///< [eV]
    double weight;  ///< [arb. intensity]
    double hw;      ///< width parameter, equal to gamma_v [eV]
    LineLabel label;
};

/// Symbolic emission spectrum: delta lines plus Lorentzian lines. Weights are
/// expressed in units where the universal radiated-power prefactor is 1.
struct SpectrumModel {
    std::vector<DeltaLine> delta_lines;
    std::vector<LorentzLine> lorentz_lines;
};

}  // namespace ramanpump
