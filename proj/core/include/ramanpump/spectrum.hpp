#pragma once

#include <optional>
#include <vector>

#include "ramanpump/spectrum_model.hpp"

namespace ramanpump {

/// Frequency grid: either uniform over [omega_min, omega_max] or an explicit
/// strictly increasing point list.
class FrequencyGrid {
  public:
    FrequencyGrid(double omega_min, double omega_max, std::size_t n_points);
    explicit FrequencyGrid(std::vector<double> points);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    /// Default probe-centered view: 2001 points spanning
    /// omega_vis -+ 1.5 omega_v.
    static FrequencyGrid probe_centered(double omega_vis, double omega_v);

  private:
    std::vector<double> points_;
};

/// Spectrum evaluated on a grid. Delta lines stay separate markers; they are
/// never folded into the sampled continuum.
struct SampledSpectrum {
    std::vector<double> omega;        ///< [eV]
    std::vector<double> intensity;    ///< [arb.]
    std::vector<DeltaLine> delta_markers;
    /// Width used when deltas were drawn into the continuum for plotting
    /// convenience; unset for faithful sampling.
    std::optional<double> delta_render_width;
};

struct SampleOptions {
    /// If set, additionally draw each delta line as a Lorentzian of this
    /// width into the continuum (plotting aid only; markers are kept).
    std::optional<double> render_delta_as;
};

/// Evaluate all Lorentzians of the model on the grid; report delta lines as
/// markers.
SampledSpectrum sample(const SpectrumModel& model, const FrequencyGrid& grid,
                       const SampleOptions& options = {});

/// Which line of a SpectrumModel an operation refers to.
struct LineSelector {
    LineLabel label;
};

/// Frequency-integrated power of one line in arb. * eV units: a Lorentzian
/// of weight w integrates to 2*pi*w over the full line; a delta contributes
/// its weight.
double integrated_line_power(const SpectrumModel& model,
                             const LineSelector& selector);

}  // namespace ramanpump
