#include "ramanpump/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramanpump {

namespace {

double lorentzian(double omega, double center, double weight, double hw) {
    const double d = center - omega;
    return weight * hw / (d * d + 0.25 * hw * hw);
}

}  // namespace

FrequencyGrid::FrequencyGrid(double omega_min, double omega_max,
                             std::size_t n_points) {
    if (!(omega_min < omega_max))
        throw std::invalid_argument("grid: omega_min must be < omega_max");
    if (n_points < 2)
        throw std::invalid_argument("grid: need at least 2 points");
    points_.resize(n_points);
    const double step = (omega_max - omega_min) / double(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i)
        points_[i] = omega_min + step * double(i);
    points_.back() = omega_max;
}

FrequencyGrid::FrequencyGrid(std::vector<double> points)
    : points_(std::move(points)) {
    if (points_.size() < 2)
        throw std::invalid_argument("grid: need at least 2 points");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i - 1] < points_[i]))
            throw std::invalid_argument("grid: points must be strictly increasing");
}

FrequencyGrid FrequencyGrid::probe_centered(double omega_vis, double omega_v) {
    return FrequencyGrid(omega_vis - 1.5 * omega_v, omega_vis + 1.5 * omega_v,
                         2001);
}

SampledSpectrum sample(const SpectrumModel& model, const FrequencyGrid& grid,
                       const SampleOptions& options) {
    SampledSpectrum out;
    out.omega = grid.points();
    out.intensity.assign(grid.size(), 0.0);
    for (const auto& line : model.lorentz_lines) {
        for (std::size_t i = 0; i < out.omega.size(); ++i)
            out.intensity[i] += lorentzian(out.omega[i], line.center,
                                           line.weight, line.hw);
    }
    out.delta_markers = model.delta_lines;
    if (options.render_delta_as) {
        const double width = *options.render_delta_as;
        if (!(width > 0.0))
            throw std::invalid_argument("sample: render_delta_as width must be > 0");
        // Plotting aid: a rendered delta keeps its integrated weight, so the
        // Lorentzian stand-in uses weight / (2 pi).
        for (const auto& line : model.delta_lines) {
            const double w = line.weight / (2.0 * std::numbers::pi);
            for (std::size_t i = 0; i < out.omega.size(); ++i)
                out.intensity[i] += lorentzian(out.omega[i], line.center, w, width);
        }
        out.delta_render_width = width;
    }
    return out;
}

double integrated_line_power(const SpectrumModel& model,
                             const LineSelector& selector) {
    for (const auto& line : model.delta_lines)
        if (line.label == selector.label) return line.weight;
    for (const auto& line : model.lorentz_lines)
        if (line.label == selector.label)
            return 2.0 * std::numbers::pi * line.weight;
    throw std::invalid_argument("integrated_line_power: no line labelled " +
                                to_string(selector.label));
}

}  // namespace ramanpump
