#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ramanpump/params.hpp"
#include "ramanpump/spectrum.hpp"

namespace ramanpump {

enum class SpectrumWindow { hann, rectangular };

/// Controls for the full-quantum simulation. Times are in 1/eV.
struct OracleConfig {
    int fock_cutoff = 8;
    double t_final = 0.0;
    double rtol = 1.0e-8;
    double atol = 1.0e-10;
    double demod_t_start = 0.0;
    double demod_t_end = 0.0;
    std::optional<double> n_bar_override;
    bool spectrum_enabled = false;
    double tau_max = 0.0;  ///< 0 selects 10 / gamma_v
    SpectrumWindow window = SpectrumWindow::hann;
    double truncation_threshold = 1.0e-6;
    double t_final_min_factor = 5.0;    ///< t_final vs 1/gamma_v
    double demod_start_min_factor = 3.0;  ///< demod_t_start vs 1/gamma_v
    int n_time_samples = 8;    ///< start times averaged in the spectrum
    int n_tau_samples = 4096;  ///< correlation-lag samples
    std::optional<FrequencyGrid> spectrum_grid;
    int jobs = 0;  ///< parallel workers for scans; 0 = hardware default
};

/// Density matrix on the TLS (x) truncated-Fock space, with its numerical
/// health indicators.
struct DensityState {
    Eigen::MatrixXcd rho;

    double hermiticity_error() const;  ///< max |rho - rho^dag|
    double trace_error() const;        ///< |Tr rho - 1|
    double min_eigenvalue() const;
};

/// Observables extracted from one simulation run.
struct OracleResult {
    std::complex<double> b_amplitude;  ///< demodulated <b> at 2 omega_ir
    double n_b_mean = 0.0;             ///< window-averaged <b^dag b>
    double sigma_population = 0.0;     ///< window-averaged <sigma^dag sigma>
    std::optional<SampledSpectrum> spectrum;
    double top_fock_population = 0.0;  ///< max over time
    bool reliable = true;  ///< top Fock population stayed under threshold
    double max_trace_error = 0.0;
    double max_hermiticity_error = 0.0;
    double min_eigenvalue = 0.0;  ///< of the final state
    long long steps = 0;
};

/// Integrate the driven dissipative dynamics from the ground (x) thermal
/// state and demodulate the coherent vibrational response.
OracleResult simulate(const MoleculeParams& mol, const DriveParams& drive,
                      const Environment& env, const OracleConfig& cfg);

/// Least-squares Lorentzian y = peak / ((x - center)^2 + half_width^2),
/// exact for noise-free Lorentzian data.
struct LorentzianFit {
    double center = 0.0;
    double half_width = 0.0;
    double peak = 0.0;
    bool valid = false;
};

LorentzianFit fit_lorentzian(const std::vector<double>& x,
                             const std::vector<double>& y);

struct ResonanceScan {
    std::vector<double> detunings;    ///< omega_v - 2 omega_ir [eV]
    std::vector<double> b_amp_sq;     ///< |demodulated <b>|^2
    LorentzianFit fit;
};

/// Sweep the IR frequency so that omega_v - 2 omega_ir visits the given
/// detunings; fits the response curve. Points run concurrently.
ResonanceScan resonance_scan(const MoleculeParams& mol,
                             const DriveParams& drive, const Environment& env,
                             const OracleConfig& cfg,
                             const std::vector<double>& detunings);

/// Emission spectrum from the two-time dipole correlator: the correlator is
/// propagated with the same generator, averaged over one common drive
/// period, windowed and Fourier transformed. Intensities carry the
/// fourth-power emission-frequency factor, i.e. the same arbitrary units as
/// the symbolic SpectrumModel weights.
SampledSpectrum emission_spectrum(const MoleculeParams& mol,
                                  const DriveParams& drive,
                                  const Environment& env,
                                  const OracleConfig& cfg,
                                  const FrequencyGrid& grid);

/// One observable compared between the analytic model and the simulation.
struct ComparisonRow {
    std::string name;
    double analytic = 0.0;
    double oracle = 0.0;
    double error = 0.0;  ///< relative, or absolute where noted
    double tolerance = 0.0;
    bool absolute_error = false;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ComparisonRow> rows;
    Diagnostics diagnostics;
    bool perturbation_flagged = false;  ///< regime assumptions violated
    bool all_pass = false;
};

/// Run the oracle against the closed-form predictions: coherent amplitude
/// (magnitude and phase), coherent quanta, total occupation, and the
/// IR-power law from a three-point scan.
ValidationReport compare_with_analytic(const MoleculeParams& mol,
                                       const DriveParams& drive,
                                       const Environment& env,
                                       const OracleConfig& cfg);

}  // namespace ramanpump
