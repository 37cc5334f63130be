#pragma once

#include <Eigen/Dense>

#include "ramanpump/params.hpp"

namespace ramanpump {

/// Dense operators on the TLS (x) truncated-Fock product space. Basis index
/// is s * (n_max + 1) + n with s = 0 for the electronic ground state, s = 1
/// for the excited state, and n the vibrational quantum number.
namespace ops {

using Matrix = Eigen::MatrixXcd;

inline int dim(int fock_cutoff) { return 2 * (fock_cutoff + 1); }

Matrix sigma(int fock_cutoff);            ///< |g><e| (x) 1
Matrix sigma_dag_sigma(int fock_cutoff);  ///< excited-state projector
Matrix sigma_x(int fock_cutoff);          ///< sigma + sigma^dag
Matrix annihilation(int fock_cutoff);     ///< 1 (x) b
Matrix number(int fock_cutoff);           ///< 1 (x) b^dag b

/// Drive-free molecular Hamiltonian: TLS splitting, vibrational ladder and
/// the population-displacement coupling g sigma^dag sigma (b + b^dag).
Matrix static_hamiltonian(const MoleculeParams& mol, int fock_cutoff);

/// Electronic ground state (x) thermal vibrational state with mean
/// occupation n_bar, truncated and renormalized.
Matrix ground_thermal_state(double n_bar, int fock_cutoff);

/// Tr(b rho)
std::complex<double> expect_b(const Matrix& rho, int fock_cutoff);
/// Tr(b^dag b rho)
double expect_number(const Matrix& rho, int fock_cutoff);
/// Tr(sigma^dag sigma rho)
double expect_excited(const Matrix& rho, int fock_cutoff);
/// Population of the top Fock state, traced over the TLS.
double top_fock_population(const Matrix& rho, int fock_cutoff);
/// Tr(sigma^dag m); for the two-time emission correlator.
std::complex<double> sigma_dag_trace(const Matrix& m, int fock_cutoff);

}  // namespace ops
}  // namespace ramanpump
