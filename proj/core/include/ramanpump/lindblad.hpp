#pragma once

#include <Eigen/Dense>

#include "ramanpump/params.hpp"

namespace ramanpump {

/// Right-hand side of the dissipative density-matrix equation for the driven
/// molecule, in the lab frame (both drive cosines kept, no rotating-wave
/// step).
///
/// Channels: the TLS lowering operator at rate 2*gamma_perp (coherence decay
/// gamma_perp), vibrational loss at 2*gamma_v*(1+n_bar) and gain at
/// 2*gamma_v*n_bar, so the vibrational amplitude decays at gamma_v and the
/// bath alone equilibrates the mode to n_bar.
///
/// The apply is hand-structured around the TLS block layout and the
/// tridiagonal vibrational couplings; it costs O(dim^2) per call and never
/// forms a dense Hamiltonian. Works on non-Hermitian arguments as well,
/// which the two-time correlation propagation relies on.
class LindbladRhs {
  public:
    LindbladRhs(const MoleculeParams& mol, const DriveParams& drive,
                double n_bar, int fock_cutoff);

    Eigen::MatrixXcd operator()(double t, const Eigen::MatrixXcd& rho) const;

    int dim() const { return 2 * nf_; }
    int fock_cutoff() const { return nf_ - 1; }

  private:
    int nf_;  // number of Fock states
    double omega_vis_, rabi_vis_, omega_ir_, rabi_ir_;
    double gamma_perp_, kappa_down_, kappa_up_;
    Eigen::VectorXd hg_diag_;  // ground-block Hamiltonian (diagonal)
    Eigen::VectorXd he_diag_;  // excited-block diagonal
    Eigen::VectorXd he_off_;   // excited-block displacement coupling
    Eigen::VectorXd sq_;       // sq_[n] = sqrt(n)
};

}  // namespace ramanpump
