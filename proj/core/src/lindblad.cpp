#include "ramanpump/lindblad.hpp"

#include <cmath>
#include <stdexcept>

namespace ramanpump {

using Eigen::MatrixXcd;
using complexd = std::complex<double>;

LindbladRhs::LindbladRhs(const MoleculeParams& mol, const DriveParams& drive,
                         double n_bar, int fock_cutoff)
    : nf_(fock_cutoff + 1),
      omega_vis_(drive.omega_vis),
      rabi_vis_(drive.rabi_vis),
      omega_ir_(drive.omega_ir),
      rabi_ir_(drive.rabi_ir),
      gamma_perp_(mol.gamma_perp),
      kappa_down_(2.0 * mol.gamma_v * (1.0 + n_bar)),
      kappa_up_(2.0 * mol.gamma_v * n_bar) {
    if (fock_cutoff < 2)
        throw std::invalid_argument("lindblad: fock_cutoff must be >= 2");
    if (n_bar < 0.0)
        throw std::invalid_argument("lindblad: n_bar must be >= 0");
    hg_diag_.resize(nf_);
    he_diag_.resize(nf_);
    he_off_.resize(nf_ - 1);
    sq_.resize(nf_ + 1);
    for (int n = 0; n < nf_; ++n) {
        hg_diag_[n] = mol.omega_v * n;
        he_diag_[n] = mol.omega0 + mol.omega_v * n;
    }
    for (int n = 0; n + 1 < nf_; ++n) he_off_[n] = mol.g * std::sqrt(n + 1.0);
    for (int n = 0; n <= nf_; ++n) sq_[n] = std::sqrt(double(n));
}

MatrixXcd LindbladRhs::operator()(double t, const MatrixXcd& rho) const {
    const int nf = nf_;
    const double u = rabi_vis_ * std::cos(omega_vis_ * t) +
                     rabi_ir_ * std::cos(omega_ir_ * t);

    const auto pgg = rho.block(0, 0, nf, nf);
    const auto pge = rho.block(0, nf, nf, nf);
    const auto peg = rho.block(nf, 0, nf, nf);
    const auto pee = rho.block(nf, nf, nf, nf);

    // tridiagonal excited-block Hamiltonian applied from the left / right
    auto he_left = [&](const auto& m) {
        MatrixXcd out(nf, nf);
        for (int n = 0; n < nf; ++n) {
            out.row(n) = he_diag_[n] * m.row(n);
            if (n > 0) out.row(n) += he_off_[n - 1] * m.row(n - 1);
            if (n + 1 < nf) out.row(n) += he_off_[n] * m.row(n + 1);
        }
        return out;
    };
    auto he_right = [&](const auto& m) {
        MatrixXcd out(nf, nf);
        for (int n = 0; n < nf; ++n) {
            out.col(n) = he_diag_[n] * m.col(n);
            if (n > 0) out.col(n) += he_off_[n - 1] * m.col(n - 1);
            if (n + 1 < nf) out.col(n) += he_off_[n] * m.col(n + 1);
        }
        return out;
    };
    auto hg_left = [&](const auto& m) {
        return (hg_diag_.cast<complexd>().asDiagonal() * m).eval();
    };
    auto hg_right = [&](const auto& m) {
        return (m * hg_diag_.cast<complexd>().asDiagonal()).eval();
    };

    // commutator -i (H rho - rho H), assembled blockwise
    MatrixXcd out(2 * nf, 2 * nf);
    const complexd mi(0.0, -1.0);
    out.block(0, 0, nf, nf) =
        mi * (hg_left(pgg) + u * peg - hg_right(pgg) - u * pge);
    out.block(0, nf, nf, nf) =
        mi * (hg_left(pge) + u * pee - he_right(pge) - u * pgg);
    out.block(nf, 0, nf, nf) =
        mi * (he_left(peg) + u * pgg - hg_right(peg) - u * pee);
    out.block(nf, nf, nf, nf) =
        mi * (he_left(pee) + u * pge - he_right(pee) - u * peg);

    // TLS decay: sigma at rate 2*gamma_perp
    out.block(0, 0, nf, nf) += 2.0 * gamma_perp_ * pee;
    out.block(0, nf, nf, nf) -= gamma_perp_ * pge;
    out.block(nf, 0, nf, nf) -= gamma_perp_ * peg;
    out.block(nf, nf, nf, nf) -= 2.0 * gamma_perp_ * pee;

    // vibrational loss and thermal gain, acting on the Fock index of every
    // TLS block
    const double km = kappa_down_;
    const double kp = kappa_up_;
    for (int sr = 0; sr < 2; ++sr) {
        for (int sc = 0; sc < 2; ++sc) {
            const int r0 = sr * nf, c0 = sc * nf;
            for (int n = 0; n < nf; ++n) {
                for (int m = 0; m < nf; ++m) {
                    complexd acc(0.0, 0.0);
                    if (km != 0.0) {
                        if (n + 1 < nf && m + 1 < nf)
                            acc += km * sq_[n + 1] * sq_[m + 1] *
                                   rho(r0 + n + 1, c0 + m + 1);
                        acc -= 0.5 * km * double(n + m) * rho(r0 + n, c0 + m);
                    }
                    if (kp != 0.0) {
                        if (n > 0 && m > 0)
                            acc += kp * sq_[n] * sq_[m] *
                                   rho(r0 + n - 1, c0 + m - 1);
                        // truncated b b^dag has a vanishing top diagonal
                        // entry; using it keeps the generator exactly
                        // trace-preserving on the cut space
                        const double up_n = n + 1 < nf ? double(n + 1) : 0.0;
                        const double up_m = m + 1 < nf ? double(m + 1) : 0.0;
                        acc -= 0.5 * kp * (up_n + up_m) * rho(r0 + n, c0 + m);
                    }
                    out(r0 + n, c0 + m) += acc;
                }
            }
        }
    }
    return out;
}

}  // namespace ramanpump
