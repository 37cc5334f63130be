#include "ramanpump/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace ramanpump::ops {

namespace {

int fock_states(int fock_cutoff) {
    if (fock_cutoff < 2)
        throw std::invalid_argument("operators: fock_cutoff must be >= 2");
    return fock_cutoff + 1;
}

}  // namespace

Matrix sigma(int fock_cutoff) {
    const int nf = fock_states(fock_cutoff);
    Matrix m = Matrix::Zero(2 * nf, 2 * nf);
    for (int n = 0; n < nf; ++n) m(n, nf + n) = 1.0;
    return m;
}

Matrix sigma_dag_sigma(int fock_cutoff) {
    const int nf = fock_states(fock_cutoff);
    Matrix m = Matrix::Zero(2 * nf, 2 * nf);
    for (int n = 0; n < nf; ++n) m(nf + n, nf + n) = 1.0;
    return m;
}

Matrix sigma_x(int fock_cutoff) {
    const int nf = fock_states(fock_cutoff);
    Matrix m = Matrix::Zero(2 * nf, 2 * nf);
    for (int n = 0; n < nf; ++n) {
        m(n, nf + n) = 1.0;
        m(nf + n, n) = 1.0;
    }
    return m;
}

Matrix annihilation(int fock_cutoff) {
    const int nf = fock_states(fock_cutoff);
    Matrix m = Matrix::Zero(2 * nf, 2 * nf);
    for (int s = 0; s < 2; ++s)
        for (int n = 1; n < nf; ++n)
            m(s * nf + n - 1, s * nf + n) = std::sqrt(double(n));
    return m;
}

Matrix number(int fock_cutoff) {
    const int nf = fock_states(fock_cutoff);
    Matrix m = Matrix::Zero(2 * nf, 2 * nf);
    for (int s = 0; s < 2; ++s)
        for (int n = 0; n < nf; ++n) m(s * nf + n, s * nf + n) = double(n);
    return m;
}

Matrix static_hamiltonian(const MoleculeParams& mol, int fock_cutoff) {
    const int nf = fock_states(fock_cutoff);
    Matrix h = Matrix::Zero(2 * nf, 2 * nf);
    for (int s = 0; s < 2; ++s)
        for (int n = 0; n < nf; ++n)
            h(s * nf + n, s * nf + n) = mol.omega0 * double(s) + mol.omega_v * double(n);
    // displacement coupling acts in the excited-state block only
    for (int n = 1; n < nf; ++n) {
        const double x = mol.g * std::sqrt(double(n));
        h(nf + n - 1, nf + n) += x;
        h(nf + n, nf + n - 1) += x;
    }
    return h;
}

std::complex<double> expect_b(const Matrix& rho, int fock_cutoff) {
    const int nf = fock_cutoff + 1;
    std::complex<double> acc(0.0, 0.0);
    for (int s = 0; s < 2; ++s)
        for (int n = 1; n < nf; ++n)
            acc += std::sqrt(double(n)) * rho(s * nf + n, s * nf + n - 1);
    return acc;
}

double expect_number(const Matrix& rho, int fock_cutoff) {
    const int nf = fock_cutoff + 1;
    double acc = 0.0;
    for (int s = 0; s < 2; ++s)
        for (int n = 0; n < nf; ++n)
            acc += double(n) * rho(s * nf + n, s * nf + n).real();
    return acc;
}

double expect_excited(const Matrix& rho, int fock_cutoff) {
    const int nf = fock_cutoff + 1;
    double acc = 0.0;
    for (int n = 0; n < nf; ++n) acc += rho(nf + n, nf + n).real();
    return acc;
}

double top_fock_population(const Matrix& rho, int fock_cutoff) {
    const int nf = fock_cutoff + 1;
    return rho(nf - 1, nf - 1).real() + rho(2 * nf - 1, 2 * nf - 1).real();
}

std::complex<double> sigma_dag_trace(const Matrix& m, int fock_cutoff) {
    const int nf = fock_cutoff + 1;
    std::complex<double> acc(0.0, 0.0);
    for (int n = 0; n < nf; ++n) acc += m(n, nf + n);
    return acc;
}

Matrix ground_thermal_state(double n_bar, int fock_cutoff) {
    if (n_bar < 0.0)
        throw std::invalid_argument("operators: n_bar must be >= 0");
    const int nf = fock_states(fock_cutoff);
    Matrix rho = Matrix::Zero(2 * nf, 2 * nf);
    if (n_bar == 0.0) {
        rho(0, 0) = 1.0;
        return rho;
    }
    const double ratio = n_bar / (1.0 + n_bar);
    double norm = 0.0;
    for (int n = 0; n < nf; ++n) {
        const double p = std::pow(ratio, n);
        rho(n, n) = p;
        norm += p;
    }
    rho /= norm;
    return rho;
}

}  // namespace ramanpump::ops
