#include "xyzmin/decomp.hpp"

#include <algorithm>
#include <cmath>

namespace xyzmin {

FanoForm FanoForm::from_pauli(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Matrix3d& c) {
    FanoForm f;
    f.bloch_a = a;
    f.bloch_b = b;
    f.pauli_corr = c;
    f.x = a / 2;
    f.y = b / 2;
    f.T = c / 2;
    f.gamma_full(0, 0) = 0.5;
    f.gamma_full.block<1, 3>(0, 1) = f.y.transpose();
    f.gamma_full.block<3, 1>(1, 0) = f.x;
    f.gamma_full.block<3, 3>(1, 1) = f.T;
    return f;
}

double FanoForm::off_diagonal_corr() const {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) worst = std::max(worst, std::abs(pauli_corr(i, j)));
    return worst;
}

namespace {

double expectation(const DensityMatrix& rho, int i, int j) {
    return (rho.matrix().eigen() * kron(pauli(i), pauli(j)).eigen()).trace().real();
}

}  // namespace

FanoForm fano_decompose(const DensityMatrix& rho) {
    Eigen::Vector3d a;
    Eigen::Vector3d b;
    Eigen::Matrix3d c;
    for (int i = 1; i <= 3; ++i) {
        a(i - 1) = expectation(rho, i, 0);
        b(i - 1) = expectation(rho, 0, i);
        for (int j = 1; j <= 3; ++j) c(i - 1, j - 1) = expectation(rho, i, j);
    }
    return FanoForm::from_pauli(a, b, c);
}

DensityMatrix reconstruct(const FanoForm& f) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int i = 1; i <= 3; ++i) {
        m = m + Complex(f.bloch_a(i - 1)) * kron(pauli(i), pauli(0));
        m = m + Complex(f.bloch_b(i - 1)) * kron(pauli(0), pauli(i));
        for (int j = 1; j <= 3; ++j) m = m + Complex(f.pauli_corr(i - 1, j - 1)) * kron(pauli(i), pauli(j));
    }
    return DensityMatrix(0.25 * m);
}

}  // namespace xyzmin
