#pragma once

#include "xyzmin/model.hpp"

#include <Eigen/Dense>

namespace xyzmin {

/// Fano (Bloch) form of a two-qubit state, kept in both normalisations:
///
///   rho = 1/4 (I + a.sigma x I + I x b.sigma + sum_ij c_ij sigma_i x sigma_j)
///
/// with a = bloch_a, b = bloch_b, c = pauli_corr. The orthonormal-operator
/// expansion (basis sigma_i / sqrt 2) has x = a/2, y = b/2, T = c/2, and
/// gamma_full packs (1/2, y; x, T) so that the squared Frobenius norm of
/// gamma_full equals Tr rho^2.
struct FanoForm {
    Eigen::Vector3d bloch_a = Eigen::Vector3d::Zero();
    Eigen::Vector3d bloch_b = Eigen::Vector3d::Zero();
    Eigen::Matrix3d pauli_corr = Eigen::Matrix3d::Zero();

    Eigen::Vector3d x = Eigen::Vector3d::Zero();
    Eigen::Vector3d y = Eigen::Vector3d::Zero();
    Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
    Eigen::Matrix4d gamma_full = Eigen::Matrix4d::Zero();

    /// Builds the derived fields from the Pauli-convention ones.
    static FanoForm from_pauli(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Matrix3d& c);

    /// Largest |c_ij|, i != j.
    double off_diagonal_corr() const;
};

FanoForm fano_decompose(const DensityMatrix& rho);

/// Inverse of fano_decompose (uses the Pauli-convention fields). Throws
/// StateInvalid if the result is not a density matrix.
DensityMatrix reconstruct(const FanoForm& f);

}  // namespace xyzmin
