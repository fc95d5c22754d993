#pragma once

#include "xyzmin/linalg.hpp"

#include <array>

namespace xyzmin {

/// Couplings of the two-spin XYZ Hamiltonian in a (possibly inhomogeneous)
/// longitudinal field, plus inverse temperature. Energies are dimensionless.
struct ModelParams {
    double J = 0.0;       // xy-plane coupling
    double Jz = 0.0;      // z coupling
    double gamma = 0.0;   // xy anisotropy (Jx - Jy) / (Jx + Jy)
    double B = 0.0;       // uniform field
    double lambda = 0.0;  // field inhomogeneity
    double beta = 1.0;    // inverse temperature

    /// Throws std::invalid_argument unless every field is finite and beta > 0.
    void validate() const;
};

struct SpectralDecomposition {
    double eta = 0.0;    // sqrt(B^2 + (gamma J)^2)
    double delta = 0.0;  // sqrt(lambda^2 + J^2)
    std::array<double, 4> energies{};  // E1..E4
    std::array<Eigen::Vector4cd, 4> eigenvectors;
};

/// Entries of the X-shaped Gibbs state before division by Z.
struct ThermalElements {
    double mu_plus = 0.0;
    double mu_minus = 0.0;
    double nu_plus = 0.0;
    double nu_minus = 0.0;
    double kappa = 0.0;
    double epsilon = 0.0;
    double Z = 0.0;
};

/// Validated two-qubit state: Hermitian and unit trace within 1e-12,
/// eigenvalues no lower than -1e-10.
class DensityMatrix {
public:
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPositivityTol = 1e-10;

    /// Throws StateInvalid when any invariant fails.
    explicit DensityMatrix(const ComplexMatrix& m);

    static DensityMatrix maximally_mixed();
    /// |psi><psi| for a (not necessarily normalised) nonzero vector.
    static DensityMatrix pure(const Eigen::Vector4cd& psi);

    const ComplexMatrix& matrix() const { return m_; }
    Complex operator()(int row, int col) const { return m_(row, col); }

    /// Tr(rho^2).
    double purity() const;

private:
    ComplexMatrix m_;
};

/// Real symmetric 4x4 Hamiltonian in the computational basis |00>,|01>,|10>,|11>.
ComplexMatrix build_hamiltonian(const ModelParams& p);

ComplexMatrix build_hamiltonian_from_paulis(const ModelParams& p);

SpectralDecomposition closed_form_spectrum(const ModelParams& p);

ThermalElements thermal_elements(const ModelParams& p);

/// Gibbs state assembled from thermal_elements.
DensityMatrix thermal_state(const ModelParams& p);
DensityMatrix thermal_state(const ThermalElements& t);

}  // namespace xyzmin
