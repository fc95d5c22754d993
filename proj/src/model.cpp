#include "xyzmin/model.hpp"

#include "xyzmin/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace xyzmin {

void ModelParams::validate() const {
    for (double v : {J, Jz, gamma, B, lambda, beta}) {
        if (!std::isfinite(v)) throw std::invalid_argument("ModelParams: all fields must be finite");
    }
    if (!(beta > 0.0)) throw std::invalid_argument("ModelParams: beta must be > 0");
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : m_(m) {
    if (m.dim() != 4) throw StateInvalid("density matrix must be 4x4");
    const double herr = m.hermiticity_error();
    if (!(herr <= kHermitianTol)) {
        throw StateInvalid("density matrix not Hermitian (deviation " + std::to_string(herr) + ")");
    }
    const double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
    if (!(tr_err <= kTraceTol)) {
        throw StateInvalid("density matrix trace differs from 1 by " + std::to_string(tr_err));
    }
    const double lowest = hermitian_eigenvalues(m).back();
    if (lowest < -kPositivityTol) {
        throw StateInvalid("density matrix has negative eigenvalue " + std::to_string(lowest));
    }
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(0.25 * ComplexMatrix::identity(4)); }

DensityMatrix DensityMatrix::pure(const Eigen::Vector4cd& psi) {
    const Eigen::Vector4cd v = psi.normalized();
    return DensityMatrix(ComplexMatrix(ComplexMatrix::Storage(v * v.adjoint())));
}

double DensityMatrix::purity() const { return (m_.eigen() * m_.eigen()).trace().real(); }

ComplexMatrix build_hamiltonian(const ModelParams& p) {
    const double g = p.gamma * p.J;
    ComplexMatrix h(4);
    h(0, 0) = p.Jz / 2 + p.B;
    h(1, 1) = -p.Jz / 2 + p.lambda;
    h(2, 2) = -p.Jz / 2 - p.lambda;
    h(3, 3) = p.Jz / 2 - p.B;
    h(0, 3) = h(3, 0) = g;
    h(1, 2) = h(2, 1) = p.J;
    return h;
}

ComplexMatrix build_hamiltonian_from_paulis(const ModelParams& p) {
    const auto& I = pauli(0);
    const auto& X = pauli(1);
    const auto& Y = pauli(2);
    const auto& Z = pauli(3);
    const ComplexMatrix xy = (p.J / 2 * (1 + p.gamma)) * kron(X, X) + (p.J / 2 * (1 - p.gamma)) * kron(Y, Y);
    const ComplexMatrix zz = (p.Jz / 2) * kron(Z, Z) + ((p.B + p.lambda) / 2) * kron(Z, I) +
                             ((p.B - p.lambda) / 2) * kron(I, Z);
    return xy + zz;
}

namespace {

// Eigenvectors of [[h, g], [g, -h]] for eigenvalues +r and -r, r = sqrt(h^2 + g^2).
// Of the two proportional unnormalised forms the larger one is kept.
std::pair<Eigen::Vector2d, Eigen::Vector2d> block_eigenvectors(double h, double g, double r) {
    if (r == 0.0) {
        // Limit g -> 0+ at h = 0.
        const double s = 1.0 / std::sqrt(2.0);
        return {Eigen::Vector2d(s, s), Eigen::Vector2d(-s, s)};
    }
    Eigen::Vector2d up = std::abs(h + r) >= std::abs(r - h) ? Eigen::Vector2d(h + r, g) : Eigen::Vector2d(g, r - h);
    Eigen::Vector2d down = std::abs(h - r) >= std::abs(r + h) ? Eigen::Vector2d(h - r, g) : Eigen::Vector2d(g, -r - h);
    return {up.normalized(), down.normalized()};
}

}  // namespace

SpectralDecomposition closed_form_spectrum(const ModelParams& p) {
    p.validate();
    SpectralDecomposition s;
    const double g = p.gamma * p.J;
    s.eta = std::hypot(p.B, g);
    s.delta = std::hypot(p.lambda, p.J);
    s.energies = {p.Jz / 2 + s.eta, p.Jz / 2 - s.eta, -p.Jz / 2 + s.delta, -p.Jz / 2 - s.delta};

    const auto [v1, v2] = block_eigenvectors(p.B, g, s.eta);
    const auto [v3, v4] = block_eigenvectors(p.lambda, p.J, s.delta);
    auto embed = [](const Eigen::Vector2d& v, int i, int j) {
        Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
        out(i) = v(0);
        out(j) = v(1);
        return out;
    };
    s.eigenvectors = {embed(v1, 0, 3), embed(v2, 0, 3), embed(v3, 1, 2), embed(v4, 1, 2)};
    return s;
}

ThermalElements thermal_elements(const ModelParams& p) {
    p.validate();
    const double b = p.beta;
    const double g = p.gamma * p.J;
    const double eta = std::hypot(p.B, g);
    const double delta = std::hypot(p.lambda, p.J);
    // (a / eta) sinh(beta eta) == a beta sinhc(beta eta), finite at eta = 0.
    const double s_eta = b * sinhc(b * eta);
    const double s_delta = b * sinhc(b * delta);
    const double ez_minus = std::exp(-b * p.Jz / 2);
    const double ez_plus = std::exp(b * p.Jz / 2);

    ThermalElements t;
    t.mu_plus = ez_minus * (std::cosh(b * eta) + p.B * s_eta);
    t.mu_minus = ez_minus * (std::cosh(b * eta) - p.B * s_eta);
    t.kappa = -g * s_eta * ez_minus;
    t.nu_plus = ez_plus * (std::cosh(b * delta) + p.lambda * s_delta);
    t.nu_minus = ez_plus * (std::cosh(b * delta) - p.lambda * s_delta);
    t.epsilon = -p.J * s_delta * ez_plus;
    t.Z = 2 * (ez_minus * std::cosh(b * eta) + ez_plus * std::cosh(b * delta));
    return t;
}

DensityMatrix thermal_state(const ThermalElements& t) {
    ComplexMatrix m(4);
    m(0, 0) = t.mu_minus;
    m(1, 1) = t.nu_minus;
    m(2, 2) = t.nu_plus;
    m(3, 3) = t.mu_plus;
    m(0, 3) = m(3, 0) = t.kappa;
    m(1, 2) = m(2, 1) = t.epsilon;
    return DensityMatrix((1.0 / t.Z) * m);
}

DensityMatrix thermal_state(const ModelParams& p) { return thermal_state(thermal_elements(p)); }

}  // namespace xyzmin
