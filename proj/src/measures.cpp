#include "xyzmin/measures.hpp"

#include "xyzmin/errors.hpp"
#include "xyzmin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xyzmin {

double concurrence(const DensityMatrix& rho) {
    // sqrt of the eigenvalues of rho * rho~ are the singular values of
    // S (Y x Y) conj(S) with S = sqrt(rho).
    const EigenSystem es = hermitian_eig(rho.matrix());
    ComplexMatrix::Storage sqrt_diag = ComplexMatrix::Storage::Zero(4, 4);
    for (int k = 0; k < 4; ++k) sqrt_diag(k, k) = std::sqrt(std::max(es.values[k], 0.0));
    const auto& v = es.vectors.eigen();
    const Eigen::Matrix4cd s = v * sqrt_diag * v.adjoint();
    const Eigen::Matrix4cd yy = kron(pauli(2), pauli(2)).eigen();
    const Eigen::Matrix4cd a = s * yy * s.conjugate();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(a);
    const Eigen::Vector4d sv = svd.singularValues();  // descending
    return std::max(0.0, sv(0) - sv(1) - sv(2) - sv(3));
}

double concurrence_thermal(const ThermalElements& t) {
    const double first = (std::abs(t.kappa) - std::sqrt(t.nu_plus * t.nu_minus)) / t.Z;
    const double second = (std::abs(t.epsilon) - std::sqrt(t.mu_plus * t.mu_minus)) / t.Z;
    return 2 * std::max({0.0, first, second});
}

CriticalWindow critical_window(const ModelParams& p) {
    p.validate();
    if (p.J == 0.0) throw DomainError("critical window undefined for J = 0 (sinh J = 0)");
    const double b = p.beta;
    const double g = p.gamma * p.J;
    const double eta = std::hypot(p.B, g);
    const double delta = std::hypot(p.lambda, p.J);
    // |kappa| e^{beta Jz/2} and |epsilon| e^{-beta Jz/2}
    const double coh_xy = std::abs(g) * b * sinhc(b * eta);
    const double coh_j = std::abs(p.J) * b * sinhc(b * delta);
    // sqrt(mu+ mu-) e^{beta Jz/2} = sqrt(cosh^2 - (B/eta)^2 sinh^2) = sqrt(1 + coh_xy^2); likewise for nu.
    CriticalWindow w;
    w.jc2 = 0.5 * std::log((1.0 + coh_xy * coh_xy) / (coh_j * coh_j)) / b;
    if (coh_xy > 0.0) w.jc1 = std::log(coh_xy / std::sqrt(1.0 + coh_j * coh_j)) / b;
    return w;
}

double min_hs(const FanoForm& f) {
    const Eigen::Matrix3d ttt = f.T * f.T.transpose();
    const double total = ttt.trace();
    if (f.bloch_a.norm() > kBlochZeroTol) {
        const Eigen::Vector3d u = f.x.normalized();
        return total - u.dot(ttt * u);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(ttt, Eigen::EigenvaluesOnly);
    return total - solver.eigenvalues()(0);
}

double min_trace(const FanoForm& f) {
    const double off = f.off_diagonal_corr();
    if (off > 1e-10) {
        std::ostringstream msg;
        msg << "trace MIN closed form needs a diagonal correlation matrix (off-diagonal " << off << ")";
        throw NotDiagonalCorrelation(msg.str());
    }
    const Eigen::Vector3d c = f.pauli_corr.diagonal();
    const Eigen::Vector3d& x = f.bloch_a;
    const double xn = x.norm();
    if (xn <= kBlochZeroTol) return c.cwiseAbs().maxCoeff();

    const Eigen::Vector3d c2 = c.cwiseAbs2();
    const Eigen::Vector3d x2 = x.cwiseAbs2();
    const double alpha = c2.sum() * x2.sum() - c2.dot(x2);
    const double beta_t = x2(0) * c2(1) * c2(2) + x2(1) * c2(2) * c2(0) + x2(2) * c2(0) * c2(1);
    const double chi_plus = alpha + 2 * std::sqrt(beta_t) * xn;
    if (chi_plus <= 0) return 0.0;
    // chi_plus * chi_minus expanded in differences of c_i^2
    const Eigen::Vector3d& u = x2;
    const Eigen::Vector3d& d = c2;
    double disc = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        disc += u(i) * u(i) * (d(j) - d(k)) * (d(j) - d(k));
        disc += 2 * u(i) * u(j) * (d(i) - d(k)) * (d(j) - d(k));
    }
    const double chi_minus = std::max(0.0, disc) / chi_plus;
    return (std::sqrt(chi_plus) + std::sqrt(chi_minus)) / (2 * xn);
}

double min_fidelity_gamma(const FanoForm& f) {
    const Eigen::Matrix4d& g = f.gamma_full;
    const double norm2 = g.squaredNorm();
    double e;
    if (f.bloch_a.norm() > kBlochZeroTol) {
        const Eigen::Vector3d u = f.x.normalized();
        Eigen::Matrix<double, 2, 4> a;
        a << 1, u.transpose(), 1, -u.transpose();
        a /= std::sqrt(2.0);
        e = (a * g).squaredNorm();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(g * g.transpose(), Eigen::EigenvaluesOnly);
        e = solver.eigenvalues()(0);
    }
    return (norm2 - e) / norm2;
}

double min_fidelity(const FanoForm& f) {
    const double spectral = fidelity_min_spectral(f, kBlochZeroTol);
    if (f.bloch_a.norm() > kBlochZeroTol) {
        const double gamma_form = min_fidelity_gamma(f);
        if (std::abs(gamma_form - spectral) > 1e-6) {
            std::ostringstream msg;
            msg << "Gamma-matrix fidelity MIN " << gamma_form << " disagrees with spectral value " << spectral;
            throw ConventionMismatch(msg.str());
        }
    }
    return spectral;
}

double min_hs_thermal(const ThermalElements& t) {
    return 2 * (t.kappa * t.kappa + t.epsilon * t.epsilon) / (t.Z * t.Z);
}

double min_trace_thermal(const ThermalElements& t) { return (std::abs(t.kappa) + std::abs(t.epsilon)) / t.Z; }

double min_fidelity_thermal(const ThermalElements& t) {
    const double coh = 2 * (t.kappa * t.kappa + t.epsilon * t.epsilon);
    const double diag = t.mu_minus * t.mu_minus + t.nu_plus * t.nu_plus + t.nu_minus * t.nu_minus +
                        t.mu_plus * t.mu_plus;
    const double denom = coh + diag;
    return denom > 0 ? coh / denom : 0.0;
}

MeasureReport measure_thermal(const ModelParams& p) {
    const ThermalElements t = thermal_elements(p);
    const FanoForm f = fano_decompose(thermal_state(t));
    MeasureReport r;
    r.concurrence = concurrence_thermal(t);
    r.min_hs = min_hs(f);
    r.min_trace = min_trace(f);
    r.min_trace_paper = min_trace_thermal(t);
    r.min_fidelity = min_fidelity(f);
    return r;
}

}  // namespace xyzmin
