#include "xyzmin/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace xyzmin {

namespace {

using Mat4 = Eigen::Matrix4cd;

Mat4 to_fixed(const DensityMatrix& rho) { return Mat4(rho.matrix().eigen()); }

// (n.sigma) x I
Mat4 flip_operator(const Eigen::Vector3d& n) {
    Eigen::Matrix2cd ns;
    ns << Complex(n(2), 0), Complex(n(0), -n(1)), Complex(n(0), n(1)), Complex(-n(2), 0);
    Mat4 out = Mat4::Zero();
    out.block<2, 2>(0, 0) = ns(0, 0) * Eigen::Matrix2cd::Identity();
    out.block<2, 2>(0, 2) = ns(0, 1) * Eigen::Matrix2cd::Identity();
    out.block<2, 2>(2, 0) = ns(1, 0) * Eigen::Matrix2cd::Identity();
    out.block<2, 2>(2, 2) = ns(1, 1) * Eigen::Matrix2cd::Identity();
    return out;
}

// Pi_n(rho) = (rho + N rho N) / 2 with N = (n.sigma) x I, since P_pm = (I pm n.sigma)/2.
Mat4 measured(const Mat4& rho, const Eigen::Vector3d& n) {
    const Mat4 N = flip_operator(n);
    return 0.5 * (rho + N * rho * N);
}

double objective(const Mat4& rho, const Eigen::Vector3d& n, Objective kind) {
    const Mat4 sigma = measured(rho, n);
    switch (kind) {
        case Objective::HsSquared:
            return (rho - sigma).squaredNorm();
        case Objective::Trace: {
            const Mat4 d = rho - sigma;
            const Mat4 h = 0.5 * (d + d.adjoint());
            Eigen::SelfAdjointEigenSolver<Mat4> solver(h, Eigen::EigenvaluesOnly);
            return solver.eigenvalues().cwiseAbs().sum();
        }
        case Objective::OneMinusFidelity: {
            const double overlap = (rho * sigma).trace().real();
            const double pr = (rho * rho).trace().real();
            const double ps = (sigma * sigma).trace().real();
            return 1.0 - overlap * overlap / (pr * ps);
        }
    }
    throw std::invalid_argument("unknown objective");
}

Eigen::Vector3d bloch_of_a(const Mat4& rho) {
    // Tr(rho sigma_i x I) from the reduced 2x2 state.
    const Complex r00 = rho(0, 0) + rho(1, 1);
    const Complex r11 = rho(2, 2) + rho(3, 3);
    const Complex r01 = rho(0, 2) + rho(1, 3);
    return {2.0 * r01.real(), -2.0 * r01.imag(), (r00 - r11).real()};
}

std::vector<Eigen::Vector3d> hemisphere_grid(int theta_points, int phi_points) {
    if (theta_points < 2 || phi_points < 3) throw std::invalid_argument("oracle grid too coarse");
    std::vector<Eigen::Vector3d> axes;
    const double dtheta = std::numbers::pi / (theta_points - 1);
    const double dphi = 2 * std::numbers::pi / (phi_points - 1);
    for (int i = 0; i < theta_points; ++i) {
        const double theta = i * dtheta;
        const bool pole = (i == 0 || i == theta_points - 1);
        for (int j = 0; j < phi_points; ++j) {
            const double phi = j * dphi;
            // n and -n describe the same measurement.
            if (phi > std::numbers::pi + 1e-12) break;
            axes.push_back(MeasurementAxis{theta, phi}.n());
            if (pole) break;
        }
    }
    return axes;
}

Eigen::Vector3d any_perpendicular(const Eigen::Vector3d& n) {
    const Eigen::Vector3d trial = std::abs(n(0)) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    return (trial - trial.dot(n) * n).normalized();
}

struct Refined {
    Eigen::Vector3d axis;
    double value;
};

// Compass search in the tangent plane of the sphere, halving the step
// whenever no neighbour improves, until the step drops below tol.
Refined refine(const Mat4& rho, Objective kind, Eigen::Vector3d n, double step, double tol) {
    double best = objective(rho, n, kind);
    constexpr int kMaxIterations = 100000;
    const double s = 1.0 / std::sqrt(2.0);
    for (int iter = 0; iter < kMaxIterations && step >= tol; ++iter) {
        const Eigen::Vector3d e1 = any_perpendicular(n);
        const Eigen::Vector3d e2 = n.cross(e1);
        const std::array<Eigen::Vector3d, 8> dirs = {e1, -e1, e2, -e2, s * (e1 + e2), s * (e1 - e2),
                                                     s * (-e1 + e2), s * (-e1 - e2)};
        Eigen::Vector3d next = n;
        double next_value = best;
        for (const auto& d : dirs) {
            const Eigen::Vector3d cand = (n + step * d).normalized();
            const double v = objective(rho, cand, kind);
            if (v > next_value) {
                next_value = v;
                next = cand;
            }
        }
        if (next_value > best) {
            best = next_value;
            n = next;
        } else {
            step *= 0.5;
        }
    }
    return {n, best};
}

std::vector<std::size_t> top_indices(const std::vector<double>& values, int count) {
    std::vector<std::size_t> idx(values.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(std::max(count, 1)), idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(keep), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (values[a] != values[b]) return values[a] > values[b];
                          return a < b;
                      });
    idx.resize(keep);
    return idx;
}

// Returns nullopt-equivalent (false) when the grid search is needed.
bool fixed_axis(const Mat4& rho, Objective kind, const OracleOptions& opts, OracleResult& out) {
    if (opts.set != MeasurementSet::LocallyInvariant) return false;
    const Eigen::Vector3d a = bloch_of_a(rho);
    if (a.norm() <= opts.bloch_zero_tol) return false;
    const Eigen::Vector3d n = a.normalized();
    out.value = objective(rho, n, kind);
    out.argmax_axis = MeasurementAxis::from_vector(n);
    return true;
}

OracleResult pick(const std::vector<Refined>& refined, const OracleOptions& opts) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < refined.size(); ++k)
        if (refined[k].value > refined[best].value) best = k;
    OracleResult out;
    out.value = refined[best].value;
    out.argmax_axis = MeasurementAxis::from_vector(refined[best].axis);
    out.theta_points = opts.theta_points;
    out.phi_points = opts.phi_points;
    out.refined = true;
    return out;
}

}  // namespace

Eigen::Vector3d MeasurementAxis::n() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

MeasurementAxis MeasurementAxis::from_vector(const Eigen::Vector3d& v) {
    const Eigen::Vector3d u = v.normalized();
    double phi = std::atan2(u(1), u(0));
    if (phi < 0) phi += 2 * std::numbers::pi;
    return {std::acos(std::clamp(u(2), -1.0, 1.0)), phi};
}

DensityMatrix post_measurement_state(const DensityMatrix& rho, const MeasurementAxis& axis) {
    const Eigen::Vector3d n = axis.n();
    const ComplexMatrix nsigma = Complex(n(0)) * pauli(1) + Complex(n(1)) * pauli(2) + Complex(n(2)) * pauli(3);
    const ComplexMatrix plus = kron(0.5 * (pauli(0) + nsigma), pauli(0));
    const ComplexMatrix minus = kron(0.5 * (pauli(0) - nsigma), pauli(0));
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix out = plus * r * plus + minus * r * minus;
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(out);
}

double disturbance(const DensityMatrix& rho, const Eigen::Vector3d& n, Objective kind) {
    return objective(to_fixed(rho), n.normalized(), kind);
}

OracleResult max_over_measurements(const DensityMatrix& rho, Objective kind, const OracleOptions& opts) {
    const Mat4 r = to_fixed(rho);
    OracleResult out;
    if (fixed_axis(r, kind, opts, out)) return out;

    const auto axes = hemisphere_grid(opts.theta_points, opts.phi_points);
    std::vector<double> values(axes.size());
    const auto count = static_cast<std::ptrdiff_t>(axes.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < count; ++k) values[k] = objective(r, axes[k], kind);

    const auto starts = top_indices(values, opts.refine_starts);
    const double step = std::numbers::pi / (opts.theta_points - 1);
    std::vector<Refined> refined(starts.size());
    const auto nstarts = static_cast<std::ptrdiff_t>(starts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < nstarts; ++k) refined[k] = refine(r, kind, axes[starts[k]], step, opts.axis_tol);
    return pick(refined, opts);
}

OracleResult max_over_measurements_serial(const DensityMatrix& rho, Objective kind, const OracleOptions& opts) {
    const Mat4 r = to_fixed(rho);
    OracleResult out;
    if (fixed_axis(r, kind, opts, out)) return out;

    const auto axes = hemisphere_grid(opts.theta_points, opts.phi_points);
    std::vector<double> values;
    values.reserve(axes.size());
    for (const auto& n : axes) values.push_back(objective(r, n, kind));

    const double step = std::numbers::pi / (opts.theta_points - 1);
    std::vector<Refined> refined;
    for (std::size_t k : top_indices(values, opts.refine_starts))
        refined.push_back(refine(r, kind, axes[k], step, opts.axis_tol));
    return pick(refined, opts);
}

double fidelity_wang(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const auto& a = rho.matrix().eigen();
    const auto& b = sigma.matrix().eigen();
    const double overlap = (a * b).trace().real();
    return overlap * overlap / ((a * a).trace().real() * (b * b).trace().real());
}

double fidelity_min_spectral(const FanoForm& f, double bloch_zero_tol) {
    const Eigen::Vector3d& a = f.bloch_a;
    const Eigen::Vector3d& b = f.bloch_b;
    const Eigen::Matrix3d& c = f.pauli_corr;
    const Eigen::Matrix3d w = a * a.transpose() + c * c.transpose();
    const double denom = 1.0 + a.squaredNorm() + b.squaredNorm() + c.squaredNorm();
    double least;
    if (a.norm() > bloch_zero_tol) {
        const Eigen::Vector3d n = a.normalized();
        least = n.dot(w * n);
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(w, Eigen::EigenvaluesOnly);
        least = solver.eigenvalues()(0);
    }
    return 1.0 - (1.0 + b.squaredNorm() + least) / denom;
}

DensityMatrix thermal_state_exp(const ModelParams& p) {
    for (double v : {p.J, p.Jz, p.gamma, p.B, p.lambda, p.beta}) {
        if (!std::isfinite(v)) throw std::invalid_argument("ModelParams: all fields must be finite");
    }
    if (p.beta < 0) throw std::invalid_argument("thermal_state_exp: beta must be >= 0");
    const EigenSystem es = hermitian_eig(build_hamiltonian(p));
    const double lowest = es.values.back();
    const auto& v = es.vectors.eigen();
    ComplexMatrix::Storage acc = ComplexMatrix::Storage::Zero(4, 4);
    double weight_sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double w = std::exp(-p.beta * (es.values[k] - lowest));
        acc += w * v.col(k) * v.col(k).adjoint();
        weight_sum += w;
    }
    acc /= weight_sum;
    acc = 0.5 * (acc + acc.adjoint()).eval();
    return DensityMatrix(ComplexMatrix(acc));
}

}  // namespace xyzmin
