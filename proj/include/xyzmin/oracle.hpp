#pragma once

#include "xyzmin/decomp.hpp"
#include "xyzmin/model.hpp"

#include <Eigen/Dense>

// Definition-level evaluation of the nonlocality measures: explicit
// projective measurements on qubit a and a search over measurement axes.
// Nothing here uses a closed-form MIN expression, so these routines serve as
// the reference the closed forms are tested against.

namespace xyzmin {

/// Qubit von Neumann measurement {(I + n.sigma)/2, (I - n.sigma)/2} given by
/// its Bloch axis in spherical angles.
struct MeasurementAxis {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2 pi)

    Eigen::Vector3d n() const;
    static MeasurementAxis from_vector(const Eigen::Vector3d& v);
};

enum class Objective {
    HsSquared,         // ||rho - Pi(rho)||_2^2
    Trace,             // ||rho - Pi(rho)||_1
    OneMinusFidelity,  // 1 - F_wang(rho, Pi(rho))
};

enum class MeasurementSet {
    /// Measurements that leave the reduced state of qubit a unchanged: the
    /// single axis a/|a| when the Bloch vector is nonzero, the whole sphere
    /// otherwise. This is the set over which MIN is defined.
    LocallyInvariant,
    /// Every axis; diagnostic only.
    AllAxes,
};

struct OracleOptions {
    MeasurementSet set = MeasurementSet::LocallyInvariant;
    int theta_points = 181;  // includes both poles
    int phi_points = 361;    // over [0, 2 pi]; only the half phi <= pi is visited
    double axis_tol = 1e-8;
    int refine_starts = 3;
    double bloch_zero_tol = 1e-9;
};

struct OracleResult {
    double value = 0.0;
    MeasurementAxis argmax_axis;
    int theta_points = 0;  // 0 when no grid was needed
    int phi_points = 0;
    bool refined = false;
};

/// sum_k (P_k x I) rho (P_k x I).
DensityMatrix post_measurement_state(const DensityMatrix& rho, const MeasurementAxis& axis);

/// Objective value for measuring qubit a along unit vector n.
double disturbance(const DensityMatrix& rho, const Eigen::Vector3d& n, Objective kind);

/// Maximum of the objective over the measurement set; grid evaluation runs
/// in parallel with OpenMP.
OracleResult max_over_measurements(const DensityMatrix& rho, Objective kind, const OracleOptions& opts = {});

/// Single-threaded reference for max_over_measurements; returns identical results.
OracleResult max_over_measurements_serial(const DensityMatrix& rho, Objective kind, const OracleOptions& opts = {});

/// (Tr rho sigma)^2 / (Tr rho^2 Tr sigma^2).
double fidelity_wang(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Fidelity MIN from the Fano form. For an axis n, F(rho, Pi_n rho) =
/// (1 + |b|^2 + n^T W n) / (1 + |a|^2 + |b|^2 + ||C||^2) with W = a a^T + C C^T;
/// the least fidelity over the locally invariant set is taken.
double fidelity_min_spectral(const FanoForm& f, double bloch_zero_tol = 1e-9);

/// exp(-beta H) / Tr exp(-beta H) through the numeric eigensystem of H.
/// beta = 0 is accepted and gives I/4.
DensityMatrix thermal_state_exp(const ModelParams& p);

}  // namespace xyzmin
