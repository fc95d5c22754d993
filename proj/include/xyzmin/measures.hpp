#pragma once

#include "xyzmin/decomp.hpp"
#include "xyzmin/model.hpp"

#include <optional>

namespace xyzmin {

/// |x| at or below this selects the zero-Bloch-vector branch of the MIN formulas.
inline constexpr double kBlochZeroTol = 1e-9;

/// Interval of Jz on which the thermal concurrence vanishes.
struct CriticalWindow {
    std::optional<double> jc1;  // nullopt: unbounded below
    double jc2 = 0.0;

    bool contains(double jz) const { return (!jc1 || *jc1 <= jz) && jz <= jc2; }
    bool empty() const { return jc1 && *jc1 > jc2; }
};

struct MeasureReport {
    double concurrence = 0.0;
    double min_hs = 0.0;
    double min_trace = 0.0;        // definition-consistent value
    double min_trace_paper = 0.0;  // (|kappa| + |epsilon|) / Z
    double min_fidelity = 0.0;
};

/// Wootters concurrence of an arbitrary two-qubit state.
double concurrence(const DensityMatrix& rho);

double concurrence_thermal(const ThermalElements& t);

/// Zero-concurrence window of the thermal state. Throws DomainError when J = 0.
CriticalWindow critical_window(const ModelParams& p);

/// Hilbert-Schmidt MIN for a 2 x 2 state.
double min_hs(const FanoForm& f);

/// Trace MIN for states whose Pauli correlation matrix is diagonal (within
/// 1e-10); throws NotDiagonalCorrelation otherwise.
double min_trace(const FanoForm& f);

/// Fidelity MIN. The spectral form is normative; on the |x| > 0 branch the
/// Gamma-matrix closed form is evaluated too and must agree within 1e-6,
/// otherwise ConventionMismatch is thrown.
double min_fidelity(const FanoForm& f);

/// Gamma-matrix closed form of the fidelity MIN: (||Gamma||^2 - e)/||Gamma||^2,
/// e = Tr(A Gamma Gamma^T A^T) for x != 0, lambda_min(Gamma Gamma^T) for x = 0.
double min_fidelity_gamma(const FanoForm& f);

// Closed forms specialised to the X-shaped thermal state.
double min_hs_thermal(const ThermalElements& t);
double min_trace_thermal(const ThermalElements& t);
double min_fidelity_thermal(const ThermalElements& t);

/// Every measure for the thermal state at p.
MeasureReport measure_thermal(const ModelParams& p);

}  // namespace xyzmin
