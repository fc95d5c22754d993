#pragma once

#include "xyzmin/model.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace xyzmin {

/// One closed-form-versus-reference comparison, aggregated over samples.
struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    bool normative = true;

    bool passed() const { return !normative || max_deviation <= tolerance; }
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    // (trace oracle) / ((|kappa| + |epsilon|) / Z) over thermal draws with B != 0
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    double ratio_mean = 0.0;
    int ratio_samples = 0;
    std::vector<std::string> diagnostics;

    bool passed() const;
};

/// Random thermal draws with couplings uniform in [-5, 5] (beta = 1), plus
/// zero-field variants and the (gamma, J, Jz) = (1, 1, -3) zero-field point,
/// each compared against the oracles.
VerifyReport run_verification(int samples, std::uint64_t seed);

void print_report(std::ostream& os, const VerifyReport& report);

/// Searches (gamma, B) in [0, 3]^2 at J = 2, lambda = 0 for a critical window
/// closest to (jc1, jc2). Returns {gamma, B, residual}.
std::array<double, 3> invert_critical_pair(double jc1, double jc2);

}  // namespace xyzmin
