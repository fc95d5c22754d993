#pragma once

// Seeded generators shared by the unit tests.

#include "xyzmin/model.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace xyzmin::testing {

using Rng = std::mt19937_64;

/// Fixed seed; override with XYZMIN_TEST_SEED.
std::uint64_t seed();

ModelParams random_params(Rng& rng, double range = 5.0);

Eigen::Matrix2cd random_unitary(Rng& rng);

/// (U x V) rho (U x V)^dagger.
DensityMatrix local_rotate(const DensityMatrix& rho, const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v);

/// Ginibre-distributed full-rank state.
DensityMatrix random_state(Rng& rng);

/// State whose qubit-a reduced state is I/2 (zero Bloch vector a).
DensityMatrix random_zero_bloch_state(Rng& rng);

/// Real X-shaped state (diagonal Pauli correlations).
DensityMatrix random_x_state(Rng& rng);

/// State of the form 1/4 (I + a.sigma x I + I x b.sigma + sum c_i sigma_i x sigma_i)
/// with arbitrary directions of a and b (rejection sampled for positivity).
DensityMatrix random_diagonal_corr_state(Rng& rng);

DensityMatrix bell_phi_plus();

}  // namespace xyzmin::testing
