#include "testing.hpp"

#include "xyzmin/errors.hpp"
#include "xyzmin/linalg.hpp"

#include <doctest.h>

#include <cmath>

using namespace xyzmin;

TEST_CASE("eigenvalues of simple matrices") {
    auto id = hermitian_eig(ComplexMatrix::identity(2));
    CHECK(id.values[0] == doctest::Approx(1.0));
    CHECK(id.values[1] == doctest::Approx(1.0));

    auto z = hermitian_eig(pauli(3));
    CHECK(z.values[0] == doctest::Approx(1.0));
    CHECK(z.values[1] == doctest::Approx(-1.0));
    CHECK(std::abs(z.vectors(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(z.vectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("eigenvalues of the isotropic Hamiltonian match the level formula") {
    // J = Jz = 1, no field: E = Jz/2 (twice), -Jz/2 +- J.
    const ModelParams p{.J = 1, .Jz = 1};
    const auto es = hermitian_eig(build_hamiltonian(p));
    CHECK(es.values[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(es.values[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(es.values[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(es.values[3] == doctest::Approx(-1.5).epsilon(1e-14));
}

TEST_CASE("norms and kron") {
    CHECK(hs_norm(pauli(1)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(trace_norm(pauli(3)) == doctest::Approx(2.0));
    ComplexMatrix d(4);
    d(0, 0) = 0.5;
    d(3, 3) = -0.5;
    CHECK(trace_norm(d) == doctest::Approx(1.0));

    const ComplexMatrix xz = kron(pauli(1), pauli(3));
    CHECK(xz.dim() == 4);
    CHECK(xz(0, 2) == Complex(1.0));
    CHECK(xz(1, 3) == Complex(-1.0));
    CHECK_THROWS_AS(kron(xz, pauli(1)), std::invalid_argument);
}

TEST_CASE("non-Hermitian input is rejected") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
    CHECK_THROWS_AS(trace_norm(m), NotHermitian);
    CHECK_THROWS_AS(ComplexMatrix(3), std::invalid_argument);
}

TEST_CASE("random Hermitian matrices: reconstruction and norm identities") {
    testing::Rng rng(testing::seed());
    MESSAGE("seed " << testing::seed());
    std::normal_distribution<double> n;
    for (int trial = 0; trial < 200; ++trial) {
        ComplexMatrix::Storage g(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = Complex(n(rng), n(rng));
        // Force a degenerate cluster every few trials.
        if (trial % 5 == 0) {
            Eigen::Matrix4cd q = Eigen::HouseholderQR<Eigen::Matrix4cd>(Eigen::Matrix4cd(g)).householderQ();
            g = q * Eigen::Vector4d(1.0, 1.0, -2.0, 0.5).cast<Complex>().asDiagonal() * q.adjoint();
        }
        const ComplexMatrix m(ComplexMatrix::Storage(0.5 * (g + g.adjoint())));
        const auto es = hermitian_eig(m);

        for (int k = 0; k + 1 < 4; ++k) CHECK(es.values[k] >= es.values[k + 1]);
        const auto& v = es.vectors.eigen();
        CHECK((v.adjoint() * v - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-10);
        ComplexMatrix::Storage diag = ComplexMatrix::Storage::Zero(4, 4);
        double sum_sq = 0.0;
        for (int k = 0; k < 4; ++k) {
            diag(k, k) = es.values[k];
            sum_sq += es.values[k] * es.values[k];
        }
        const ComplexMatrix rebuilt(ComplexMatrix::Storage(v * diag * v.adjoint()));
        CHECK(rebuilt.max_abs_diff(m) < 1e-10);
        CHECK(hs_norm(m) * hs_norm(m) == doctest::Approx(sum_sq).epsilon(1e-12));
        CHECK(trace_norm(m) >= hs_norm(m) - 1e-12);
    }
    CHECK(hs_norm(ComplexMatrix(4)) == 0.0);
    CHECK(trace_norm(ComplexMatrix(4)) == 0.0);
}

TEST_CASE("sinhc") {
    CHECK(sinhc(0.0) == 1.0);
    for (double x : {1e-8, 1e-5, 9e-5, 1.1e-4, 0.3, -2.0, 7.0})
        CHECK(sinhc(x) == doctest::Approx(x == 0 ? 1.0 : std::sinh(x) / x).epsilon(1e-15));
}
