#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

namespace xyzmin {

using Complex = std::complex<double>;

/// Dense complex matrix of dimension 2 (one qubit) or 4 (two qubits).
///
/// Storage is an Eigen matrix with a compile-time upper bound of 4x4, so no
/// heap allocation happens for any instance.
class ComplexMatrix {
public:
    using Storage = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;

    /// Zero matrix. Throws std::invalid_argument unless dim is 2 or 4.
    explicit ComplexMatrix(int dim);
    explicit ComplexMatrix(const Storage& m);

    static ComplexMatrix identity(int dim);
    /// Row-major entries; the entry count must be dim*dim.
    static ComplexMatrix from_rows(int dim, std::initializer_list<Complex> entries);

    int dim() const { return static_cast<int>(m_.rows()); }

    Complex operator()(int row, int col) const { return m_(row, col); }
    Complex& operator()(int row, int col) { return m_(row, col); }

    const Storage& eigen() const { return m_; }

    ComplexMatrix adjoint() const { return ComplexMatrix(Storage(m_.adjoint())); }
    ComplexMatrix conjugate() const { return ComplexMatrix(Storage(m_.conjugate())); }
    Complex trace() const { return m_.trace(); }

    /// Largest entrywise |m - m^dagger|.
    double hermiticity_error() const;
    /// Largest entrywise |m - other|.
    double max_abs_diff(const ComplexMatrix& other) const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

private:
    Storage m_;
};

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

inline constexpr double kHermitianTol = 1e-12;

/// Eigendecomposition of a Hermitian matrix. Throws NotHermitian when the
/// largest entrywise deviation from m^dagger exceeds kHermitianTol.
EigenSystem hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

double hs_norm(const ComplexMatrix& m);
/// Sum of absolute eigenvalues; Hermitian input only.
double trace_norm(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pauli matrices: index 0 is the identity, 1..3 are sigma_x, sigma_y, sigma_z.
const ComplexMatrix& pauli(int index);

/// sinh(x)/x with the removable singularity filled in.
double sinhc(double x);

}  // namespace xyzmin
