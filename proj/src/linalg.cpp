#include "xyzmin/linalg.hpp"

#include "xyzmin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace xyzmin {

namespace {

void check_dim(Eigen::Index rows, Eigen::Index cols) {
    if (rows != cols || (rows != 2 && rows != 4)) {
        throw std::invalid_argument("ComplexMatrix: dimension must be 2 or 4, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void require_hermitian(const ComplexMatrix& m) {
    const double err = m.hermiticity_error();
    if (!(err <= kHermitianTol)) {
        throw NotHermitian("matrix is not Hermitian (max |m - m^dagger| = " + std::to_string(err) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) {
    check_dim(dim, dim);
    m_ = Storage::Zero(dim, dim);
}

ComplexMatrix::ComplexMatrix(const Storage& m) : m_(m) { check_dim(m.rows(), m.cols()); }

ComplexMatrix ComplexMatrix::identity(int dim) {
    check_dim(dim, dim);
    return ComplexMatrix(Storage(Storage::Identity(dim, dim)));
}

ComplexMatrix ComplexMatrix::from_rows(int dim, std::initializer_list<Complex> entries) {
    ComplexMatrix out(dim);
    if (entries.size() != static_cast<std::size_t>(dim * dim)) {
        throw std::invalid_argument("ComplexMatrix::from_rows: wrong entry count");
    }
    int k = 0;
    for (const Complex& z : entries) {
        out.m_(k / dim, k % dim) = z;
        ++k;
    }
    return out;
}

double ComplexMatrix::hermiticity_error() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    return ComplexMatrix(ComplexMatrix::Storage(a.m_ + b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return ComplexMatrix(ComplexMatrix::Storage(a.m_ - b.m_));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return ComplexMatrix(ComplexMatrix::Storage(a.m_ * b.m_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    return ComplexMatrix(ComplexMatrix::Storage(s * a.m_));
}

EigenSystem hermitian_eig(const ComplexMatrix& m) {
    require_hermitian(m);
    // Symmetrise so the solver sees an exactly Hermitian input.
    const ComplexMatrix::Storage h = 0.5 * (m.eigen() + m.eigen().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix::Storage> solver(h);
    const int n = m.dim();
    EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
    ComplexMatrix::Storage vecs(n, n);
    // Eigen returns ascending order.
    for (int k = 0; k < n; ++k) {
        out.values[k] = solver.eigenvalues()(n - 1 - k);
        vecs.col(k) = solver.eigenvectors().col(n - 1 - k);
    }
    out.vectors = ComplexMatrix(vecs);
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    require_hermitian(m);
    const ComplexMatrix::Storage h = 0.5 * (m.eigen() + m.eigen().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix::Storage> solver(h, Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
    std::reverse(values.begin(), values.end());
    return values;
}

double hs_norm(const ComplexMatrix& m) { return m.eigen().norm(); }

double trace_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (double v : hermitian_eigenvalues(m)) sum += std::abs(v);
    return sum;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    if (na * nb > 4) throw std::invalid_argument("kron: result dimension exceeds 4");
    ComplexMatrix out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return out;
}

const ComplexMatrix& pauli(int index) {
    static const std::array<ComplexMatrix, 4> table = {
        ComplexMatrix::identity(2),
        ComplexMatrix::from_rows(2, {0.0, 1.0, 1.0, 0.0}),
        ComplexMatrix::from_rows(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0}),
        ComplexMatrix::from_rows(2, {1.0, 0.0, 0.0, -1.0}),
    };
    if (index < 0 || index > 3) throw std::out_of_range("pauli: index must be 0..3");
    return table[index];
}

double sinhc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
    }
    return std::sinh(x) / x;
}

}  // namespace xyzmin
