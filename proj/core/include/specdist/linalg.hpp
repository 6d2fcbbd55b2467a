#pragma once

#include "specdist/numtheory.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace specdist::linalg {

// Dense real matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

// Real symmetric matrix; set() writes both (i,j) and (j,i) so the stored
// entries are symmetric exactly, not within tolerance.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}
    static SymMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        a_[i * dim_ + j] = v;
        a_[j * dim_ + i] = v;
    }

    bool operator==(const SymMatrix&) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<double> a_;
};

// Exact-integer symmetric matrix for the cyclotomic Gram closed forms.
// Entry magnitudes are bounded by the conductor, far inside int64 range.
class IntSymMatrix {
  public:
    IntSymMatrix() = default;
    explicit IntSymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
    static IntSymMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t v) {
        a_[i * dim_ + j] = v;
        a_[j * dim_ + i] = v;
    }

    SymMatrix to_sym() const;

    bool operator==(const IntSymMatrix&) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> a_;
};

class ComplexMatrix {
  public:
    using value_type = std::complex<double>;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, value_type(0.0, 0.0)) {}
    static ComplexMatrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    value_type operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<value_type> a_;
};

// Eigenvalues in ascending order.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::size_t dim() const { return eigenvalues.size(); }
    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

struct EigenSystem {
    Spectrum spectrum;
    Matrix vectors;  // column k is the unit eigenvector for eigenvalues[k]
};

SymMatrix kron(const SymMatrix& a, const SymMatrix& b);
IntSymMatrix kron(const IntSymMatrix& a, const IntSymMatrix& b);

SymMatrix toeplitz_from_vector(const std::vector<double>& v);
IntSymMatrix toeplitz_from_vector(const std::vector<std::int64_t>& v);

// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
// falls below 1e-12 * ||A||_F within a 100-sweep budget, then runs one more
// polishing sweep; throws std::runtime_error otherwise.
EigenSystem jacobi_eigensystem(const SymMatrix& a);
Spectrum jacobi_eigenvalues(const SymMatrix& a);

double frobenius_norm(const SymMatrix& a);
double frobenius_norm(const Matrix& a);
double frobenius_norm(const ComplexMatrix& a);
std::vector<double> row_norms(const ComplexMatrix& a);
std::vector<double> col_norms(const ComplexMatrix& a);

// Durand-Kerner with Gauss-Seidel updates; initial guesses on a circle of
// radius 1 + max|coeff| with a fixed irrational angle offset. For real input
// the result is post-processed into exact conjugate pairs (real roots have
// imaginary part exactly 0).
std::vector<std::complex<double>> polynomial_roots(const numtheory::IntPolynomial& p);

// LU with partial pivoting; returns 0 for singular input.
std::complex<double> complex_det(const ComplexMatrix& a);
// log|det| accumulated pivot by pivot, usable where det overflows a double;
// -inf for singular input.
double lu_log_abs_det(const ComplexMatrix& a);

}  // namespace specdist::linalg
