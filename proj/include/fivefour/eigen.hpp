#pragma once

#include <cstddef>
#include <vector>

namespace fivefour {

// Small dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct EigenOptions {
    double off_diagonal_tolerance = 1e-12;  // relative to the Frobenius norm of the input
    int max_sweeps = 100;
    double symmetry_tolerance = 1e-12;
};

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Matrix vectors;              // column k pairs with values[k]
    int sweeps = 0;
};

// Cyclic Jacobi eigen-decomposition of a symmetric matrix. Eigenvectors are
// sign-normalized so their first nonzero component is positive; equal
// eigenvalues are ordered by comparing the normalized vectors
// lexicographically (larger first). Throws DataError for asymmetric input or
// when the sweep cap is hit.
EigenDecomposition symmetric_eigen(const Matrix& a, const EigenOptions& options = {});

// max |A - V diag(values) V^T|
double reconstruction_residual(const Matrix& a, const EigenDecomposition& eig);
// max |V^T V - I|
double orthonormality_residual(const Matrix& v);

}  // namespace fivefour
