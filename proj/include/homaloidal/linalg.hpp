#pragma once

#include <stdexcept>
#include <vector>

#include "homaloidal/rational.hpp"

namespace homaloidal {

/// Dense matrix over exact rationals. Small sizes only (<= ~20).
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    static QMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const QMat& rhs) const = default;
    QMat operator+(const QMat& rhs) const;
    QMat operator-(const QMat& rhs) const;
    QMat operator*(const QMat& rhs) const;
    QMat operator*(const Rational& c) const;
    QMat transpose() const;
    bool is_symmetric() const;

    /// Exact determinant via fraction-free Gaussian elimination.
    Rational det() const;
    /// Exact inverse; throws std::domain_error when singular.
    QMat inverse() const;
    bool is_invertible() const;
    /// Leading principal minors det(M[0..k][0..k]) for k = 0..n-1.
    std::vector<Rational> leading_principal_minors() const;
    /// Submatrix with row i and column j removed (0-based).
    QMat minor_matrix(std::size_t i, std::size_t j) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Dense double matrix, just enough for LU determinants and Jacobi.
class DMat {
public:
    DMat() = default;
    DMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Determinant by partial-pivot LU.
    double det() const;
    std::vector<double> leading_principal_minors() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

DMat to_double(const QMat& m);

struct EigenDecomposition {
    std::vector<double> values;           // eigenvalues
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
};

/// Cyclic Jacobi rotations for a symmetric matrix. Off-diagonal threshold
/// 1e-13, at most 100 sweeps.
EigenDecomposition jacobi_eigen(const DMat& m);

}  // namespace homaloidal
