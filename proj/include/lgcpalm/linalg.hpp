#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgcp {

/// Dense row-major matrix of doubles. Sized for desk-scale problems
/// (the largest systems factored here are a few thousand square).
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    /// Pointer to the start of row i.
    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Thrown when a factorization cannot proceed; carries the failing pivot.
struct FactorizationError : std::runtime_error {
    std::size_t pivot_index;
    FactorizationError(const std::string& what, std::size_t pivot)
        : std::runtime_error(what), pivot_index(pivot) {}
};

/// Cholesky factorization A = L L^T with lower-triangular L.
class SymmetricFactorization {
  public:
    SymmetricFactorization() = default;
    explicit SymmetricFactorization(DenseMatrix lower) : lower_(std::move(lower)) {}

    const DenseMatrix& lower() const { return lower_; }
    std::size_t size() const { return lower_.rows(); }

    /// log det A = 2 sum_i log L_ii.
    double log_det() const;

  private:
    DenseMatrix lower_;
};

/// Factor a symmetric numerically-positive-definite matrix. If the first
/// attempt hits a non-positive pivot, 1e-10 * max|A_ii| is added to the
/// diagonal once and the factorization retried; a second failure throws
/// FactorizationError carrying the pivot index. Grid covariance matrices
/// from fine grids sit close to singular, which is what the retry is for.
SymmetricFactorization cholesky(const DenseMatrix& a);

/// Solve A z = b through the factor: L L^T z = b.
std::vector<double> solve_spd(const SymmetricFactorization& fact, std::span<const double> b);

/// Householder QR of a square full-rank matrix: A = Q R.
class OrthogonalTriangularFactorization {
  public:
    OrthogonalTriangularFactorization() = default;
    OrthogonalTriangularFactorization(DenseMatrix q, DenseMatrix r)
        : q_(std::move(q)), r_(std::move(r)) {}

    const DenseMatrix& orthogonal() const { return q_; }
    const DenseMatrix& triangular() const { return r_; }
    std::size_t size() const { return r_.rows(); }

  private:
    DenseMatrix q_;
    DenseMatrix r_;
};

OrthogonalTriangularFactorization qr(const DenseMatrix& a);

/// Solve A z = b as R z = Q^T b.
std::vector<double> solve_qr(const OrthogonalTriangularFactorization& fact,
                             std::span<const double> b);

/// log |det A| = sum_i log |R_ii|.
double log_abs_det_from_qr(const OrthogonalTriangularFactorization& fact);

/// Central finite differences (f(y + s e_i) - f(y - s e_i)) / (2 s).
std::vector<double> finite_difference_gradient(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> y, double step);

} // namespace lgcp
