#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace copent {

/// Dense row-major matrix of doubles. Carries no invariants of its own; the
/// domain types below wrap it and validate on construction.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return values_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) noexcept { return {values_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const noexcept { return {values_.data() + i * cols_, cols_}; }
    std::vector<double> column(std::size_t j) const;

    std::span<const double> flat() const noexcept { return values_; }
    std::span<double> flat() noexcept { return values_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// n×d sample, one observation per row. All entries finite, n ≥ 1, d ≥ 1.
class DataMatrix {
public:
    explicit DataMatrix(Matrix values);
    DataMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t n() const noexcept { return values_.rows(); }
    std::size_t d() const noexcept { return values_.cols(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }
    std::span<const double> row(std::size_t i) const noexcept { return values_.row(i); }
    std::vector<double> column(std::size_t j) const { return values_.column(j); }
    const Matrix& values() const noexcept { return values_; }

    bool operator==(const DataMatrix&) const = default;

private:
    Matrix values_;
};

/// Rank-transformed sample: entries in (0, 1], each column a set of
/// (mid)ranks divided by n.
class PseudoObservations {
public:
    std::size_t n() const noexcept { return values_.rows(); }
    std::size_t d() const noexcept { return values_.cols(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }
    std::span<const double> row(std::size_t i) const noexcept { return values_.row(i); }
    const Matrix& values() const noexcept { return values_; }

    bool operator==(const PseudoObservations&) const = default;

    /// Wraps values that are already known to lie in (0, 1]; throws
    /// DomainError otherwise. Used for copula samples and jittered ranks.
    static PseudoObservations from_unit_cube(Matrix values);

private:
    friend PseudoObservations rank_pseudo_obs(const DataMatrix& x);
    explicit PseudoObservations(Matrix values) : values_(std::move(values)) {}

    Matrix values_;
};

/// d×d symmetric matrix with unit diagonal and entries in [-1, 1].
/// Positive definiteness is checked where it matters (Cholesky), since a
/// perfectly correlated sample legitimately yields a singular matrix here.
class CorrelationMatrix {
public:
    explicit CorrelationMatrix(Matrix values);
    static CorrelationMatrix identity(std::size_t d);

    std::size_t dim() const noexcept { return values_.rows(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_(i, j); }
    const Matrix& values() const noexcept { return values_; }

    bool operator==(const CorrelationMatrix&) const = default;

private:
    Matrix values_;
};

}  // namespace copent
