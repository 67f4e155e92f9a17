#include "copent/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "copent/error.hpp"

namespace copent {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill)
{
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values))
{
    if (values_.size() != rows * cols) {
        throw InvalidInputError("matrix storage size " + std::to_string(values_.size()) +
                                " does not match shape " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    values_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw InvalidInputError("ragged matrix literal");
        }
        values_.insert(values_.end(), r.begin(), r.end());
    }
}

std::vector<double> Matrix::column(std::size_t j) const
{
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

DataMatrix::DataMatrix(Matrix values) : values_(std::move(values))
{
    if (values_.rows() == 0 || values_.cols() == 0) {
        throw InvalidInputError("data matrix must have at least one row and one column");
    }
    for (double v : values_.flat()) {
        if (!std::isfinite(v)) {
            throw InvalidInputError("data matrix contains a non-finite entry");
        }
    }
}

DataMatrix::DataMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : DataMatrix(Matrix(rows))
{
}

PseudoObservations PseudoObservations::from_unit_cube(Matrix values)
{
    if (values.rows() == 0 || values.cols() == 0) {
        throw InvalidInputError("pseudo-observations must be non-empty");
    }
    for (double v : values.flat()) {
        if (!(v > 0.0 && v <= 1.0)) {
            throw DomainError("pseudo-observation outside (0, 1]");
        }
    }
    return PseudoObservations(std::move(values));
}

CorrelationMatrix::CorrelationMatrix(Matrix values) : values_(std::move(values))
{
    const std::size_t d = values_.rows();
    if (d == 0 || values_.cols() != d) {
        throw InvalidInputError("correlation matrix must be square and non-empty");
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (values_(i, i) != 1.0) {
            throw InvalidInputError("correlation matrix diagonal must be exactly 1");
        }
        for (std::size_t j = 0; j < d; ++j) {
            const double v = values_(i, j);
            if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
                throw InvalidInputError("correlation entry outside [-1, 1]");
            }
            if (std::abs(v - values_(j, i)) > 1e-12) {
                throw InvalidInputError("correlation matrix is not symmetric");
            }
        }
    }
}

CorrelationMatrix CorrelationMatrix::identity(std::size_t d)
{
    Matrix m(d, d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = 1.0;
    }
    return CorrelationMatrix(std::move(m));
}

}  // namespace copent
