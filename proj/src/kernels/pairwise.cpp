#include <cmath>
#include <vector>

#include "copent/kernels.hpp"

namespace copent::kernels {

namespace {

// Runs row_fn(i) for every row in parallel and sums the results in row order.
template <typename RowFn>
double ordered_row_sum(std::size_t n, RowFn row_fn)
{
    std::vector<double> partial(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        partial[static_cast<std::size_t>(i)] = row_fn(static_cast<std::size_t>(i));
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

}  // namespace

double gaussian_kernel_sum(const Matrix& y, double scale)
{
    const std::size_t n = y.rows();
    const std::size_t d = y.cols();
    return ordered_row_sum(n, [&](std::size_t i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double diff = y(i, c) - y(j, c);
                sq += diff * diff;
            }
            row_sum += std::exp(-scale * sq);
        }
        return row_sum;
    });
}

double euclidean_distance_sum(const Matrix& y)
{
    const std::size_t n = y.rows();
    const std::size_t d = y.cols();
    return ordered_row_sum(n, [&](std::size_t i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double diff = y(i, c) - y(j, c);
                sq += diff * diff;
            }
            row_sum += std::sqrt(sq);
        }
        return row_sum;
    });
}

double cubed_inner_product_sum(const Matrix& y)
{
    const std::size_t n = y.rows();
    const std::size_t d = y.cols();
    return ordered_row_sum(n, [&](std::size_t i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double g = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                g += y(i, c) * y(j, c);
            }
            row_sum += g * g * g;
        }
        return row_sum;
    });
}

}  // namespace copent::kernels
