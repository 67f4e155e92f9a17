#include <algorithm>
#include <cmath>

#include "copent/kernels.hpp"

namespace copent::kernels {

double max_norm_distance(std::span<const double> a, std::span<const double> b) noexcept
{
    double dist = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        dist = std::max(dist, std::abs(a[j] - b[j]));
    }
    return dist;
}

namespace reference {

NeighborDistances knn_brute_force(const Matrix& points, std::size_t k)
{
    const std::size_t n = points.rows();
    NeighborDistances out{std::vector<double>(n), std::vector<double>(n)};
    std::vector<double> dist;
    dist.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                dist.push_back(max_norm_distance(points.row(i), points.row(j)));
            }
        }
        std::nth_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k - 1), dist.end());
        out.kth[i] = dist[k - 1];
        out.nearest[i] = *std::min_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return out;
}

double gaussian_kernel_sum(const Matrix& y, double scale)
{
    const std::size_t n = y.rows();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t c = 0; c < y.cols(); ++c) {
                const double diff = y(i, c) - y(j, c);
                sq += diff * diff;
            }
            row_sum += std::exp(-scale * sq);
        }
        total += row_sum;
    }
    return total;
}

double euclidean_distance_sum(const Matrix& y)
{
    const std::size_t n = y.rows();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t c = 0; c < y.cols(); ++c) {
                const double diff = y(i, c) - y(j, c);
                sq += diff * diff;
            }
            row_sum += std::sqrt(sq);
        }
        total += row_sum;
    }
    return total;
}

double cubed_inner_product_sum(const Matrix& y)
{
    const std::size_t n = y.rows();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double g = 0.0;
            for (std::size_t c = 0; c < y.cols(); ++c) {
                g += y(i, c) * y(j, c);
            }
            row_sum += g * g * g;
        }
        total += row_sum;
    }
    return total;
}

}  // namespace reference
}  // namespace copent::kernels
