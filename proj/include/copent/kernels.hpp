#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a serial reference
// implementation that produces bitwise-identical results; the references are
// kept for tests and for the benchmark.
//
// Reductions are deterministic: per-row partial results are computed in
// parallel and then summed serially in row order, so the output does not
// depend on the thread count.

#include <cstddef>
#include <vector>

#include "copent/matrix.hpp"

namespace copent::kernels {

struct NeighborDistances {
    std::vector<double> kth;      ///< distance to the k-th nearest other point
    std::vector<double> nearest;  ///< distance to the nearest other point
};

/// Max-norm distance between two equal-length rows.
double max_norm_distance(std::span<const double> a, std::span<const double> b) noexcept;

/// kd-tree k-nearest-neighbour search, one query per point, parallel over queries.
NeighborDistances knn_kdtree(const Matrix& points, std::size_t k);

/// Σ_i Σ_j exp(-scale·‖y_i - y_j‖²), over all ordered pairs including i = j.
double gaussian_kernel_sum(const Matrix& y, double scale);

/// Σ_i Σ_j ‖y_i - y_j‖ (Euclidean), over all ordered pairs.
double euclidean_distance_sum(const Matrix& y);

/// Σ_i Σ_j g_ij³ with g_ij = y_iᵀ y_j (rows already whitened).
double cubed_inner_product_sum(const Matrix& y);

namespace reference {

NeighborDistances knn_brute_force(const Matrix& points, std::size_t k);
double gaussian_kernel_sum(const Matrix& y, double scale);
double euclidean_distance_sum(const Matrix& y);
double cubed_inner_product_sum(const Matrix& y);

}  // namespace reference

}  // namespace copent::kernels
