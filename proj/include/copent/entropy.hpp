#pragma once

// Nonparametric copula entropy: rank transform followed by the
// Kozachenko–Leonenko k-nearest-neighbour entropy estimator under the max
// norm. The copula density itself is never materialised.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "copent/matrix.hpp"

namespace copent {

inline constexpr std::size_t kDefaultNeighbors = 3;

struct CeEstimate {
    double value;   ///< nats
    std::size_t k;
    std::size_t n;
    std::size_t d;
};

/// Differential entropy in nats,
///
///     Ĥ = ψ(n) - ψ(k) + (d/n)·Σ_i log(2·ε_i),
///
/// with ε_i the max-norm distance from point i to its k-th nearest neighbour.
/// (2ε)^d is the volume of the max-norm ball of radius ε.
double entropy_knn(const Matrix& points, std::size_t k = kDefaultNeighbors);

/// The estimator formula applied to precomputed k-th neighbour distances.
double entropy_from_distances(std::span<const double> kth_distances, std::size_t d, std::size_t k);

struct CopulaEntropyOptions {
    std::size_t k = kDefaultNeighbors;
    /// When set, tied pseudo-observations are separated by a seeded jitter
    /// instead of raising DuplicatePointsError.
    std::optional<std::uint64_t> jitter_seed;
};

/// Copula entropy of the sample: entropy_knn(rank_pseudo_obs(x)). Requires d ≥ 2.
/// Near 0 for independent columns, negative under dependence.
CeEstimate copula_entropy(const DataMatrix& x, const CopulaEntropyOptions& options = {});
CeEstimate copula_entropy(const DataMatrix& x, std::size_t k);

}  // namespace copent
