#pragma once

// Shared numerical kernel: rank transforms, correlation, Cholesky
// log-determinants and k-nearest-neighbour distances.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "copent/matrix.hpp"

namespace copent {

/// Pseudo-observation scaling: (mid)rank / n, so the largest value in a
/// column maps to exactly 1.
inline constexpr const char* kPseudoObsScaling = "rank/n";

/// Magnitude of the opt-in tie-breaking jitter applied to pseudo-observations.
inline constexpr double kDefaultJitter = 1e-10;

/// Column-wise midranks divided by n. Requires n ≥ 2.
PseudoObservations rank_pseudo_obs(const DataMatrix& x);

/// Deterministic tie breaking for discrete-ish data: subtracts a seeded
/// uniform(0, magnitude) offset from every entry. Entries stay in (0, 1].
PseudoObservations jitter_pseudo_obs(const PseudoObservations& u, std::uint64_t seed,
                                     double magnitude = kDefaultJitter);

/// Sum of the terms in ascending order: a function of the multiset only,
/// so statistics built on it are bitwise invariant under row permutations.
double order_invariant_sum(std::vector<double> terms);

std::vector<double> column_means(const DataMatrix& x);



enum class CovarianceScaling { Unbiased, MaximumLikelihood };

/// Sample covariance with divisor n-1 (Unbiased) or n (MaximumLikelihood).
Matrix sample_covariance(const DataMatrix& x, CovarianceScaling scaling);

/// Product-moment correlation. Requires n ≥ 3 and no constant column
/// (DegenerateInputError). The diagonal is exactly 1.
CorrelationMatrix pearson_correlation(const DataMatrix& x);

/// Lower Cholesky factor L with A = L·Lᵀ. Throws SingularMatrixError when a
/// pivot is not positive relative to the original diagonal.
Matrix cholesky_lower(const Matrix& a);

/// log|R| = 2·Σ log L_ii. Always ≤ 0 for a correlation matrix.
double log_det_correlation(const CorrelationMatrix& r);

/// Variable ordering keyed on each row's sorted off-diagonal correlations.
/// Any relabelling of the variables yields the same permuted matrix (barring
/// exactly tied keys), so a log-determinant taken in this order is bitwise
/// invariant under column permutations of the data.
std::vector<std::size_t> canonical_order(const CorrelationMatrix& r);

/// R with rows and columns reordered: out(a, b) = r(order[a], order[b]).
CorrelationMatrix permute(const CorrelationMatrix& r, std::span<const std::size_t> order);

/// Distance from each point to its k-th nearest other point under the max
/// norm. Exact; backed by a kd-tree with OpenMP-parallel queries.
/// Throws InvalidInputError when n ≤ k and DuplicatePointsError when two
/// rows coincide.
std::vector<double> knn_distances(const Matrix& points, std::size_t k);
std::vector<double> knn_distances(const PseudoObservations& points, std::size_t k);

}  // namespace copent
