#include "copent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "copent/error.hpp"
#include "copent/numerics.hpp"
#include "copent/special.hpp"

namespace copent {

double entropy_from_distances(std::span<const double> kth_distances, std::size_t d, std::size_t k)
{
    const std::size_t n = kth_distances.size();
    // Summed in ascending order so the estimate is a function of the
    // multiset of distances, independent of row order.
    std::vector<double> sorted(kth_distances.begin(), kth_distances.end());
    std::sort(sorted.begin(), sorted.end());
    double log_sum = 0.0;
    for (double eps : sorted) {
        log_sum += std::log(2.0 * eps);
    }
    return digamma(static_cast<double>(n)) - digamma(static_cast<double>(k)) +
           static_cast<double>(d) * log_sum / static_cast<double>(n);
}

double entropy_knn(const Matrix& points, std::size_t k)
{
    const auto eps = knn_distances(points, k);
    return entropy_from_distances(eps, points.cols(), k);
}

CeEstimate copula_entropy(const DataMatrix& x, const CopulaEntropyOptions& options)
{
    if (x.d() < 2) {
        throw InvalidInputError("copula entropy needs at least 2 columns, got " + std::to_string(x.d()));
    }
    if (options.k == 0 || x.n() <= options.k) {
        throw InvalidInputError("copula entropy needs n > k >= 1 (n = " + std::to_string(x.n()) +
                                ", k = " + std::to_string(options.k) + ")");
    }
    auto u = rank_pseudo_obs(x);
    if (options.jitter_seed) {
        u = jitter_pseudo_obs(u, *options.jitter_seed);
    }
    const double h = entropy_knn(u.values(), options.k);
    return CeEstimate{h, options.k, x.n(), x.d()};
}

CeEstimate copula_entropy(const DataMatrix& x, std::size_t k)
{
    return copula_entropy(x, CopulaEntropyOptions{.k = k, .jitter_seed = std::nullopt});
}

}  // namespace copent
