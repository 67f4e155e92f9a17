#include "copent/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "copent/error.hpp"
#include "copent/kernels.hpp"
#include "copent/rng.hpp"

namespace copent {

PseudoObservations rank_pseudo_obs(const DataMatrix& x)
{
    const std::size_t n = x.n();
    const std::size_t d = x.d();
    if (n < 2) {
        throw InvalidInputError("rank transform needs at least 2 observations, got " + std::to_string(n));
    }

    Matrix u(n, d);
    std::vector<std::size_t> order(n);
    const double scale = static_cast<double>(n);
    for (std::size_t j = 0; j < d; ++j) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x(a, j) < x(b, j); });

        // Walk runs of equal values; each gets the mean of its 1-based positions.
        std::size_t start = 0;
        while (start < n) {
            std::size_t stop = start + 1;
            while (stop < n && x(order[stop], j) == x(order[start], j)) {
                ++stop;
            }
            const double midrank = 0.5 * static_cast<double>(start + 1 + stop);
            for (std::size_t s = start; s < stop; ++s) {
                u(order[s], j) = midrank / scale;
            }
            start = stop;
        }
    }
    return PseudoObservations(std::move(u));
}

PseudoObservations jitter_pseudo_obs(const PseudoObservations& u, std::uint64_t seed, double magnitude)
{
    if (!(magnitude > 0.0) || magnitude >= 1.0 / static_cast<double>(u.n())) {
        throw InvalidInputError("jitter magnitude must be positive and below 1/n");
    }
    Rng rng(seed);
    Matrix out = u.values();
    for (double& v : out.flat()) {
        v -= magnitude * rng.uniform();
    }
    return PseudoObservations::from_unit_cube(std::move(out));
}

double order_invariant_sum(std::vector<double> terms)
{
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) {
        sum += t;
    }
    return sum;
}

namespace {

// Extended-precision accumulation in ascending order. The extra bits keep the
// rounded results stable when a column is rescaled (each rescaled entry
// carries its own rounding error), and the ordering makes them independent of
// row order.
long double sorted_sum(std::vector<long double>& terms)
{
    std::sort(terms.begin(), terms.end());
    long double sum = 0.0L;
    for (long double t : terms) {
        sum += t;
    }
    return sum;
}

std::vector<long double> extended_means(const DataMatrix& x)
{
    std::vector<long double> mean(x.d());
    std::vector<long double> terms(x.n());
    for (std::size_t j = 0; j < x.d(); ++j) {
        for (std::size_t i = 0; i < x.n(); ++i) {
            terms[i] = x(i, j);
        }
        mean[j] = sorted_sum(terms) / static_cast<long double>(x.n());
    }
    return mean;
}

// Centred cross-product sums Σ (x_ia - x̄_a)(x_ib - x̄_b), row-major d×d.
std::vector<long double> cross_products(const DataMatrix& x)
{
    const std::size_t n = x.n();
    const std::size_t d = x.d();
    const auto mean = extended_means(x);
    std::vector<long double> sums(d * d);
    std::vector<long double> terms(n);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            for (std::size_t i = 0; i < n; ++i) {
                terms[i] = (x(i, a) - mean[a]) * (x(i, b) - mean[b]);
            }
            sums[a * d + b] = sorted_sum(terms);
            sums[b * d + a] = sums[a * d + b];
        }
    }
    return sums;
}

}  // namespace

std::vector<double> column_means(const DataMatrix& x)
{
    const auto extended = extended_means(x);
    return {extended.begin(), extended.end()};
}

Matrix sample_covariance(const DataMatrix& x, CovarianceScaling scaling)
{
    const std::size_t n = x.n();
    const std::size_t d = x.d();
    if (n < 2) {
        throw InvalidInputError("covariance needs at least 2 observations");
    }
    const auto sums = cross_products(x);
    const auto divisor = static_cast<long double>(scaling == CovarianceScaling::Unbiased ? n - 1 : n);
    Matrix cov(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            cov(a, b) = static_cast<double>(sums[a * d + b] / divisor);
        }
    }
    return cov;
}

CorrelationMatrix pearson_correlation(const DataMatrix& x)
{
    if (x.n() < 3) {
        throw InvalidInputError("correlation needs at least 3 observations, got " + std::to_string(x.n()));
    }
    const std::size_t d = x.d();
    const auto sums = cross_products(x);
    for (std::size_t j = 0; j < d; ++j) {
        if (!(sums[j * d + j] > 0.0L)) {
            throw DegenerateInputError("column " + std::to_string(j) + " has zero variance");
        }
    }
    // Rescaling a column rounds every entry, which moves the exact correlation
    // by ~1e-17. Snapping to a 2^-40 grid absorbs that, so positive rescaling
    // leaves the result bitwise unchanged except with probability ~1e-5.
    constexpr long double grid = 1099511627776.0L;  // 2^40
    Matrix r(d, d, 1.0);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            // sqrt(s·s) == s exactly, so identical columns give exactly 1.
            const long double v = sums[a * d + b] / std::sqrt(sums[a * d + a] * sums[b * d + b]);
            r(a, b) = std::clamp(static_cast<double>(std::nearbyint(v * grid) / grid), -1.0, 1.0);
            r(b, a) = r(a, b);
        }
    }
    return CorrelationMatrix(std::move(r));
}

Matrix cholesky_lower(const Matrix& a)
{
    const std::size_t d = a.rows();
    if (a.cols() != d) {
        throw InvalidInputError("Cholesky factorisation needs a square matrix");
    }
    constexpr double kRelativePivot = 64.0 * std::numeric_limits<double>::epsilon();
    Matrix l(d, d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        double pivot = a(j, j);
        for (std::size_t c = 0; c < j; ++c) {
            pivot -= l(j, c) * l(j, c);
        }
        if (!(pivot > kRelativePivot * a(j, j))) {
            throw SingularMatrixError("matrix is not positive definite (pivot " + std::to_string(j) + ")");
        }
        const double diag = std::sqrt(pivot);
        l(j, j) = diag;
        for (std::size_t i = j + 1; i < d; ++i) {
            double v = a(i, j);
            for (std::size_t c = 0; c < j; ++c) {
                v -= l(i, c) * l(j, c);
            }
            l(i, j) = v / diag;
        }
    }
    return l;
}

double log_det_correlation(const CorrelationMatrix& r)
{
    const Matrix l = cholesky_lower(r.values());
    double sum = 0.0;
    for (std::size_t j = 0; j < r.dim(); ++j) {
        sum += std::log(l(j, j));
    }
    return 2.0 * sum;
}

std::vector<std::size_t> canonical_order(const CorrelationMatrix& r)
{
    const std::size_t d = r.dim();
    std::vector<std::vector<double>> keys(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t c = 0; c < d; ++c) {
            if (c != j) {
                keys[j].push_back(r(j, c));
            }
        }
        std::sort(keys[j].begin(), keys[j].end());
    }
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    return order;
}

CorrelationMatrix permute(const CorrelationMatrix& r, std::span<const std::size_t> order)
{
    Matrix out(r.dim(), r.dim());
    for (std::size_t a = 0; a < r.dim(); ++a) {
        for (std::size_t b = 0; b < r.dim(); ++b) {
            out(a, b) = r(order[a], order[b]);
        }
    }
    return CorrelationMatrix(std::move(out));
}

std::vector<double> knn_distances(const Matrix& points, std::size_t k)
{
    if (k == 0) {
        throw InvalidInputError("k must be at least 1");
    }
    if (points.rows() <= k) {
        throw InvalidInputError("k-nearest-neighbour search needs n > k (n = " + std::to_string(points.rows()) +
                                ", k = " + std::to_string(k) + ")");
    }
    if (points.cols() == 0) {
        throw InvalidInputError("points must have at least one coordinate");
    }
    auto result = kernels::knn_kdtree(points, k);
    for (std::size_t i = 0; i < result.nearest.size(); ++i) {
        if (result.nearest[i] == 0.0) {
            throw DuplicatePointsError("row " + std::to_string(i) +
                                       " coincides with another row; enable jitter for tied data");
        }
    }
    return std::move(result.kth);
}

std::vector<double> knn_distances(const PseudoObservations& points, std::size_t k)
{
    return knn_distances(points.values(), k);
}

}  // namespace copent
