#pragma once

// Test-only oracles. Each one recomputes a quantity by a route that does not
// share code with the library path it checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/non_central_chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include "copent/matrix.hpp"

namespace oracle {

// Kozachenko–Leonenko entropy with brute-force O(n²) neighbour search, a
// full sort per point, and boost's digamma.
inline double brute_force_entropy(const copent::Matrix& pts, std::size_t k)
{
    const std::size_t n = pts.rows();
    const std::size_t d = pts.cols();
    std::vector<double> eps(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> dist;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            double m = 0.0;
            for (std::size_t c = 0; c < d; ++c) m = std::max(m, std::fabs(pts(i, c) - pts(j, c)));
            dist.push_back(m);
        }
        std::sort(dist.begin(), dist.end());
        eps[i] = dist[k - 1];
    }
    std::sort(eps.begin(), eps.end());
    double s = 0.0;
    for (double e : eps) s += std::log(2.0 * e);
    return boost::math::digamma(static_cast<double>(n)) - boost::math::digamma(static_cast<double>(k)) +
           static_cast<double>(d) * s / static_cast<double>(n);
}

inline double kendall_tau(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    long long concordant = 0;
    long long discordant = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double s = (x[i] - x[j]) * (y[i] - y[j]);
            if (s > 0) ++concordant;
            else if (s < 0) ++discordant;
        }
    }
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return static_cast<double>(concordant - discordant) / pairs;
}

inline std::vector<double> plain_ranks(const std::vector<double>& v)
{
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] = static_cast<double>(i + 1);
    return r;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

inline double spearman_rho(const std::vector<double>& x, const std::vector<double>& y)
{
    return pearson(plain_ranks(x), plain_ranks(y));
}

// Kolmogorov–Smirnov distance of a sample from Uniform(0, 1).
inline double ks_uniform(std::vector<double> u)
{
    std::sort(u.begin(), u.end());
    const double n = static_cast<double>(u.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        worst = std::max({worst, std::fabs((i + 1) / n - u[i]), std::fabs(u[i] - i / n)});
    }
    return worst;
}

// E‖a - Z‖ = E√X with X ~ noncentral χ²_d(‖a‖²): adaptive Gauss–Kronrod over
// the bulk of the density (±40 standard deviations).
inline double expected_norm_quadrature(double norm_a, std::size_t d)
{
    const double lambda = norm_a * norm_a;
    const double dd = static_cast<double>(d);
    const double mean = dd + lambda;
    const double sd = std::sqrt(2.0 * (dd + 2.0 * lambda));
    const double lo = std::max(0.0, mean - 40.0 * sd);
    const double hi = mean + 40.0 * sd;
    auto integrand = [&](double x) {
        if (x <= 0.0) return 0.0;
        if (lambda == 0.0) return std::sqrt(x) * boost::math::pdf(boost::math::chi_squared(dd), x);
        return std::sqrt(x) * boost::math::pdf(boost::math::non_central_chi_squared(dd, lambda), x);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, lo, hi, 20, 1e-14);
}

}  // namespace oracle
