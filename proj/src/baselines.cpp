#include "copent/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "copent/error.hpp"
#include "copent/kernels.hpp"
#include "copent/numerics.hpp"
#include "copent/parallel.hpp"
#include "copent/rng.hpp"
#include "copent/samplers.hpp"
#include "copent/special.hpp"

namespace copent {

double TestResult::statistic(std::string_view name) const
{
    for (const auto& s : statistics) {
        if (s.name == name) {
            return s.value;
        }
    }
    throw InvalidInputError(method + " has no statistic named " + std::string(name));
}

std::optional<double> TestResult::p_value(std::string_view name) const
{
    for (const auto& p : p_values) {
        if (p.name == name) {
            return p.value;
        }
    }
    return std::nullopt;
}

std::optional<double> TestResult::combined_p_value() const
{
    if (p_values.empty()) {
        return std::nullopt;
    }
    double smallest = 1.0;
    for (const auto& p : p_values) {
        smallest = std::min(smallest, p.value);
    }
    return std::min(1.0, smallest * static_cast<double>(p_values.size()));
}

bool TestResult::rejects(double level) const
{
    const auto p = combined_p_value();
    return p && *p < level;
}

namespace {

void require_shape(const DataMatrix& x, const char* method)
{
    if (x.d() < 2) {
        throw InvalidInputError(std::string(method) + " needs at least 2 columns");
    }
    if (x.n() <= x.d()) {
        throw InvalidInputError(std::string(method) + " needs more observations than columns");
    }
}

// y_i = L⁻¹(x_i - x̄) with S = L·Lᵀ, so ‖y_i - y_j‖² and y_iᵀy_j are the
// Mahalanobis quantities under S.
Matrix whiten(const DataMatrix& x, CovarianceScaling scaling)
{
    const std::size_t n = x.n();
    const std::size_t d = x.d();
    const auto mean = column_means(x);
    const Matrix l = cholesky_lower(sample_covariance(x, scaling));
    Matrix y(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < d; ++a) {
            double v = x(i, a) - mean[a];
            for (std::size_t b = 0; b < a; ++b) {
                v -= l(a, b) * y(i, b);
            }
            y(i, a) = v / l(a, a);
        }
    }
    return y;
}

double clamp_probability(double p)
{
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

TestResult mardia(const DataMatrix& x)
{
    require_shape(x, "mardia");
    const auto n = static_cast<double>(x.n());
    const auto d = static_cast<double>(x.d());
    const Matrix y = whiten(x, CovarianceScaling::MaximumLikelihood);

    const double b1 = kernels::cubed_inner_product_sum(y) / (n * n);
    double b2 = 0.0;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        double g = 0.0;
        for (double v : y.row(i)) {
            g += v * v;
        }
        b2 += g * g;
    }
    b2 /= n;

    const double skewness = n * b1 / 6.0;
    const double df = d * (d + 1.0) * (d + 2.0) / 6.0;
    const double kurtosis = (b2 - d * (d + 2.0)) / std::sqrt(8.0 * d * (d + 2.0) / n);

    return TestResult{
        "mardia",
        {{"skewness", skewness}, {"kurtosis", kurtosis}, {"b1", b1}, {"b2", b2}},
        {{"skewness", clamp_probability(chi_squared_sf(skewness, df))},
         {"kurtosis", clamp_probability(2.0 * normal_sf(std::abs(kurtosis)))}},
    };
}

double henze_zirkler_bandwidth(std::size_t n, std::size_t d)
{
    const auto dd = static_cast<double>(d);
    return std::pow((2.0 * dd + 1.0) * static_cast<double>(n) / 4.0, 1.0 / (dd + 4.0)) / std::numbers::sqrt2;
}

TestResult henze_zirkler(const DataMatrix& x)
{
    require_shape(x, "henze_zirkler");
    const auto n = static_cast<double>(x.n());
    const auto d = static_cast<double>(x.d());
    const Matrix y = whiten(x, CovarianceScaling::MaximumLikelihood);

    const double beta = henze_zirkler_bandwidth(x.n(), x.d());
    const double b2 = beta * beta;

    const double pair_term = kernels::gaussian_kernel_sum(y, 0.5 * b2) / (n * n);
    double centre_term = 0.0;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        double sq = 0.0;
        for (double v : y.row(i)) {
            sq += v * v;
        }
        centre_term += std::exp(-b2 * sq / (2.0 * (1.0 + b2)));
    }
    centre_term *= 2.0 * std::pow(1.0 + b2, -0.5 * d) / n;
    const double hz = n * (pair_term - centre_term + std::pow(1.0 + 2.0 * b2, -0.5 * d));

    // Null moments of the statistic (Henze & Zirkler, 1990) and the matching lognormal.
    const double a = 1.0 + 2.0 * b2;
    const double b4 = b2 * b2;
    const double mu = 1.0 - std::pow(a, -0.5 * d) * (1.0 + d * b2 / a + d * (d + 2.0) * b4 / (2.0 * a * a));
    const double w = (1.0 + b2) * (1.0 + 3.0 * b2);
    const double var = 2.0 * std::pow(1.0 + 4.0 * b2, -0.5 * d) +
                       2.0 * std::pow(a, -d) * (1.0 + 2.0 * d * b4 / (a * a) + 3.0 * d * (d + 2.0) * b4 * b4 / (4.0 * std::pow(a, 4))) -
                       4.0 * std::pow(w, -0.5 * d) * (1.0 + 3.0 * d * b4 / (2.0 * w) + d * (d + 2.0) * b4 * b4 / (2.0 * w * w));
    const double log_mean = std::log(std::sqrt(std::pow(mu, 4) / (var + mu * mu)));
    const double log_sd = std::sqrt(std::log((var + mu * mu) / (mu * mu)));

    return TestResult{
        "hz",
        {{"hz", hz}, {"beta", beta}},
        {{"hz", clamp_probability(lognormal_sf(hz, log_mean, log_sd))}},
    };
}

TestResult doornik_hansen(const DataMatrix& x)
{
    if (x.d() < 2) {
        throw InvalidInputError("doornik_hansen needs at least 2 columns");
    }
    if (x.n() < 8) {
        throw InvalidInputError("doornik_hansen needs at least 8 observations");
    }
    const std::size_t rows = x.n();
    const std::size_t cols = x.d();

    const Matrix cov = sample_covariance(x, CovarianceScaling::Unbiased);
    for (std::size_t j = 0; j < cols; ++j) {
        if (!(cov(j, j) > 0.0)) {
            throw SingularMatrixError("column " + std::to_string(j) + " has zero variance");
        }
    }
    const CorrelationMatrix corr = pearson_correlation(x);
    cholesky_lower(corr.values());  // rejects singular correlation

    Eigen::MatrixXd c(cols, cols);
    for (std::size_t a = 0; a < cols; ++a) {
        for (std::size_t b = 0; b < cols; ++b) {
            c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = corr(a, b);
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
    const Eigen::MatrixXd& h = eig.eigenvectors();
    const Eigen::MatrixXd transform =
        h * eig.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() * h.transpose();

    const auto mean = column_means(x);
    Eigen::MatrixXd scaled(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            scaled(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                (x(i, j) - mean[j]) / std::sqrt(cov(j, j));
        }
    }
    const Eigen::MatrixXd y = scaled * transform;  // transform is symmetric

    const auto n = static_cast<double>(rows);
    const double del = (n - 3.0) * (n + 1.0) * (n * n + 15.0 * n - 4.0);
    const double a_coef = (n - 2.0) * (n + 5.0) * (n + 7.0) * (n * n + 27.0 * n - 70.0) / (6.0 * del);
    const double c_coef = (n - 7.0) * (n + 5.0) * (n + 7.0) * (n * n + 2.0 * n - 5.0) / (6.0 * del);
    const double k_coef = (n + 5.0) * (n + 7.0) * (n * n * n + 37.0 * n * n + 11.0 * n - 313.0) / (12.0 * del);
    const double beta = 3.0 * (n * n + 27.0 * n - 70.0) * (n + 1.0) * (n + 3.0) /
                        ((n - 2.0) * (n + 5.0) * (n + 7.0) * (n + 9.0));
    const double w2 = -1.0 + std::sqrt(2.0 * (beta - 1.0));
    const double delta = 1.0 / std::sqrt(std::log(std::sqrt(w2)));
    const double skew_scale = std::sqrt((w2 - 1.0) / 2.0 * (n + 1.0) * (n + 3.0) / (6.0 * (n - 2.0)));

    double omnibus = 0.0;
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
        const auto col = y.col(j);
        const double m = col.mean();
        double m2 = 0.0;
        double m3 = 0.0;
        double m4 = 0.0;
        for (Eigen::Index i = 0; i < col.size(); ++i) {
            const double v = col(i) - m;
            const double v2 = v * v;
            m2 += v2;
            m3 += v2 * v;
            m4 += v2 * v2;
        }
        m2 /= n;
        m3 /= n;
        m4 /= n;
        const double skew = m3 / std::pow(m2, 1.5);
        const double kurt = m4 / (m2 * m2);

        const double ys = skew * skew_scale;
        const double z1 = delta * std::log(ys + std::sqrt(ys * ys + 1.0));

        const double alpha = a_coef + c_coef * skew * skew;
        const double chi = (kurt - 1.0 - skew * skew) * 2.0 * k_coef;
        const double z2 = (std::cbrt(chi / (2.0 * alpha)) - 1.0 + 1.0 / (9.0 * alpha)) * std::sqrt(9.0 * alpha);
        omnibus += z1 * z1 + z2 * z2;
    }

    return TestResult{
        "dh",
        {{"dh", omnibus}},
        {{"dh", clamp_probability(chi_squared_sf(omnibus, 2.0 * static_cast<double>(cols)))}},
    };
}

double expected_gaussian_distance(std::size_t d)
{
    const auto dd = static_cast<double>(d);
    return 2.0 * std::exp(log_gamma(0.5 * (dd + 1.0)) - log_gamma(0.5 * dd));
}

double expected_norm_to_gaussian(std::span<const double> a)
{
    if (a.empty()) {
        throw InvalidInputError("expected_norm_to_gaussian needs a point with d >= 1");
    }
    const auto d = static_cast<double>(a.size());
    double sq = 0.0;
    for (double v : a) {
        sq += v * v;
    }
    const double prefactor = std::numbers::sqrt2 * std::exp(log_gamma(0.5 * (d + 1.0)) - log_gamma(0.5 * d));
    return prefactor * hyp1f1_neg_half(0.5 * d, 0.5 * sq);
}

namespace {

double energy_of_whitened(const Matrix& y)
{
    const auto n = static_cast<double>(y.rows());
    double to_gaussian = 0.0;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        to_gaussian += expected_norm_to_gaussian(y.row(i));
    }
    to_gaussian /= n;
    const double within = kernels::euclidean_distance_sum(y) / (n * n);
    const double stat = n * (2.0 * to_gaussian - expected_gaussian_distance(y.cols()) - within);
    return std::max(stat, 0.0);
}

}  // namespace

double energy_statistic(const DataMatrix& x)
{
    require_shape(x, "energy");
    return energy_of_whitened(whiten(x, CovarianceScaling::Unbiased));
}

TestResult energy_test(const DataMatrix& x, std::size_t reps, std::uint64_t seed)
{
    if (reps == 0) {
        throw InvalidInputError("energy test needs at least one bootstrap replicate");
    }
    const double observed = energy_statistic(x);

    const Rng root(seed);
    const std::size_t n = x.n();
    const std::size_t d = x.d();
    Matrix identity(d, d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        identity(j, j) = 1.0;
    }
    std::vector<double> replicate(reps);
    parallel_for(reps, [&](std::size_t b) {
        Rng stream = root.split(b);
        replicate[b] = energy_statistic(multivariate_normal_sample(stream, identity, n));
    });
    std::size_t exceed = 0;
    for (double e : replicate) {
        if (e >= observed) {
            ++exceed;
        }
    }
    const double p = static_cast<double>(1 + exceed) / static_cast<double>(reps + 1);
    return TestResult{"energy", {{"energy", observed}}, {{"energy", p}}};
}

}  // namespace copent
