#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "copent/matrix.hpp"
#include "copent/rng.hpp"

namespace copent {

enum class CopulaFamily { Gaussian, Gumbel };

struct CopulaSpec {
    CopulaFamily family;
    double parameter;  ///< Gaussian: ρ in (-1, 1). Gumbel: α ≥ 1.

    static CopulaSpec gaussian(double rho);
    static CopulaSpec gumbel(double alpha);

    /// Throws DomainError when the parameter is outside the family's range.
    void validate() const;
};

struct MarginalSpec {
    enum class Family { Normal, Exponential };

    Family family;
    double location;  ///< normal mean; unused for exponential
    double scale;     ///< normal sd, or exponential rate

    static MarginalSpec normal(double mean, double sd);
    static MarginalSpec exponential(double rate);

    /// Quantile function. Throws DomainError unless 0 < u < 1.
    double quantile(double u) const;

    std::string describe() const;
};

/// Bivariate Gaussian copula sample, n×2 in (0, 1).
Matrix gaussian_copula_sample(std::uint64_t seed, double rho, std::size_t n);
Matrix gaussian_copula_sample(Rng& rng, double rho, std::size_t n);

/// Bivariate Gumbel copula sample, n×2 in (0, 1), by Marshall–Olkin sampling
/// with a positive stable frailty. α = 1 gives independent uniforms.
Matrix gumbel_copula_sample(std::uint64_t seed, double alpha, std::size_t n);
Matrix gumbel_copula_sample(Rng& rng, double alpha, std::size_t n);

Matrix sample_copula(Rng& rng, const CopulaSpec& spec, std::size_t n);

/// Positive stable variate with Laplace transform exp(-s^θ), 0 < θ ≤ 1
/// (Kanter's representation of the Chambers–Mallows–Stuck construction).
double positive_stable(Rng& rng, double theta);

/// Maps column j of u through specs[j].quantile.
DataMatrix apply_marginals(const Matrix& u, std::span<const MarginalSpec> specs);

/// n draws from the zero-mean Gaussian with covariance L·Lᵀ, L lower triangular.
DataMatrix multivariate_normal_sample(Rng& rng, const Matrix& cholesky_factor, std::size_t n);

}  // namespace copent
