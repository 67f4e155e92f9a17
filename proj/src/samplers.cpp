#include "copent/samplers.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "copent/error.hpp"
#include "copent/special.hpp"

namespace copent {

namespace {

// log of a positive stable draw with exponent theta in (0, 1):
//   V = sin(θA)/sin(A)^(1/θ) · (sin((1-θ)A)/W)^((1-θ)/θ),  A ~ U(0, π), W ~ Exp(1).
// Evaluated in logs since the powers overflow for small θ.
double log_positive_stable(Rng& rng, double theta)
{
    const double angle = std::numbers::pi * rng.uniform();
    const double w = rng.exponential();
    return std::log(std::sin(theta * angle)) - std::log(std::sin(angle)) / theta +
           (1.0 - theta) / theta * (std::log(std::sin((1.0 - theta) * angle)) - std::log(w));
}

}  // namespace

CopulaSpec CopulaSpec::gaussian(double rho)
{
    CopulaSpec spec{CopulaFamily::Gaussian, rho};
    spec.validate();
    return spec;
}

CopulaSpec CopulaSpec::gumbel(double alpha)
{
    CopulaSpec spec{CopulaFamily::Gumbel, alpha};
    spec.validate();
    return spec;
}

void CopulaSpec::validate() const
{
    switch (family) {
    case CopulaFamily::Gaussian:
        if (!(std::abs(parameter) < 1.0)) {
            throw DomainError("Gaussian copula needs |rho| < 1");
        }
        break;
    case CopulaFamily::Gumbel:
        if (!(parameter >= 1.0) || !std::isfinite(parameter)) {
            throw DomainError("Gumbel copula needs alpha >= 1");
        }
        break;
    }
}

MarginalSpec MarginalSpec::normal(double mean, double sd)
{
    if (!(sd > 0.0) || !std::isfinite(mean) || !std::isfinite(sd)) {
        throw DomainError("normal marginal needs a finite mean and sd > 0");
    }
    return MarginalSpec{Family::Normal, mean, sd};
}

MarginalSpec MarginalSpec::exponential(double rate)
{
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw DomainError("exponential marginal needs rate > 0");
    }
    return MarginalSpec{Family::Exponential, 0.0, rate};
}

double MarginalSpec::quantile(double u) const
{
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError("marginal quantile needs 0 < u < 1");
    }
    switch (family) {
    case Family::Normal: return location + scale * normal_quantile(u);
    case Family::Exponential: return -std::log1p(-u) / scale;
    }
    return 0.0;
}

std::string MarginalSpec::describe() const
{
    std::ostringstream out;
    if (family == Family::Normal) {
        out << "normal(" << location << ", " << scale << ")";
    } else {
        out << "exponential(" << scale << ")";
    }
    return out.str();
}

Matrix gaussian_copula_sample(Rng& rng, double rho, std::size_t n)
{
    CopulaSpec::gaussian(rho);
    const double tail = std::sqrt(1.0 - rho * rho);
    Matrix u(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (;;) {
            const double z1 = rng.normal();
            const double z2 = rho * z1 + tail * rng.normal();
            const double u1 = normal_cdf(z1);
            const double u2 = normal_cdf(z2);
            if (u1 > 0.0 && u1 < 1.0 && u2 > 0.0 && u2 < 1.0) {
                u(i, 0) = u1;
                u(i, 1) = u2;
                break;
            }
        }
    }
    return u;
}

Matrix gaussian_copula_sample(std::uint64_t seed, double rho, std::size_t n)
{
    Rng rng(seed);
    return gaussian_copula_sample(rng, rho, n);
}

double positive_stable(Rng& rng, double theta)
{
    if (!(theta > 0.0 && theta <= 1.0)) {
        throw DomainError("positive stable exponent must lie in (0, 1]");
    }
    if (theta == 1.0) {
        return 1.0;
    }
    return std::exp(log_positive_stable(rng, theta));
}

Matrix gumbel_copula_sample(Rng& rng, double alpha, std::size_t n)
{
    CopulaSpec::gumbel(alpha);
    Matrix u(n, 2);
    if (alpha == 1.0) {
        for (double& v : u.flat()) {
            v = rng.uniform();
        }
        return u;
    }

    const double theta = 1.0 / alpha;
    for (std::size_t i = 0; i < n; ++i) {
        for (;;) {
            const double log_v = log_positive_stable(rng, theta);
            bool inside = true;
            for (std::size_t j = 0; j < 2; ++j) {
                const double e = rng.exponential();
                const double v = std::exp(-std::exp(theta * (std::log(e) - log_v)));
                inside = inside && v > 0.0 && v < 1.0;
                u(i, j) = v;
            }
            if (inside) {
                break;
            }
        }
    }
    return u;
}

Matrix gumbel_copula_sample(std::uint64_t seed, double alpha, std::size_t n)
{
    Rng rng(seed);
    return gumbel_copula_sample(rng, alpha, n);
}

Matrix sample_copula(Rng& rng, const CopulaSpec& spec, std::size_t n)
{
    spec.validate();
    return spec.family == CopulaFamily::Gaussian ? gaussian_copula_sample(rng, spec.parameter, n)
                                                 : gumbel_copula_sample(rng, spec.parameter, n);
}

DataMatrix apply_marginals(const Matrix& u, std::span<const MarginalSpec> specs)
{
    if (specs.size() != u.cols()) {
        throw InvalidInputError("need one marginal per column (" + std::to_string(u.cols()) + "), got " +
                                std::to_string(specs.size()));
    }
    Matrix x(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i) {
        for (std::size_t j = 0; j < u.cols(); ++j) {
            x(i, j) = specs[j].quantile(u(i, j));
        }
    }
    return DataMatrix(std::move(x));
}

DataMatrix multivariate_normal_sample(Rng& rng, const Matrix& cholesky_factor, std::size_t n)
{
    const std::size_t d = cholesky_factor.rows();
    Matrix x(n, d, 0.0);
    std::vector<double> z(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (double& v : z) {
            v = rng.normal();
        }
        for (std::size_t a = 0; a < d; ++a) {
            double s = 0.0;
            for (std::size_t b = 0; b <= a; ++b) {
                s += cholesky_factor(a, b) * z[b];
            }
            x(i, a) = s;
        }
    }
    return DataMatrix(std::move(x));
}

}  // namespace copent
