#pragma once

// Comparison tests of multivariate normality: Mardia's skewness and kurtosis,
// Henze–Zirkler, Doornik–Hansen and the energy-distance test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copent/matrix.hpp"

namespace copent {

struct NamedValue {
    std::string name;
    double value;
};

struct TestResult {
    std::string method;
    std::vector<NamedValue> statistics;
    std::vector<NamedValue> p_values;

    /// Throws InvalidInputError for unknown names.
    double statistic(std::string_view name) const;
    std::optional<double> p_value(std::string_view name) const;

    /// Bonferroni-combined p-value over all reported p-values,
    /// min(1, m·min p). Equals the single p-value for one-p tests.
    std::optional<double> combined_p_value() const;

    bool rejects(double level) const;
};

/// Mardia's tests. Statistics: "skewness" (n·b₁/6, chi-square on
/// d(d+1)(d+2)/6 df), "kurtosis" ((b₂ - d(d+2))/√(8d(d+2)/n), two-sided
/// normal), plus the raw moments "b1" and "b2". Uses the maximum-likelihood
/// covariance; no small-sample skewness correction.
TestResult mardia(const DataMatrix& x);

/// Henze–Zirkler bandwidth β = 2^(-1/2)·((2d+1)n/4)^(1/(d+4)).
double henze_zirkler_bandwidth(std::size_t n, std::size_t d);

/// Henze–Zirkler weighted L2 statistic with the lognormal p-value
/// approximation.
TestResult henze_zirkler(const DataMatrix& x);

/// Doornik–Hansen omnibus statistic, chi-square on 2d df. Needs n ≥ 8.
TestResult doornik_hansen(const DataMatrix& x);

/// E‖a - Z‖ for Z standard normal in dim(a) dimensions:
/// √2·Γ((d+1)/2)/Γ(d/2)·₁F₁(-1/2; d/2; -‖a‖²/2).
double expected_norm_to_gaussian(std::span<const double> a);

/// E‖Z - Z'‖ = 2·Γ((d+1)/2)/Γ(d/2) for independent standard normals.
double expected_gaussian_distance(std::size_t d);

/// Energy statistic of the Mahalanobis-standardised sample against N(0, I).
double energy_statistic(const DataMatrix& x);

/// Energy test with a parametric-bootstrap p-value (replicate b drawn from
/// Rng(seed).split(b), standardised like the data).
TestResult energy_test(const DataMatrix& x, std::size_t reps, std::uint64_t seed);

}  // namespace copent
