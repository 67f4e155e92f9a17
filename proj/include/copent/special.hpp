#pragma once

namespace copent {

/// ψ(x) for x > 0: upward recurrence to x ≥ 6, then the asymptotic series.
/// Absolute error below 1e-12 on the tested range. Throws DomainError for x ≤ 0.
double digamma(double x);

/// Standard normal CDF, via erfc.
double normal_cdf(double x);

/// Standard normal upper tail 1 - Φ(x), accurate in the far tail.
double normal_sf(double x);

/// Standard normal quantile Φ⁻¹(p), Wichura's AS241 (PPND16) rational
/// approximation. Throws DomainError unless 0 < p < 1.
double normal_quantile(double p);

/// log Γ(x) for x > 0. Thread-safe (does not touch signgam).
double log_gamma(double x);

/// Upper tail of the chi-square distribution with `df` degrees of freedom.
double chi_squared_sf(double x, double df);

/// Upper tail of the lognormal distribution with log-mean mu and log-sd sigma.
double lognormal_sf(double x, double mu, double sigma);

/// ₁F₁(-1/2; b; -x) for b > 0 and x ≥ 0.
///
/// For x ≤ 400 the Kummer transform e^{-x}·₁F₁(b + 1/2; b; x) is summed
/// directly (all terms positive). Beyond that the large-argument expansion
/// Γ(b)/Γ(b + 1/2)·√x·Σ (-1/2)_s (1/2 - b)_s / (s!·x^s) is used.
double hyp1f1_neg_half(double b, double x);

}  // namespace copent
