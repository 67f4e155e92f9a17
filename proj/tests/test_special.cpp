#include <cmath>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/math/distributions/normal.hpp>
#include <gtest/gtest.h>

#include "copent/error.hpp"
#include "copent/special.hpp"

TEST(Digamma, TabledValues)
{
    EXPECT_NEAR(copent::digamma(1.0), -0.5772156649, 1e-10);
    EXPECT_NEAR(copent::digamma(2.0), 0.4227843351, 1e-10);
    EXPECT_NEAR(copent::digamma(0.5), -1.9635100260, 1e-10);
}

TEST(Digamma, Recurrence)
{
    for (double x = 0.05; x < 60.0; x *= 1.37) {
        EXPECT_NEAR(copent::digamma(x + 1.0), copent::digamma(x) + 1.0 / x, 1e-10) << "x=" << x;
    }
}

TEST(Digamma, MatchesBoost)
{
    for (double x : {0.01, 0.3, 1.5, 3.0, 5.999, 6.0, 17.25, 800.0, 1e6}) {
        EXPECT_NEAR(copent::digamma(x), boost::math::digamma(x), 1e-12 * std::max(1.0, std::fabs(std::log(x))));
    }
}

TEST(Digamma, DomainError)
{
    EXPECT_THROW(copent::digamma(0.0), copent::DomainError);
    EXPECT_THROW(copent::digamma(-2.5), copent::DomainError);
}

TEST(NormalQuantile, TabledValues)
{
    EXPECT_EQ(copent::normal_quantile(0.5), 0.0);
    EXPECT_NEAR(copent::normal_quantile(0.975), 1.959964, 1e-6);
}

TEST(NormalQuantile, CdfRoundtrip)
{
    for (double p : {0.001, 0.3, 0.999}) EXPECT_NEAR(copent::normal_cdf(copent::normal_quantile(p)), p, 1e-9);
}

TEST(NormalQuantile, MatchesBoostAcrossRange)
{
    const boost::math::normal_distribution<> z;
    for (double p : {1e-300, 1e-20, 1e-8, 0.01, 0.075, 0.425, 0.5, 0.6, 0.925, 0.99, 1 - 1e-12}) {
        const double expected = boost::math::quantile(z, p);
        EXPECT_NEAR(copent::normal_quantile(p), expected, 1e-13 * std::max(1.0, std::fabs(expected))) << p;
    }
}

TEST(NormalQuantile, DomainError)
{
    EXPECT_THROW(copent::normal_quantile(0.0), copent::DomainError);
    EXPECT_THROW(copent::normal_quantile(1.0), copent::DomainError);
}

TEST(NormalTail, FarTailIsAccurate)
{
    EXPECT_NEAR(copent::normal_sf(10.0) / 7.619853024160527e-24, 1.0, 1e-12);
    EXPECT_NEAR(copent::normal_cdf(-1.0) + copent::normal_sf(-1.0), 1.0, 1e-15);
}

TEST(ChiSquared, UpperTail)
{
    EXPECT_NEAR(copent::chi_squared_sf(9.487729036781154, 4.0), 0.05, 1e-12);
    EXPECT_NEAR(copent::chi_squared_sf(2.0, 2.0), std::exp(-1.0), 1e-15);
}

TEST(LogGamma, MatchesBoost)
{
    for (double x : {0.5, 1.0, 2.5, 10.0, 171.5}) EXPECT_NEAR(copent::log_gamma(x), boost::math::lgamma(x), 1e-12);
}

TEST(Hyp1f1NegHalf, ZeroArgumentIsOne)
{
    EXPECT_EQ(copent::hyp1f1_neg_half(1.0, 0.0), 1.0);
}

TEST(Hyp1f1NegHalf, MatchesBoostOnBothBranches)
{
    for (double b : {0.5, 1.0, 1.5, 2.5}) {
        for (double x : {0.1, 1.0, 25.0, 399.0, 401.0, 2000.0, 5000.0}) {
            const double expected = boost::math::hypergeometric_1F1(-0.5, b, -x);
            EXPECT_NEAR(copent::hyp1f1_neg_half(b, x) / expected, 1.0, 1e-10) << "b=" << b << " x=" << x;
        }
    }
}
