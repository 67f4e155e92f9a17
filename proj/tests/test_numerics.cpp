#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "copent/error.hpp"
#include "copent/numerics.hpp"
#include "copent/rng.hpp"
#include "oracles.hpp"

using copent::CorrelationMatrix;
using copent::DataMatrix;
using copent::Matrix;

namespace {

DataMatrix normal_columns(std::uint64_t seed, std::size_t n, std::size_t d)
{
    copent::Rng rng(seed);
    Matrix m(n, d);
    for (double& v : m.flat()) v = rng.normal();
    return DataMatrix(std::move(m));
}

}  // namespace

TEST(RankPseudoObs, DistinctValues)
{
    const auto u = copent::rank_pseudo_obs(DataMatrix{{3.1}, {1.2}, {5.0}});
    EXPECT_DOUBLE_EQ(u(0, 0), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(u(1, 0), 1.0 / 3.0);
    EXPECT_EQ(u(2, 0), 1.0);
}

TEST(RankPseudoObs, TiesGetMidranks)
{
    const auto u = copent::rank_pseudo_obs(DataMatrix{{1.0}, {1.0}, {2.0}});
    EXPECT_EQ(u(0, 0), 0.5);
    EXPECT_EQ(u(1, 0), 0.5);
    EXPECT_EQ(u(2, 0), 1.0);
}

TEST(RankPseudoObs, StrictlyIncreasingTransformLeavesOutputIdentical)
{
    const auto x = normal_columns(1, 300, 3);
    Matrix t = x.values();
    for (std::size_t i = 0; i < t.rows(); ++i) {
        t(i, 0) = std::exp(t(i, 0));
        t(i, 1) = t(i, 1) * t(i, 1) * t(i, 1) + 4.0;
        t(i, 2) = std::atan(t(i, 2));
    }
    EXPECT_EQ(copent::rank_pseudo_obs(x), copent::rank_pseudo_obs(DataMatrix(std::move(t))));
}

TEST(RankPseudoObs, MatchesPlainRanksWithoutTies)
{
    const auto x = normal_columns(2, 50, 2);
    const auto u = copent::rank_pseudo_obs(x);
    for (std::size_t j = 0; j < 2; ++j) {
        const auto ranks = oracle::plain_ranks(x.column(j));
        for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(u(i, j), ranks[i] / 50.0);
    }
}

TEST(RankPseudoObs, JitterStaysInUnitCubeAndBreaksTies)
{
    const auto u = copent::rank_pseudo_obs(DataMatrix{{1.0, 2.0}, {1.0, 2.0}, {2.0, 3.0}});
    const auto j = copent::jitter_pseudo_obs(u, 7);
    EXPECT_NE(j(0, 0), j(1, 0));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t c = 0; c < 2; ++c) {
            EXPECT_GT(j(i, c), 0.0);
            EXPECT_LE(j(i, c), 1.0);
            EXPECT_NEAR(j(i, c), u(i, c), copent::kDefaultJitter);
        }
    }
    EXPECT_EQ(j, copent::jitter_pseudo_obs(u, 7));
}

TEST(PearsonCorrelation, IdenticalColumnsGiveExactlyOne)
{
    const auto x = normal_columns(3, 100, 1);
    Matrix m(100, 2);
    for (std::size_t i = 0; i < 100; ++i) m(i, 0) = m(i, 1) = x(i, 0);
    const auto r = copent::pearson_correlation(DataMatrix(std::move(m)));
    EXPECT_EQ(r(0, 1), 1.0);
    EXPECT_THROW(copent::log_det_correlation(r), copent::SingularMatrixError);
}

TEST(PearsonCorrelation, IndependentColumnsNearZero)
{
    const auto r = copent::pearson_correlation(normal_columns(4, 10000, 2));
    EXPECT_NEAR(r(0, 1), 0.0, 0.05);
    EXPECT_EQ(r(0, 0), 1.0);
    EXPECT_EQ(r(0, 1), r(1, 0));
}

TEST(PearsonCorrelation, PositiveRescalingLeavesOutputIdentical)
{
    const auto x = normal_columns(5, 500, 3);
    Matrix m = x.values();
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, 1) *= 3.7;
    EXPECT_EQ(copent::pearson_correlation(x), copent::pearson_correlation(DataMatrix(std::move(m))));
}

TEST(PearsonCorrelation, MatchesTwoPassOracle)
{
    const auto x = normal_columns(6, 400, 2);
    EXPECT_NEAR(copent::pearson_correlation(x)(0, 1), oracle::pearson(x.column(0), x.column(1)), 1e-12);
}

TEST(PearsonCorrelation, Preconditions)
{
    EXPECT_THROW(copent::pearson_correlation(DataMatrix{{1.0, 2.0}, {2.0, 1.0}}), copent::InvalidInputError);
    EXPECT_THROW(copent::pearson_correlation(DataMatrix{{1.0, 2.0}, {1.0, 1.0}, {1.0, 3.0}}),
                 copent::DegenerateInputError);
}

TEST(SampleCovariance, DivisorsDifferByFactor)
{
    const auto x = normal_columns(7, 50, 2);
    const auto u = copent::sample_covariance(x, copent::CovarianceScaling::Unbiased);
    const auto ml = copent::sample_covariance(x, copent::CovarianceScaling::MaximumLikelihood);
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) EXPECT_NEAR(ml(a, b), u(a, b) * 49.0 / 50.0, 1e-15);
    }
}

TEST(LogDetCorrelation, ClosedForms)
{
    EXPECT_EQ(copent::log_det_correlation(CorrelationMatrix::identity(4)), 0.0);
    EXPECT_NEAR(copent::log_det_correlation(CorrelationMatrix(Matrix{{1.0, 0.8}, {0.8, 1.0}})), -1.021651, 1e-6);
    EXPECT_THROW(copent::log_det_correlation(CorrelationMatrix(Matrix{{1.0, 1.0}, {1.0, 1.0}})),
                 copent::SingularMatrixError);
}

// Hadamard's inequality: |R| ≤ Π R_ii = 1 for any correlation matrix.
TEST(LogDetCorrelation, NonPositiveOnRandomMatrices)
{
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto x = normal_columns(100 + s, 20, 2 + s % 4);
        const double ld = copent::log_det_correlation(copent::pearson_correlation(x));
        EXPECT_LE(ld, 0.0);
        EXPECT_TRUE(std::isfinite(ld));
    }
}

TEST(Cholesky, ReconstructsMatrix)
{
    const Matrix a{{4.0, 2.0, 0.4}, {2.0, 5.0, 1.0}, {0.4, 1.0, 3.0}};
    const auto l = copent::cholesky_lower(a);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < 3; ++c) s += l(i, c) * l(j, c);
            EXPECT_NEAR(s, a(i, j), 1e-14);
        }
        for (std::size_t j = i + 1; j < 3; ++j) EXPECT_EQ(l(i, j), 0.0);
    }
}

TEST(KnnDistances, OneDimensionalEnumeration)
{
    const auto eps = copent::knn_distances(Matrix{{0.25}, {0.5}, {1.0}}, 1);
    EXPECT_EQ(eps, (std::vector<double>{0.25, 0.25, 0.5}));
}

TEST(KnnDistances, TwoDimensionalMaxNorm)
{
    const auto eps = copent::knn_distances(Matrix{{0.0, 0.0}, {0.1, 0.2}, {0.5, 0.5}}, 1);
    ASSERT_EQ(eps.size(), 3u);
    EXPECT_DOUBLE_EQ(eps[0], 0.2);
    EXPECT_DOUBLE_EQ(eps[1], 0.2);
    // max(|0.5 - 0.1|, |0.5 - 0.2|): the far point's nearest neighbour is (0.1, 0.2).
    EXPECT_DOUBLE_EQ(eps[2], 0.4);
}

TEST(KnnDistances, Preconditions)
{
    EXPECT_THROW(copent::knn_distances(Matrix{{0.0}, {1.0}, {2.0}}, 3), copent::InvalidInputError);
    EXPECT_THROW(copent::knn_distances(Matrix{{0.0}, {1.0}, {2.0}}, 0), copent::InvalidInputError);
    EXPECT_THROW(copent::knn_distances(Matrix{{0.0, 1.0}, {0.0, 1.0}, {2.0, 2.0}}, 1),
                 copent::DuplicatePointsError);
}

TEST(CanonicalOrder, RelabellingGivesTheSameMatrix)
{
    const auto x = normal_columns(8, 60, 4);
    const auto r = copent::pearson_correlation(x);
    const std::vector<std::size_t> relabel{2, 0, 3, 1};
    const auto shuffled = copent::permute(r, relabel);
    EXPECT_EQ(copent::permute(r, copent::canonical_order(r)),
              copent::permute(shuffled, copent::canonical_order(shuffled)));
}
