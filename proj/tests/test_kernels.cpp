#include <cmath>
#include <vector>

#include <gtest/gtest.h>
#include <omp.h>

#include "copent/kernels.hpp"
#include "copent/rng.hpp"

namespace kernels = copent::kernels;
using copent::Matrix;

namespace {

Matrix random_points(std::uint64_t seed, std::size_t n, std::size_t d)
{
    copent::Rng rng(seed);
    Matrix m(n, d);
    for (double& v : m.flat()) v = rng.uniform();
    return m;
}

// Restores the OpenMP thread count when a test changes it.
class ThreadCount {
public:
    explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
    ~ThreadCount() { omp_set_num_threads(saved_); }

private:
    int saved_;
};

}  // namespace

TEST(MaxNorm, LargestCoordinateDifference)
{
    const std::vector<double> a{0.0, 1.0, -2.0};
    const std::vector<double> b{0.5, -1.5, -2.0};
    EXPECT_EQ(kernels::max_norm_distance(a, b), 2.5);
}

TEST(KdTree, EqualsBruteForceOn500Points)
{
    for (std::size_t d = 1; d <= 5; ++d) {
        const auto pts = random_points(d, 500, d);
        for (std::size_t k : {1u, 3u, 7u}) {
            const auto fast = kernels::knn_kdtree(pts, k);
            const auto slow = kernels::reference::knn_brute_force(pts, k);
            EXPECT_EQ(fast.kth, slow.kth) << "d=" << d << " k=" << k;
            EXPECT_EQ(fast.nearest, slow.nearest) << "d=" << d << " k=" << k;
        }
    }
}

TEST(KdTree, HandlesTiesInDistance)
{
    // Lattice points: many neighbours at exactly the same max-norm distance.
    Matrix grid(100, 2);
    for (std::size_t i = 0; i < 100; ++i) {
        grid(i, 0) = static_cast<double>(i % 10);
        grid(i, 1) = static_cast<double>(i / 10);
    }
    for (std::size_t k : {1u, 4u, 8u, 9u}) {
        EXPECT_EQ(kernels::knn_kdtree(grid, k).kth, kernels::reference::knn_brute_force(grid, k).kth) << k;
    }
}

TEST(KdTree, IndependentOfThreadCount)
{
    const auto pts = random_points(11, 2000, 3);
    std::vector<double> single;
    {
        ThreadCount guard(1);
        single = kernels::knn_kdtree(pts, 3).kth;
    }
    for (int threads : {2, 3, 8}) {
        ThreadCount guard(threads);
        EXPECT_EQ(kernels::knn_kdtree(pts, 3).kth, single) << threads;
    }
}

TEST(PairwiseSums, ParallelEqualsReferenceBitwise)
{
    const auto y = random_points(12, 300, 3);
    for (int threads : {1, 2, 5}) {
        ThreadCount guard(threads);
        EXPECT_EQ(kernels::gaussian_kernel_sum(y, 0.7), kernels::reference::gaussian_kernel_sum(y, 0.7));
        EXPECT_EQ(kernels::euclidean_distance_sum(y), kernels::reference::euclidean_distance_sum(y));
        EXPECT_EQ(kernels::cubed_inner_product_sum(y), kernels::reference::cubed_inner_product_sum(y));
    }
}

TEST(PairwiseSums, SmallClosedForms)
{
    const Matrix y{{0.0, 0.0}, {3.0, 4.0}};
    EXPECT_DOUBLE_EQ(kernels::euclidean_distance_sum(y), 10.0);
    EXPECT_DOUBLE_EQ(kernels::gaussian_kernel_sum(y, 0.01), 2.0 + 2.0 * std::exp(-0.25));
    EXPECT_DOUBLE_EQ(kernels::cubed_inner_product_sum(y), 25.0 * 25.0 * 25.0);
}
