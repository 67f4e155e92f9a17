// OpenMP kernels against their serial references. Arguments are n (and the
// thread count for the kd-tree); run with --benchmark_filter to pick one.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "copent/kernels.hpp"
#include "copent/rng.hpp"

namespace {

copent::Matrix uniform_points(std::size_t n, std::size_t d)
{
    copent::Rng rng(17);
    copent::Matrix m(n, d);
    for (double& v : m.flat()) v = rng.uniform();
    return m;
}

void BM_KnnBruteForce(benchmark::State& state)
{
    const auto pts = uniform_points(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(copent::kernels::reference::knn_brute_force(pts, 3));
    state.SetComplexityN(state.range(0));
}

void BM_KnnKdTree(benchmark::State& state)
{
    const auto pts = uniform_points(static_cast<std::size_t>(state.range(0)), 2);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(copent::kernels::knn_kdtree(pts, 3));
    omp_set_num_threads(saved);
    state.SetComplexityN(state.range(0));
}

void BM_GaussianKernelReference(benchmark::State& state)
{
    const auto y = uniform_points(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(copent::kernels::reference::gaussian_kernel_sum(y, 0.5));
}

void BM_GaussianKernelOmp(benchmark::State& state)
{
    const auto y = uniform_points(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(copent::kernels::gaussian_kernel_sum(y, 0.5));
}

void BM_EuclideanSumReference(benchmark::State& state)
{
    const auto y = uniform_points(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(copent::kernels::reference::euclidean_distance_sum(y));
}

void BM_EuclideanSumOmp(benchmark::State& state)
{
    const auto y = uniform_points(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(copent::kernels::euclidean_distance_sum(y));
}

}  // namespace

BENCHMARK(BM_KnnBruteForce)->RangeMultiplier(4)->Range(200, 3200)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_KnnKdTree)
    ->ArgsProduct({{200, 800, 3200, 12800}, {1, 4}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussianKernelReference)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussianKernelOmp)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EuclideanSumReference)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EuclideanSumOmp)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
