#include <bulam/borsuk.hpp>
#include <bulam/surgery.hpp>

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

using namespace bulam;

static void BM_SmithRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> dist(-100, 100);
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(b));
}
BENCHMARK(BM_SmithRandom)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

static void BM_LensChain(benchmark::State& state) {
    const long p = state.range(0);
    const IntMatrix b = linking_matrix(lens_presentation(p, p - 1));
    for (auto _ : state) benchmark::DoNotOptimize(classify_all(b));
}
BENCHMARK(BM_LensChain)->Arg(16)->Arg(64)->Arg(200);

static void BM_LensSweep(benchmark::State& state) {
    const long max_p = state.range(0);
    for (auto _ : state) {
        std::size_t classes = 0;
        for (long p = 2; p <= max_p; ++p)
            for (long q = 1; q < p; ++q)
                if (std::gcd(p, q) == 1) classes += classify_all(linking_matrix(lens_presentation(p, q))).reports.size();
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_LensSweep)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ClassifyAllDiagonal(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<long> entries(n);
    for (std::size_t i = 0; i < n; ++i) entries[i] = 2 * static_cast<long>(i % 3);
    IntVector d(entries.begin(), entries.end());
    const IntMatrix b = IntMatrix::diagonal(d);
    for (auto _ : state) benchmark::DoNotOptimize(classify_all(b));
}
BENCHMARK(BM_ClassifyAllDiagonal)->Arg(4)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
