#include <benchmark/benchmark.h>

#include <vector>

#include "dcrystal/burge.hpp"
#include "dcrystal/kr.hpp"
#include "dcrystal/lusztig.hpp"
#include "dcrystal/triangle.hpp"
#include "dcrystal/verify.hpp"

using namespace dcrystal;

namespace {

std::vector<LusztigDatum> sample(int n, Support support, int bound, int count) {
    std::vector<LusztigDatum> out;
    for (int k = 0; k < count; ++k) out.push_back(random_datum(n, support, bound, 17, k));
    return out;
}

void BM_KappaSE(benchmark::State& state) {
    auto data = sample(static_cast<int>(state.range(0)), Support::upper, 3, 64);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(kappa_se(data[k++ % data.size()]));
}
BENCHMARK(BM_KappaSE)->DenseRange(4, 8, 2);

void BM_KappaNW(benchmark::State& state) {
    auto data = sample(static_cast<int>(state.range(0)), Support::upper, 3, 64);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(kappa_nw(data[k++ % data.size()]));
}
BENCHMARK(BM_KappaNW)->DenseRange(4, 8, 2);

void BM_SignatureF(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto data = sample(n, Support::full, 3, 64);
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& c = data[k++ % data.size()];
        for (int i = 1; i <= n; ++i) benchmark::DoNotOptimize(f_full(c, i));
    }
}
BENCHMARK(BM_SignatureF)->DenseRange(4, 10, 2);

void BM_TransitionF(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    TransitionOracle oracle(n);
    auto data = sample(n, Support::full, 3, 64);
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& c = data[k++ % data.size()];
        for (int i = 1; i <= n; ++i) benchmark::DoNotOptimize(oracle.f(c, i));
    }
}
BENCHMARK(BM_TransitionF)->Arg(4)->Arg(5);

void BM_DoublePathMax(benchmark::State& state) {
    auto data = sample(static_cast<int>(state.range(0)), Support::upper, 5, 64);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(epsilon_star_n(data[k++ % data.size()]));
}
BENCHMARK(BM_DoublePathMax)->DenseRange(4, 10, 2);

void BM_ShapeFromPaths(benchmark::State& state) {
    auto data = sample(static_cast<int>(state.range(0)), Support::upper, 3, 16);
    std::size_t k = 0;
    for (auto _ : state) benchmark::DoNotOptimize(shape_from_paths(data[k++ % data.size()]));
}
BENCHMARK(BM_ShapeFromPaths)->Arg(4)->Arg(5)->Arg(6);

void BM_KRGraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0)), s = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(lusztig_crystal(n, s));
}
BENCHMARK(BM_KRGraph)->Args({4, 1})->Args({4, 2})->Args({5, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
