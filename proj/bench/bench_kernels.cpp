#include <benchmark/benchmark.h>

#include <random>

#include "qcodim/kernels.hpp"
#include "qcodim/ph.hpp"

namespace {

using namespace qcodim;

Barcode random_barcode(std::size_t types, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> start(0, 100000), length(1, 5000);
    std::vector<BarEntry> entries;
    for (std::size_t k = 0; k < types; ++k) {
        const int b = start(rng);
        entries.push_back({Bar(b / 100.0, (b + length(rng)) / 100.0), 1});
    }
    return Barcode(IndexSet::dense_real(), std::move(entries));
}

PointCloud random_cloud(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> rows(n);
    for (auto& r : rows) r = {u(rng), u(rng), u(rng)};
    return PointCloud(rows);
}

void BM_QcodimSerial(benchmark::State& state) {
    const auto bc = random_barcode(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::qcodim_serial(bc));
    state.SetComplexityN(state.range(0));
}

void BM_QcodimOmp(benchmark::State& state) {
    const auto bc = random_barcode(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::qcodim_omp(bc));
    state.SetComplexityN(state.range(0));
}

void BM_DistancesSerial(benchmark::State& state) {
    const auto cloud = random_cloud(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::pairwise_distances_serial(cloud));
}

void BM_DistancesOmp(benchmark::State& state) {
    const auto cloud = random_cloud(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::pairwise_distances_omp(cloud));
}

void BM_RipsPersistence(benchmark::State& state) {
    const auto cloud = random_cloud(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(persistence(vr_filtration(cloud, 2), 1));
}

}  // namespace

BENCHMARK(BM_QcodimSerial)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_QcodimOmp)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_DistancesSerial)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_DistancesOmp)->RangeMultiplier(4)->Range(256, 4096);
BENCHMARK(BM_RipsPersistence)->DenseRange(20, 60, 20);

BENCHMARK_MAIN();
