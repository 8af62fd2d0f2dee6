#include <benchmark/benchmark.h>

#include "reduxwords/complexity.hpp"
#include "reduxwords/kernel.hpp"
#include "reduxwords/theorems.hpp"

using namespace reduxwords;

namespace {

std::span<const Symbol> prefix_of(const SequenceHandle& h, std::size_t length, PrefixData& keep) {
    keep = h.materialize(length);
    return {keep->data(), length};
}

void BM_ReducedFactorFast(benchmark::State& state) {
    const auto n_max = static_cast<std::size_t>(state.range(0));
    PrefixData keep;
    const auto x = prefix_of(thue_morse(), 32 * n_max, keep);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_counts(x, 2, ComplexityKind::reduced_factor, n_max));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ReducedFactorFast)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_ReducedFactorGeneral(benchmark::State& state) {
    const auto n_max = static_cast<std::size_t>(state.range(0));
    PrefixData keep;
    const auto x = prefix_of(thue_morse(), 32 * n_max, keep);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            scan_counts(x, 2, ComplexityKind::reduced_factor, n_max, KeyPath::general));
    }
}
BENCHMARK(BM_ReducedFactorGeneral)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_FactorSuffixAutomaton(benchmark::State& state) {
    const auto n_max = static_cast<std::size_t>(state.range(0));
    PrefixData keep;
    const auto x = prefix_of(paperfolding(), 32 * n_max, keep);
    for (auto _ : state) benchmark::DoNotOptimize(distinct_factor_counts(x, 2, n_max));
}
BENCHMARK(BM_FactorSuffixAutomaton)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_AbelianSliding(benchmark::State& state) {
    const auto n_max = static_cast<std::size_t>(state.range(0));
    PrefixData keep;
    const auto x = prefix_of(paperfolding(), 32 * n_max, keep);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_counts(x, 2, ComplexityKind::abelian, n_max));
    }
}
BENCHMARK(BM_AbelianSliding)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_Extremes(benchmark::State& state) {
    const auto n_max = static_cast<std::size_t>(state.range(0));
    PrefixData keep;
    const auto x = prefix_of(thue_morse(), 32 * n_max, keep);
    for (auto _ : state) benchmark::DoNotOptimize(scan_extremes(x, n_max));
}
BENCHMARK(BM_Extremes)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_KernelRank(benchmark::State& state) {
    const auto depth = static_cast<unsigned>(state.range(0));
    std::vector<std::int64_t> v((std::size_t{1} << depth) * 64);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::int64_t>(rho_red_t_recursive(i + 1));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_rank(v, 2, depth, 64));
}
BENCHMARK(BM_KernelRank)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
