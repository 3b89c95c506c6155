#include <benchmark/benchmark.h>

#include "specht/census.hpp"
#include "specht/sampler.hpp"

using namespace specht;

namespace {

// Rank of a fixed draw of dim-1 hyperplanes; the inner loop of both census and sampler.
void BM_RankOfDraw(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Arrangement arr = Arrangement::build(n, 2);
    const int count = static_cast<int>(arr.dimension()) - 1;
    std::uint64_t t = 0;
    for (auto _ : state) {
        const auto draw = draw_hyperplanes(1, t++, static_cast<int>(arr.size()), count);
        benchmark::DoNotOptimize(arr.rank(draw));
    }
}
BENCHMARK(BM_RankOfDraw)->Arg(5)->Arg(7)->Arg(9);

void BM_ClosureOfLine(benchmark::State& state)
{
    const Arrangement arr = Arrangement::build(6, 2);
    const auto lines = enumerate_lines(arr);
    std::size_t i = 0;
    for (auto _ : state) {
        // a line minus one hyperplane still spans it
        std::vector<int> key = lines[i++ % lines.size()].key;
        key.pop_back();
        benchmark::DoNotOptimize(arr.closure(key));
    }
}
BENCHMARK(BM_ClosureOfLine);

void BM_LineCensus(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(line_census(n, 2));
}
BENCHMARK(BM_LineCensus)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SampleTrials(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Arrangement arr = Arrangement::build(n, 2);
    const std::uint64_t trials = 10'000;
    for (auto _ : state) benchmark::DoNotOptimize(sample_lines(SampleConfig{n, 2, trials, 7, 1}, arr));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trials));
}
BENCHMARK(BM_SampleTrials)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_KlBoundClosedForm(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(kl_bound_report(static_cast<int>(state.range(0)), 2, false));
}
BENCHMARK(BM_KlBoundClosedForm)->Arg(30)->Arg(200);

} // namespace

// libbenchmark_main in this toolchain ships LTO bytecode from another compiler version.
BENCHMARK_MAIN();
