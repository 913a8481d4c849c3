#include <benchmark/benchmark.h>

#include "foldenum/counting.hpp"
#include "foldenum/oracle.hpp"
#include "foldenum/partition.hpp"

namespace foldenum {
namespace {

void BM_EnumeratePostOperative(benchmark::State& state)
{
    const FoldSizes sizes = fold_sizes(90, 5);
    const ClassDistribution classes{2, 24, 64};
    std::int64_t produced = 0;
    for (auto _ : state) {
        PartitionEnumerator gen(sizes, classes);
        while (gen.next()) {
            benchmark::DoNotOptimize(gen.current().matrix().cells().data());
            ++produced;
        }
    }
    state.SetItemsProcessed(produced);
}
BENCHMARK(BM_EnumeratePostOperative);

// Three classes over 100 records, the shape used for fold-count sweeps.
void BM_EnumerateByFoldCount(benchmark::State& state)
{
    const ClassDistribution classes{20, 54, 26};
    const FoldSizes sizes = fold_sizes(classes.total(), state.range(0));
    std::int64_t produced = 0;
    for (auto _ : state) {
        PartitionEnumerator gen(sizes, classes);
        while (gen.next())
            ++produced;
    }
    state.SetItemsProcessed(produced);
}
BENCHMARK(BM_EnumerateByFoldCount)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CountThreads(benchmark::State& state)
{
    const ClassDistribution classes{20, 54, 26};
    const FoldSizes sizes = fold_sizes(classes.total(), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_configurations(sizes, classes, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CountThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_BinaryRecurrence(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(count_binary_equal_folds(state.range(0), 10, state.range(0) / 5));
}
BENCHMARK(BM_BinaryRecurrence)->Arg(50)->Arg(200);

void BM_OracleSmallInstance(benchmark::State& state)
{
    const FoldSizes sizes{4, 4, 4};
    const ClassDistribution classes{3, 4, 5};
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::oracle_enumerate(sizes, classes).size());
}
BENCHMARK(BM_OracleSmallInstance);

} // namespace
} // namespace foldenum
BENCHMARK_MAIN();
