#include <benchmark/benchmark.h>

#include "dissoc/extremal.hpp"

using namespace dissoc;

static void BM_ExBruteforce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ex_bruteforce(n, FamilySpec::odd_cocktail(5), false).value);
}
BENCHMARK(BM_ExBruteforce)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_EminSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(emin_search(n, 4).value);
}
BENCHMARK(BM_EminSearch)->Arg(7)->Unit(benchmark::kMillisecond);
