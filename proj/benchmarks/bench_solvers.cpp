#include <benchmark/benchmark.h>

#include <random>

#include "dissoc/canonical.hpp"
#include "dissoc/constructions.hpp"
#include "dissoc/enumerate.hpp"
#include "dissoc/solvers.hpp"

using namespace dissoc;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace

static void BM_DissociationNumber(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(dissociation_number(g).value);
}
BENCHMARK(BM_DissociationNumber)->Arg(12)->Arg(20)->Arg(30);

static void BM_CanonicalForm(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12);

static void BM_ContainsOddCocktail(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.6, 3);
    const std::vector<int> sizes = odd_cocktail_sizes(2);
    for (auto _ : state) benchmark::DoNotOptimize(contains_complete_multipartite(g, sizes));
}
BENCHMARK(BM_ContainsOddCocktail)->Arg(9)->Arg(16);

static void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n, false).size());
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
