#include <benchmark/benchmark.h>

#include "dissoc/constructions.hpp"
#include "dissoc/spectral.hpp"

using namespace dissoc;

static void BM_SpectralRadius(benchmark::State& state) {
    const Graph g = hat_minimizer_4(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g));
}
BENCHMARK(BM_SpectralRadius)->Arg(8)->Arg(16)->Arg(32);

static void BM_QuotientCharPoly(benchmark::State& state) {
    const Construction h = hat_minimizer_4(static_cast<int>(state.range(0)));
    const VertexSet outer{h.at("u'"), h.at("v'")};
    const VertexSet inner{h.at("u"), h.at("v")};
    const VertexPartition p{outer, inner, h.graph.vertices() - outer - inner};
    for (auto _ : state) {
        const CharPoly poly = char_poly(quotient(h.graph, p));
        benchmark::DoNotOptimize(largest_root(poly));
    }
}
BENCHMARK(BM_QuotientCharPoly)->Arg(8)->Arg(16);
