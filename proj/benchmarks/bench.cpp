#include <benchmark/benchmark.h>

#include "qgraph/canonical.hpp"
#include "qgraph/coboundary.hpp"
#include "qgraph/cocycles.hpp"
#include "qgraph/evaluate.hpp"
#include "qgraph/homology.hpp"
#include "qgraph/linalg.hpp"

namespace {

using namespace qgraph;

DecoratedGraph black_cycle(int n) {
    DecoratedGraph g;
    for (int i = 0; i < n; ++i) {
        g.vertices.push_back({i, Color::Black, 1});
        g.edges.push_back({i, (i + 1) % n, 1});
        g.ordering.push_back(i);
    }
    return g;
}

DecoratedGraph black_star(int arity) {
    DecoratedGraph g;
    g.vertices.push_back({0, Color::Black, arity});
    for (int s = 1; s <= arity; ++s) g.in_legs[s] = {0, s};
    g.out_legs[1] = 0;
    g.ordering = {0};
    return g;
}

void canonical_cycle(benchmark::State& state) {
    const DecoratedGraph g = black_cycle(8);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(canonical_cycle);

void canonical_comb(benchmark::State& state) {
    const DecoratedGraph g = b_graph(8, {2, 3, 4, 5, 6, 7, 8}).graph;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(canonical_comb);

void coboundary_splitting(benchmark::State& state) {
    const DecoratedGraph g = black_star(6);
    for (auto _ : state) benchmark::DoNotOptimize(coboundary(g));
}
BENCHMARK(coboundary_splitting);

void sector_enumeration(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sector_basis(Subcomplex::G3, 5, 1, 3));
}
BENCHMARK(sector_enumeration);

void operator_rank(benchmark::State& state) {
    const auto source = sector_basis(Subcomplex::G3, 4, 1, 2);
    const auto target = sector_basis(Subcomplex::G3, 4, 1, 3);
    const RatMatrix m = operator_matrix(
        source, target, [](const DecoratedGraph& g) { return coboundary(g); });
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(operator_rank);

void cycle_evaluation(benchmark::State& state) {
    Cochain c;
    c.add_canonical(c_graph(3, {2, 3}), 1);
    const LieAlgebraData sl3 = sl_algebra(3);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_graph(c, sl3));
}
BENCHMARK(cycle_evaluation);

}  // namespace

BENCHMARK_MAIN();
