// Microbenchmarks for the hot paths of the minimizer search: enumeration,
// canonical coding, domination, characteristic polynomials, floating and
// exact spectral work. Run the binary directly; it is not wired into ctest.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rhomin/canonical.hpp"
#include "rhomin/charpoly.hpp"
#include "rhomin/domination.hpp"
#include "rhomin/enumerate.hpp"
#include "rhomin/families.hpp"
#include "rhomin/graph.hpp"
#include "rhomin/intpoly.hpp"
#include "rhomin/roots.hpp"
#include "rhomin/spectral.hpp"

using namespace rhomin;

namespace {

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({static_cast<int>(rng() % i), i});
    return build_graph(n, e);
}

void BM_FreeTreeStream(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FreeTreeStream s(n);
        Graph t;
        std::uint64_t c = 0;
        while (s.next(t)) ++c;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_FreeTreeStream)->Arg(12)->Arg(14)->Arg(16);

void BM_ConnectedGraphStream(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ConnectedGraphStream s(n);
        Graph g;
        std::uint64_t c = 0;
        while (s.next(g)) ++c;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ConnectedGraphStream)->Arg(6)->Arg(7)->Arg(8);

void BM_CanonicalCode(benchmark::State& state) {
    std::mt19937_64 rng(99);
    std::vector<Graph> pool;
    for (int i = 0; i < 64; ++i) pool.push_back(random_tree(static_cast<int>(state.range(0)), rng));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_code(pool[i++ & 63]));
    }
}
BENCHMARK(BM_CanonicalCode)->Arg(10)->Arg(16)->Arg(20);

void BM_DominationTreeDP(benchmark::State& state) {
    std::mt19937_64 rng(7);
    Graph t = random_tree(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(domination_number_tree(t).gamma);
}
BENCHMARK(BM_DominationTreeDP)->Arg(16)->Arg(64)->Arg(256);

void BM_DominationSubsetSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    Graph c = build_graph(n, e);
    for (auto _ : state) benchmark::DoNotOptimize(domination_number(c).gamma);
}
BENCHMARK(BM_DominationSubsetSearch)->Arg(12)->Arg(18)->Arg(24);

void BM_CharPolyTree(benchmark::State& state) {
    std::mt19937_64 rng(13);
    Graph t = random_tree(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_tree(t).degree());
}
BENCHMARK(BM_CharPolyTree)->Arg(12)->Arg(18);

void BM_CharPolyGeneral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    e.push_back({0, n / 2});
    Graph g = build_graph(n, e);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_general(g).degree());
}
BENCHMARK(BM_CharPolyGeneral)->Arg(8)->Arg(16);

void BM_PowerIteration(benchmark::State& state) {
    Graph p = path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(p, 1e-12).rho);
}
BENCHMARK(BM_PowerIteration)->Arg(50)->Arg(100);

void BM_IsolateLargestRoot(benchmark::State& state) {
    IntPoly p = char_poly_tree(g2(3, 2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(isolate_largest_root(p).lo.get_d());
}
BENCHMARK(BM_IsolateLargestRoot);

void BM_CompareLargestRoots(benchmark::State& state) {
    IntPoly p = char_poly_tree(g2(3, 2, 3));
    IntPoly q = char_poly_tree(g2(2, 4, 2));
    for (auto _ : state) benchmark::DoNotOptimize(compare_largest_roots(p, q));
}
BENCHMARK(BM_CompareLargestRoots);

}  // namespace

BENCHMARK_MAIN();
