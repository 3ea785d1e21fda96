#include "deltoid/envelope.hpp"
#include "deltoid/invariants.hpp"
#include "deltoid/localization.hpp"
#include "deltoid/logconc.hpp"
#include "deltoid/represent.hpp"
#include "deltoid/schubert.hpp"

#include <benchmark/benchmark.h>

using namespace deltoid;

static void BM_EnumerateDeltaMatroids(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_deltamatroids(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateDeltaMatroids)->DenseRange(1, 3);

static void BM_UPolyExplicit(benchmark::State &state) {
  auto d = random_deltamatroid(static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(u_poly_explicit(d));
}
BENCHMARK(BM_UPolyExplicit)->DenseRange(1, 4);

static void BM_UPolyRecursive(benchmark::State &state) {
  auto d = random_deltamatroid(static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(u_poly_recursive(d));
}
BENCHMARK(BM_UPolyRecursive)->DenseRange(1, 4);

static void BM_InterlaceSweep(benchmark::State &state) {
  int m = static_cast<int>(state.range(0));
  auto d = circ_uniform(m - 3, 2 * m);
  for (auto _ : state)
    benchmark::DoNotOptimize(interlace_coefficients(d));
}
BENCHMARK(BM_InterlaceSweep)->DenseRange(3, 6);

static void BM_UCircClosedForm(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(circ_uniform_interlace(7, 20));
}
BENCHMARK(BM_UCircClosedForm);

static void BM_DeltaDecompose(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  auto p = BnPolytope::of(random_deltamatroid(n, 3)).dilate(2) + BnPolytope::cube(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(delta_decompose(p));
}
BENCHMARK(BM_DeltaDecompose)->DenseRange(1, 4);

static void BM_Volume(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  auto d = delta_decompose(BnPolytope::of(random_deltamatroid(n, 3)) + BnPolytope::cube(n));
  for (auto _ : state)
    benchmark::DoNotOptimize(volume(d));
}
BENCHMARK(BM_Volume)->DenseRange(2, 4);

static void BM_LatticeCountFormula(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  auto d = delta_decompose(BnPolytope::cube(n).dilate(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(lattice_count_formula(d, PsiConvention::Multiset));
}
BENCHMARK(BM_LatticeCountFormula)->DenseRange(1, 4);

static void BM_SchubertDecompose(benchmark::State &state) {
  auto p = BnPolytope::signed_permutohedron(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(schubert_decompose(p));
}
BENCHMARK(BM_SchubertDecompose);

static void BM_SchubertCensus(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(coloop_free_schubert_census(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SchubertCensus)->DenseRange(1, 3);

static void BM_AdjacencyDelta(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  Graph g{n, {}};
  for (int i = 1; i < n; ++i)
    g.edges.emplace_back(i, i + 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(adjacency_delta(g));
}
BENCHMARK(BM_AdjacencyDelta)->DenseRange(4, 10, 3);

static void BM_FindEnvelope(benchmark::State &state) {
  auto d = random_deltamatroid(3, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_envelope(d));
}
BENCHMARK(BM_FindEnvelope);

static void BM_ClassOfPolytope(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  auto p = BnPolytope::of(random_deltamatroid(n, 5));
  for (auto _ : state)
    benchmark::DoNotOptimize(class_of_polytope(p));
}
BENCHMARK(BM_ClassOfPolytope)->DenseRange(1, 3);

static void BM_InterlaceIntegral(benchmark::State &state) {
  auto d = random_deltamatroid(static_cast<int>(state.range(0)), 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_interlace_integral(d));
}
BENCHMARK(BM_InterlaceIntegral)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_LorentzianChecks(benchmark::State &state) {
  auto d = from_bases(Matroid::uniform(2, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(lorentzian_checks(d));
}
BENCHMARK(BM_LorentzianChecks)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
