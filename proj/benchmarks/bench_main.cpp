#include <benchmark/benchmark.h>

#include "orbikt/character.hpp"
#include "orbikt/crossed.hpp"
#include "orbikt/fixtures.hpp"
#include "orbikt/homology.hpp"
#include "orbikt/ktheory.hpp"

using namespace orbikt;

namespace {

void BM_CharacterTableDihedral(benchmark::State& state) {
  auto g = dihedral_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g).size());
}
BENCHMARK(BM_CharacterTableDihedral)->Arg(4)->Arg(12)->Arg(30)->Arg(60);

void BM_CharacterTableCyclic(benchmark::State& state) {
  auto g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g).size());
}
BENCHMARK(BM_CharacterTableCyclic)->Arg(8)->Arg(24)->Arg(60);

void BM_TorusHomology(benchmark::State& state) {
  auto x = torus_complex();
  for (int i = 0; i < state.range(0); ++i) x = barycentric_subdivide(x);
  for (auto _ : state) benchmark::DoNotOptimize(homology_integral(x).betti.size());
  state.counters["simplices"] = static_cast<double>(x.count(0) + x.count(1) + x.count(2));
}
BENCHMARK(BM_TorusHomology)->DenseRange(0, 2);

void BM_SmithNormalFormRP2(benchmark::State& state) {
  auto f = make_fixture("trivial-on(rp2)");
  auto x = f.space.complex();
  for (int i = 0; i < state.range(0); ++i) x = barycentric_subdivide(x);
  const ChainComplex cc = chain_complex(x);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(cc.boundary[2]).torsion.size());
}
BENCHMARK(BM_SmithNormalFormRP2)->DenseRange(0, 2);

void BM_BCDecomposition(benchmark::State& state, const char* fixture) {
  auto f = make_fixture(fixture);
  for (auto _ : state) benchmark::DoNotOptimize(bc_decomposition(f.space).totals.even);
}
BENCHMARK_CAPTURE(BM_BCDecomposition, d4_torus, "d4-torus");
BENCHMARK_CAPTURE(BM_BCDecomposition, z4_torus, "z4-torus");

void BM_AggregatedPrim(benchmark::State& state) {
  auto f = make_fixture("d4-torus");
  for (auto _ : state) benchmark::DoNotOptimize(aggregated_specialization(f.space).size());
}
BENCHMARK(BM_AggregatedPrim);

}  // namespace
BENCHMARK_MAIN();
