#include <benchmark/benchmark.h>
#include <latmass/autom.hpp>
#include <latmass/liedata.hpp>

using namespace latmass;

static void BM_AutE8(benchmark::State& state) {
  IntLattice e8 = root_lattice(SimpleType::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(aut_order(e8));
}
BENCHMARK(BM_AutE8);

static void BM_AutD8(benchmark::State& state) {
  IntLattice d8 = root_lattice(SimpleType::D, 8);
  for (auto _ : state) benchmark::DoNotOptimize(aut_order(d8));
}
BENCHMARK(BM_AutD8);

BENCHMARK_MAIN();
