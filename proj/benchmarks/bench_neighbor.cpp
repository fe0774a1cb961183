#include <benchmark/benchmark.h>
#include <latmass/liedata.hpp>
#include <latmass/neighbor.hpp>

using namespace latmass;

static void BM_NeighborsE8p2(benchmark::State& state) {
  IntLattice e8 = root_lattice(SimpleType::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(kneser_neighbors(e8, 2));
}
BENCHMARK(BM_NeighborsE8p2);

BENCHMARK_MAIN();
