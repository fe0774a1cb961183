#include <benchmark/benchmark.h>
#include <latmass/liedata.hpp>
#include <latmass/shortvec.hpp>

using namespace latmass;

static void BM_E8Roots(benchmark::State& state) {
  IntLattice e8 = root_lattice(SimpleType::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(vectors_of_norm(e8, 2));
}
BENCHMARK(BM_E8Roots);

static void BM_Rank16Norm4(benchmark::State& state) {
  IntLattice l = direct_sum(rescale(root_lattice(SimpleType::E, 8), 2),
                            root_lattice(SimpleType::D, 8));
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(l, 4));
}
BENCHMARK(BM_Rank16Norm4);

BENCHMARK_MAIN();
