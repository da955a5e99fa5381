#include <benchmark/benchmark.h>

#include "segre/bilinear.hpp"
#include "segre/fields.hpp"
#include "segre/graded.hpp"
#include "segre/kostant.hpp"

namespace {

segre::Matrix random_rational_matrix(std::size_t rows, std::size_t cols,
                                     unsigned long seed) {
  segre::Matrix m(rows, cols);
  unsigned long state = seed;
  for (auto& e : m.entries()) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    e = segre::Rational(static_cast<long>(state >> 33) % 9 - 4);
  }
  return m;
}

void BM_NullSpace(benchmark::State& state) {
  const auto m = random_rational_matrix(state.range(0), state.range(0) + 8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(segre::null_space(m));
}
BENCHMARK(BM_NullSpace)->Arg(16)->Arg(32)->Arg(64);

void BM_BuildAlgebra(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(segre::GradedAlgebra(state.range(0)));
}
BENCHMARK(BM_BuildAlgebra)->Arg(2)->Arg(3)->Arg(4);

void BM_PQParts(benchmark::State& state) {
  const std::size_t n = state.range(0);
  segre::BilinearMap phi = segre::BilinearMap::vector(n);
  unsigned long s = 17;
  for (std::size_t k = 0; k < phi.values().size(); ++k) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    phi.values().flat(k) = segre::Rational(static_cast<long>(s >> 33) % 9 - 4);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(segre::pq_parts(phi, segre::j_plus()));
}
BENCHMARK(BM_PQParts)->Arg(2)->Arg(3);

void BM_HarmonicSpace(benchmark::State& state) {
  const segre::GradedAlgebra alg(state.range(0));
  for (auto _ : state) {
    const segre::KostantComplex kc(alg);
    benchmark::DoNotOptimize(kc.harmonic2(-1));
  }
}
BENCHMARK(BM_HarmonicSpace)->Arg(2)->Arg(3);

void BM_NijenhuisSweep(benchmark::State& state) {
  const segre::StructureField f =
      segre::StructureField::make("tangent-shear", 2, {});
  segre::GridSpec grid;
  grid.min.assign(4, -1.0);
  grid.max.assign(4, 1.0);
  grid.steps = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(segre::sweep(f, grid, 1e-3));
}
BENCHMARK(BM_NijenhuisSweep)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
