// Benchmarks for the dense linear-algebra hot spots: the Jacobi eigensolver
// across sizes, PSD projection, and the stabilizer-unitary builder.
#include <benchmark/benchmark.h>

#include <random>

#include "onticlab/constructions.hpp"
#include "onticlab/hilbert.hpp"

namespace {

onticlab::Operator random_hermitian(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> g(0.0, 1.0);
  onticlab::Operator m(d);
  for (int i = 0; i < d; ++i) {
    m.at(i, i) = onticlab::cplx(g(rng), 0.0);
    for (int j = i + 1; j < d; ++j) {
      const onticlab::cplx z(g(rng), g(rng));
      m.at(i, j) = z;
      m.at(j, i) = std::conj(z);
    }
  }
  return m;
}

void bm_hermitian_eig(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const onticlab::Operator h = random_hermitian(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(onticlab::hermitian_eig(h));
}

void bm_psd_project(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const onticlab::Operator h = random_hermitian(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(onticlab::psd_project(h));
}

void bm_stabilizer_unitary(benchmark::State& state) {
  const onticlab::Thm1Family f = onticlab::build_thm1(0.5, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        onticlab::build_stabilizer_unitary(f.psi, f.basis.vectors[0], f.phi));
}

}  // namespace

BENCHMARK(bm_hermitian_eig)->Arg(4)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_psd_project)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_stabilizer_unitary)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
