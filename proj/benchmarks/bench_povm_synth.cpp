// Benchmarks for POVM synthesis: the alternating-projection loop on the
// single-companion triple across alphas, and the two-state discriminator.
#include <benchmark/benchmark.h>

#include <vector>

#include "onticlab/constructions.hpp"
#include "onticlab/povm_synth.hpp"

namespace {

std::vector<onticlab::StateVector> triple(double alpha) {
  const onticlab::Thm1Family f = onticlab::build_thm1(alpha, 4);
  return {f.basis.vectors[0], f.phi, f.psi};
}

void bm_synthesize(benchmark::State& state) {
  const std::vector<onticlab::StateVector> states = triple(state.range(0) / 100.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(onticlab::synthesize_antidistinguishing(states));
}

void bm_verify(benchmark::State& state) {
  const std::vector<onticlab::StateVector> states = triple(0.5);
  const onticlab::SynthesisResult r = onticlab::synthesize_antidistinguishing(states);
  for (auto _ : state)
    benchmark::DoNotOptimize(onticlab::verify_antidistinguishing(r.povm, states));
}

void bm_helstrom(benchmark::State& state) {
  const std::vector<onticlab::StateVector> states = triple(0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(onticlab::helstrom_measurement(states[2], states[0]));
}

}  // namespace

// Arg is alpha in hundredths; 50 is the canonical mid-domain family.
BENCHMARK(bm_synthesize)->Arg(20)->Arg(50)->Arg(65);
BENCHMARK(bm_verify);
BENCHMARK(bm_helstrom);
