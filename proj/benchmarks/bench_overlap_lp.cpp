// Benchmarks for the overlap programs: vertex-space construction, the
// symmetric and asymmetric maximizations on the single-companion scenario,
// and the asymmetric program on the general-d scenarios whose restricted
// vertex spaces grow combinatorially.
#include <benchmark/benchmark.h>

#include "onticlab/overlap_lp.hpp"
#include "onticlab/scenario.hpp"

namespace {

void bm_vertex_space(benchmark::State& state) {
  const onticlab::Scenario sc = onticlab::thm2_scenario(0.31, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(onticlab::build_restricted_vertex_space(sc, "psi"));
}

void bm_symmetric(benchmark::State& state) {
  const onticlab::Scenario sc = onticlab::thm1_scenario(0.5, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(onticlab::max_symmetric_overlap(sc, "psi", "ket0"));
}

void bm_asymmetric_thm1(benchmark::State& state) {
  const onticlab::Scenario sc = onticlab::thm1_scenario(0.5, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(onticlab::max_asymmetric_overlap_upper(sc, "ket0", "psi"));
}

void bm_asymmetric_thm2(benchmark::State& state) {
  const onticlab::Scenario sc = onticlab::thm2_scenario(0.31, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(onticlab::max_asymmetric_overlap_upper(sc, "ket0", "psi"));
}

}  // namespace

BENCHMARK(bm_vertex_space)->Arg(6)->Arg(7)->Arg(8);
BENCHMARK(bm_symmetric);
BENCHMARK(bm_asymmetric_thm1);
BENCHMARK(bm_asymmetric_thm2)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
