// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "chronos/measurement.hpp"
#include "chronos/relational_clock.hpp"

namespace {

using namespace chronos;

void BM_ClosureThreeSigmas(benchmark::State& state) {
  auto model = su2_level2();
  auto basis = standard_basis(model, 3, AnyonLabel::sigma);
  auto gens = basis_generators(model, basis);
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_closure(gens).order());
  }
}
BENCHMARK(BM_ClosureThreeSigmas);

void BM_ClosureSixSigmas(benchmark::State& state) {
  auto model = su2_level2();
  auto basis = standard_basis(model, 6, AnyonLabel::vac);
  auto gens = basis_generators(model, basis);
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_closure(gens).order());
  }
}
BENCHMARK(BM_ClosureSixSigmas)->Unit(benchmark::kMillisecond);

void BM_BraidEvaluate(benchmark::State& state) {
  auto model = su2_level2();
  auto basis = standard_basis(model, 6, AnyonLabel::vac);
  std::string text;
  for (int i = 0; i < 64; ++i) {
    text += (i % 2 == 0) ? "s2 " : "S4 ";
  }
  auto word = BraidWord::parse(6, text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_braid(word, model, basis));
  }
}
BENCHMARK(BM_BraidEvaluate);

void BM_StabilizerStates(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilizer_states(n).size());
  }
}
BENCHMARK(BM_StabilizerStates)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CliffordCatalog(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_clifford_povms(m).n_distinct());
  }
}
BENCHMARK(BM_CliffordCatalog)->Arg(0)->Arg(1)->Arg(2)->Unit(
    benchmark::kMillisecond);

void BM_RunSchedule(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto schedule = ClockSchedule::equatorial(n);
  for (auto _ : state) {
    auto report =
        run_schedule(GlobalState::prepare_bell_singlet(), schedule);
    benchmark::DoNotOptimize(report.probability_sum);
  }
}
BENCHMARK(BM_RunSchedule)->Arg(4)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
