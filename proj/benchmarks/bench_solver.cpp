#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "erange/analysis.hpp"
#include "erange/analytic_squarewell.hpp"
#include "erange/radial_solver.hpp"

using namespace erange;

namespace {

void BM_SolvePhaseSquareWell(benchmark::State& state) {
  const PotentialSpec well = SquareWell{1.0, 4.4};
  SolverConfig cfg;
  cfg.step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_phase(well, std::sqrt(0.3), cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SolvePhaseSquareWell)->Arg(1000)->Arg(10000);

void BM_SolvePhaseGaussian(benchmark::State& state) {
  const PotentialSpec well = GaussianWell{3.0, 1.0};
  SolverConfig cfg;
  cfg.step = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(solve_phase(well, std::sqrt(0.3), cfg));
}
BENCHMARK(BM_SolvePhaseGaussian);

void BM_ExactPhase(benchmark::State& state) {
  const SquareWell well{1.0, 4.4};
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_phase(well, k));
    k = k < 0.7 ? k + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_ExactPhase);

void BM_IntegralIdentity(benchmark::State& state) {
  const PotentialSpec well = state.range(0) ? PotentialSpec{GaussianWell{3.0, 1.0}}
                                            : PotentialSpec{SquareWell{1.0, 4.4}};
  for (auto _ : state) benchmark::DoNotOptimize(integral_identity(well, std::sqrt(0.3)));
}
BENCHMARK(BM_IntegralIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FitEffectiveRange(benchmark::State& state) {
  const SquareWell well{1.0, 1.9};
  std::vector<PhaseRecord> recs;
  for (double kk : kk_grid({0.0, 0.05}, 100)) recs.push_back(exact_phase(well, std::sqrt(kk)));
  for (auto _ : state)
    benchmark::DoNotOptimize(fit_effective_range(recs, ExpansionKind::ImprovedLargeA, {0.0, 0.05}));
}
BENCHMARK(BM_FitEffectiveRange);

void BM_CompareExpansions(benchmark::State& state) {
  const ExpansionKind kinds[] = {ExpansionKind::ReciprocalSmallA, ExpansionKind::ImprovedSmallA};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        compare_expansions({1.0, 4.4}, kinds, ParamsPolicy::use_range_R, {0.0, 0.5}, 100));
}
BENCHMARK(BM_CompareExpansions);

}  // namespace

BENCHMARK_MAIN();
