// Microbenchmarks for the hot paths: difference-set construction, one
// feasibility solve, the full extension computation (exact and double
// precision), and the grid oracle at a few resolutions.

#include <benchmark/benchmark.h>

#include "eadm/engine.hpp"
#include "eadm/feasibility.hpp"
#include "eadm/oracle.hpp"

#include <vector>

using namespace eadm;

namespace {

Assessment three_outcome_assessment() {
  Option v1{-1, 2, -2};
  Option v2{-2, 2, -1};
  Option v3{0, 3, -11};
  Option v4{0, -7, -1};
  Option v5{2, 5, -9};
  Option v6{0, -2, -1};
  return Assessment({AssessmentPair{OptionSet{v1}, OptionSet{v2, v3, v4}},
                     AssessmentPair{OptionSet{v5, v6}, OptionSet{v1}}});
}

OptionSet three_outcome_query() {
  return OptionSet{Option{1, -3, 1}, Option{1, 1, -2}, Option{0, 0, 0}};
}

}  // namespace

static void BM_DifferenceSets(benchmark::State& state) {
  Assessment assessment = three_outcome_assessment();
  for (auto _ : state) {
    benchmark::DoNotOptimize(difference_sets(assessment));
  }
}
BENCHMARK(BM_DifferenceSets);

static void BM_PrimalSolve(benchmark::State& state) {
  // The first admissible option's system under the example assessment.
  std::vector<Option> u_list{Option{0, -4, 3}, Option{1, -3, 1}};
  std::vector<Option> d_list{Option{1, 0, -1}, Option{-1, -1, 9}, Option{-1, 9, -1},
                             Option{3, 3, -7}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(primal_feasible(3, u_list, d_list));
  }
}
BENCHMARK(BM_PrimalSolve);

static void BM_ExtensionExact(benchmark::State& state) {
  Assessment assessment = three_outcome_assessment();
  OptionSet query = three_outcome_query();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension(query, assessment, {}));
  }
}
BENCHMARK(BM_ExtensionExact);

static void BM_ExtensionApproximate(benchmark::State& state) {
  Assessment assessment = three_outcome_assessment();
  OptionSet query = three_outcome_query();
  EngineOptions options;
  options.approximate = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extension(query, assessment, options));
  }
}
BENCHMARK(BM_ExtensionApproximate);

static void BM_GridOracle(benchmark::State& state) {
  Assessment assessment = three_outcome_assessment();
  OptionSet query = three_outcome_query();
  const unsigned resolution = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampled_extension(query, assessment, {3, resolution}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GridOracle)->Arg(16)->Arg(64)->Arg(200);

BENCHMARK_MAIN();
