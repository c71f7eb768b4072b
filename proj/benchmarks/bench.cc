// Copyright 2026 The Coherent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "coherent/catalog.h"
#include "coherent/ce.h"
#include "coherent/linesum.h"
#include "coherent/maxent.h"
#include "coherent/mechanism.h"

namespace coherent {
namespace {

void BM_SolveCeLp(benchmark::State& state) {
  const Game pennies = catalog::MatchingPennies();
  const HPolytope poly = ce_polytope(pennies);
  std::vector<Rat> objective{Rat(1), Rat(0), Rat(0), Rat(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(poly, objective, LpSense::kMax));
  }
}
BENCHMARK(BM_SolveCeLp);

void BM_EnumerateChickenVertices(benchmark::State& state) {
  const HPolytope poly = ce_polytope(catalog::ChickenGame());
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_vertices(poly));
  }
}
BENCHMARK(BM_EnumerateChickenVertices);

void BM_MaxentDenseRow(benchmark::State& state) {
  const MomentConstraints mc =
      build_constraints(catalog::DirectDisclosure());
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_entropy(mc));
  }
}
BENCHMARK(BM_MaxentDenseRow);

void BM_MaxentMarginals(benchmark::State& state) {
  const MomentConstraints mc =
      build_constraints(catalog::CoordinationDisclosure());
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_entropy(mc));
  }
}
BENCHMARK(BM_MaxentMarginals);

void BM_BuildChickenMechanism(benchmark::State& state) {
  const Game chicken = catalog::ChickenGame();
  const RationalCe ce =
      exact_rational_ce(chicken, catalog::ChickenOptimalCe());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_mechanism(chicken, ce, catalog::ChickenTarget()));
  }
}
BENCHMARK(BM_BuildChickenMechanism);

void BM_LineSumArray(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(line_sum_array(4, 6, 3));
  }
}
BENCHMARK(BM_LineSumArray);

}  // namespace
}  // namespace coherent

BENCHMARK_MAIN();
