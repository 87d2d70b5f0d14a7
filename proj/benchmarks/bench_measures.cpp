// Copyright 2026 The unruhcorr Authors
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

#include "unruh/measures.hpp"
#include "unruh/rindler.hpp"
#include "unruh/sweep.hpp"

namespace {

using namespace unruh;

void BM_EigHermitian4(benchmark::State& state) {
  const auto rho = reduced_state(UnruhParameter(0.5), RindlerPair::AI);
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(rho.matrix()));
}
BENCHMARK(BM_EigHermitian4);

void BM_MeasuredConditionalEntropy(benchmark::State& state) {
  const auto rho = reduced_state(UnruhParameter(0.5), RindlerPair::III);
  double theta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(measured_conditional_entropy(rho, {theta, 0.3}));
    theta += 1e-3;
  }
}
BENCHMARK(BM_MeasuredConditionalEntropy);

void BM_EvaluateRecord(benchmark::State& state) {
  const auto pair = static_cast<RindlerPair>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_record(UnruhParameter(0.5), pair));
}
BENCHMARK(BM_EvaluateRecord)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
