// Copyright 2026 The pdeglab Authors.
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

#include "pdeglab/boolean_function.hpp"
#include "pdeglab/decision_tree.hpp"
#include "pdeglab/polynomial.hpp"

namespace {

using namespace pdeglab;

void BM_MobiusMajority(benchmark::State& state) {
  const auto f = majority_function(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius_interpolate(f));
}
BENCHMARK(BM_MobiusMajority)->DenseRange(9, 15, 2);

void BM_Sensitivity(benchmark::State& state) {
  const auto f = addressing_function(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sensitivity(f));
}
BENCHMARK(BM_Sensitivity)->Arg(2)->Arg(3)->Arg(4);

void BM_DecisionTreeDepth(benchmark::State& state) {
  const auto f = addressing_function(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decision_tree_depth(f));
}
BENCHMARK(BM_DecisionTreeDepth)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
