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

#include "pdeglab/or_construction.hpp"

namespace {

using namespace pdeglab;

void BM_OrDraw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pp = or_prob_poly(n, Rational(1, 10));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pp.draw(seed++));
}
BENCHMARK(BM_OrDraw)->RangeMultiplier(4)->Range(8, 512);

void BM_OrDrawAndScan(benchmark::State& state) {
  const auto pp = or_prob_poly(8, Rational(1, 10));
  const auto inputs = all_inputs(8);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto form = pp.draw(seed++);
    for (const auto& a : inputs) benchmark::DoNotOptimize(form->evaluate_bits(a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_OrDrawAndScan);

void BM_FamilyScan(benchmark::State& state) {
  const auto g = xor_function(8);
  const auto inputs = all_inputs(8);
  ScanConfig cfg;
  cfg.trials = 1000;
  cfg.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(or_family_scan(g, 12, inputs, cfg));
}
BENCHMARK(BM_FamilyScan)->Unit(benchmark::kMillisecond);

}  // namespace
