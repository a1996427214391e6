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

#include "pdeglab/hadamard.hpp"

namespace {

using namespace pdeglab;

void BM_UbdEval(benchmark::State& state) {
  const auto inst = make_ubd_instance(static_cast<std::size_t>(state.range(0)),
                                      static_cast<std::size_t>(state.range(1)));
  const auto inputs = random_inputs(inst, 64, 1);
  for (auto _ : state) {
    for (const auto& a : inputs) benchmark::DoNotOptimize(ubd_eval(inst, a));
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_UbdEval)->Args({2, 2})->Args({3, 3})->Args({4, 3});

void BM_AssemblyEval(benchmark::State& state) {
  const auto inst = make_ubd_instance(2, 2);
  const auto P = assemble_P(inst, build_Q(inst, Rational(1, 3)));
  const auto inputs = structured_inputs(inst);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto form = P.draw(seed++);
    for (const auto& a : inputs) benchmark::DoNotOptimize(form->evaluate_bits(a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_AssemblyEval)->Unit(benchmark::kMillisecond);

}  // namespace
