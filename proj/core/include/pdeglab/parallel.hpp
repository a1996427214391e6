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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pdeglab {

/// Worker count: `requested` if nonzero, else PDEGLAB_JOBS, else 1.
unsigned resolve_jobs(unsigned requested);

/// Runs `body(seed, counts)` for every seed in [seed0, seed0 + trials) and
/// returns the element-wise sum of `counters` counters. Seeds are split into
/// contiguous ranges across workers; the result does not depend on `jobs`.
std::vector<std::uint64_t> parallel_counts(
    std::uint64_t seed0, std::uint64_t trials, std::size_t counters, unsigned jobs,
    const std::function<void(std::uint64_t seed, std::span<std::uint64_t> counts)>& body);

}  // namespace pdeglab
