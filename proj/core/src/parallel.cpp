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

#include "pdeglab/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "pdeglab/error.hpp"

namespace pdeglab {

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PDEGLAB_JOBS"); env != nullptr && *env != '\0') {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("PDEGLAB_JOBS must be an integer in [1, 1024], got '") +
                            env + "'");
  }
  return 1;
}

std::vector<std::uint64_t> parallel_counts(
    std::uint64_t seed0, std::uint64_t trials, std::size_t counters, unsigned jobs,
    const std::function<void(std::uint64_t seed, std::span<std::uint64_t> counts)>& body) {
  jobs = resolve_jobs(jobs);
  if (trials < jobs) jobs = static_cast<unsigned>(trials == 0 ? 1 : trials);

  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(counters, 0));
  std::vector<std::exception_ptr> errors(jobs);
  const auto run = [&](unsigned w) {
    const std::uint64_t begin = trials * w / jobs;
    const std::uint64_t end = trials * (w + 1) / jobs;
    try {
      for (std::uint64_t t = begin; t < end; ++t) body(seed0 + t, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<std::uint64_t> total(counters, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < counters; ++i) total[i] += p[i];
  }
  return total;
}

}  // namespace pdeglab
