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
#include <optional>
#include <vector>

#include "json.hpp"
#include "pdeglab/boolean_function.hpp"
#include "pdeglab/linear_system.hpp"
#include "pdeglab/prob_polynomial.hpp"
#include "pdeglab/rational.hpp"

namespace pdeglab {

inline constexpr std::size_t kMaxAgreementPoints = 16;
inline constexpr std::size_t kExactBadFractionMaxPoints = 10;

/// g on a point set X of {0,1}^m (points as masks) with a degree budget d.
struct AgreementInstance {
  std::size_t m = 0;
  std::vector<std::uint64_t> points;
  std::vector<bool> values;
  std::size_t d = 0;

  std::size_t size() const noexcept { return points.size(); }
  /// Throws on repeated points, mismatched lengths, empty X or caps.
  void validate() const;
};

std::vector<std::uint64_t> all_points(std::size_t m);

struct AgreementResult {
  std::size_t k = 0;
  std::vector<std::size_t> matched;  ///< indices into X
  std::optional<LinearSystemSolution> witness;
};

/// Largest k such that some degree-<= d polynomial matches g on k points of
/// X. Deletion sets are tried by size, then lexicographically.
AgreementResult max_agreement(const AgreementInstance& inst);

/// ceil(9M / 10).
std::size_t bad_threshold(std::size_t M);
bool is_bad(const AgreementInstance& inst);

struct BadFraction {
  ErrorMode mode = ErrorMode::Exact;
  Rational exact;
  std::uint64_t trials = 0;
  std::uint64_t bad = 0;
  double estimate = 0.0;
  double radius = 0.0;
};

/// Over all 2^M functions g: X -> {0,1}.
BadFraction bad_fraction_exact(std::size_t m, const std::vector<std::uint64_t>& points,
                               std::size_t d);
/// g drawn from SeedStream(seed) one bit per point, seeds seed0 .. seed0 + trials - 1.
BadFraction bad_fraction_monte_carlo(std::size_t m, const std::vector<std::uint64_t>& points,
                                     std::size_t d, const ScanConfig& config);

/// True when F on X is not bad, which certifies pdeg_{1/10}(F) > d.
bool pdeg_lower_certificate(const BooleanFunction& F, const std::vector<std::uint64_t>& points,
                            std::size_t d);

nlohmann::json to_json(const AgreementResult& result, std::size_t arity);
nlohmann::json to_json(const BadFraction& fraction);

}  // namespace pdeglab
