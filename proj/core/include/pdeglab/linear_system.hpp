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
#include <span>
#include <vector>

#include "pdeglab/polynomial.hpp"
#include "pdeglab/rational.hpp"

namespace pdeglab {

/// Degree-<= d multilinear interpolant on a point set, with its encoding size.
struct LinearSystemSolution {
  /// Monomials of degree <= d in increasing mask order (the column order).
  std::vector<std::uint64_t> monomials;
  std::vector<Rational> coefficients;
  /// Sum over coefficients of bit_size(num) + bit_size(den).
  std::size_t bit_size = 0;
  /// 10 q^3 for q = monomials.size(), the reference encoding budget.
  std::size_t reference_bound = 0;

  Polynomial polynomial(std::size_t arity) const;
};

/// Monomial masks over `arity` variables of degree <= d, ascending by mask.
std::vector<std::uint64_t> monomials_up_to_degree(std::size_t arity, std::size_t d);

/// Solves for a degree-<= d multilinear polynomial matching `values` on the
/// Boolean `points` (masks over `arity` variables) by exact Gaussian
/// elimination; free columns are set to zero. Returns nullopt when the
/// system is inconsistent.
std::optional<LinearSystemSolution> solve_agreement_system(std::size_t arity,
                                                           std::span<const std::uint64_t> points,
                                                           std::span<const bool> values,
                                                           std::size_t d);

}  // namespace pdeglab
