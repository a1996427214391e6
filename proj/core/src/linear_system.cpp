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

#include "pdeglab/linear_system.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "pdeglab/error.hpp"

namespace pdeglab {

Polynomial LinearSystemSolution::polynomial(std::size_t arity) const {
  Polynomial p(arity);
  for (std::size_t c = 0; c < monomials.size(); ++c) p.add_term(monomials[c], coefficients[c]);
  return p;
}

std::vector<std::uint64_t> monomials_up_to_degree(std::size_t arity, std::size_t d) {
  if (arity > 30) throw CapExceeded("monomials_up_to_degree: arity exceeds 30");
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << arity;
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) <= d) out.push_back(m);
  }
  return out;
}

std::optional<LinearSystemSolution> solve_agreement_system(std::size_t arity,
                                                           std::span<const std::uint64_t> points,
                                                           std::span<const bool> values,
                                                           std::size_t d) {
  if (points.size() != values.size()) throw ShapeError("solve_agreement_system: size mismatch");
  {
    std::unordered_set<std::uint64_t> seen;
    for (auto p : points) {
      if (arity < 64 && (p >> arity) != 0) throw ShapeError("solve_agreement_system: point out of range");
      if (!seen.insert(p).second) throw PreconditionError("solve_agreement_system: repeated point");
    }
  }
  LinearSystemSolution solution;
  solution.monomials = monomials_up_to_degree(arity, d);
  const std::size_t rows = points.size();
  const std::size_t cols = solution.monomials.size();

  // augmented matrix [A | b], A(r, c) = [monomial c is a subset of point r]
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if ((solution.monomials[c] & ~points[r]) == 0) m[r][c] = 1;
    }
    m[r][cols] = values[r] ? 1 : 0;
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Rational inv = 1 / m[rank][c];
    for (std::size_t k = c; k <= cols; ++k) m[rank][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(m[r][c])) continue;
      const Rational factor = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (!is_zero(m[r][cols])) return std::nullopt;
  }

  solution.coefficients.assign(cols, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) solution.coefficients[pivot_col[r]] = m[r][cols];
  for (const auto& c : solution.coefficients) solution.bit_size += bit_size(c);
  solution.reference_bound = 10 * cols * cols * cols;
  return solution;
}

}  // namespace pdeglab
