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
#include <map>
#include <span>
#include <vector>

#include "json.hpp"
#include "pdeglab/bits.hpp"
#include "pdeglab/boolean_function.hpp"
#include "pdeglab/rational.hpp"

namespace pdeglab {

/// Largest arity a Polynomial can carry (monomials are 64-bit masks).
inline constexpr std::size_t kMaxPolynomialArity = 64;
/// Largest arity accepted by the dense cube transforms.
inline constexpr std::size_t kMaxDenseArity = 22;

/// Sparse multilinear polynomial with exact rational coefficients.
///
/// Monomials are variable-index bitmasks; the term map is ordered by mask
/// value and never stores a zero coefficient, so two polynomials are equal
/// exactly when their term maps are equal. Multiplication reduces
/// x_i^2 -> x_i, which is exact on Boolean points.
class Polynomial {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t arity);

  static Polynomial constant(std::size_t arity, const Rational& value);
  static Polynomial variable(std::size_t arity, std::size_t index);
  /// 1 - x_index.
  static Polynomial negated_variable(std::size_t arity, std::size_t index);
  static Polynomial monomial(std::size_t arity, std::uint64_t mask, const Rational& coefficient);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const noexcept;
  Rational coefficient(std::uint64_t mask) const;
  /// Union of all monomial masks.
  std::uint64_t support_mask() const noexcept;

  /// Adds `coefficient` to the monomial `mask`, erasing it if it cancels.
  void add_term(std::uint64_t mask, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(const BitVector& point) const;
  Rational evaluate_mask(std::uint64_t point) const;

 private:
  void check_same_arity(const Polynomial& other) const;

  std::size_t arity_ = 0;
  Terms terms_;
};

/// Unique multilinear representative of f.
Polynomial mobius_interpolate(const BooleanFunction& f);

/// Multilinear polynomial taking `values[k]` at the cube point with index k.
Polynomial interpolate_values(std::size_t arity, std::span<const Rational> values);

/// Values of P at every cube point, index k = point k.
std::vector<Rational> cube_values(const Polynomial& p);

inline constexpr std::size_t kMajorityMaxSize = 15;
/// Exact multilinear Maj_l for odd l <= kMajorityMaxSize.
Polynomial majority_poly(std::size_t l);

/// Symbolic substitution of `inners` into P followed by multilinear
/// reduction in the inners' common variables.
Polynomial compose(const Polynomial& outer, std::span<const Polynomial> inners);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace pdeglab
