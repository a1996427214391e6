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

#include <gtest/gtest.h>

#include "pdeglab/boolean_function.hpp"
#include "pdeglab/polynomial.hpp"

namespace pdeglab {
namespace {

TEST(Polynomial, MobiusOfOrIsAlternatingSum) {
  const auto p = mobius_interpolate(or_function(3));
  EXPECT_EQ(p.degree(), 3u);
  EXPECT_EQ(p.coefficient(0b001), Rational(1));
  EXPECT_EQ(p.coefficient(0b011), Rational(-1));
  EXPECT_EQ(p.coefficient(0b111), Rational(1));
  EXPECT_EQ(p.term_count(), 7u);
}

TEST(Polynomial, XorHasFullDegreeWithPowerOfTwoCoefficient) {
  const auto p = mobius_interpolate(xor_function(4));
  EXPECT_EQ(p.degree(), 4u);
  EXPECT_EQ(p.coefficient(0b1111), Rational(-8));
}

TEST(Polynomial, InterpolationAgreesOnCube) {
  for (const auto& f : {majority_function(5), addressing_function(2)}) {
    const auto p = mobius_interpolate(f);
    const auto values = cube_values(p);
    for (std::uint64_t k = 0; k < f.table_size(); ++k) {
      EXPECT_EQ(values[k], Rational(f.value(k) ? 1 : 0));
      EXPECT_EQ(p.evaluate_mask(k), values[k]);
    }
    EXPECT_EQ(interpolate_values(f.arity(), values), p);
  }
}

TEST(Polynomial, ArithmeticIsMultilinear) {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto p = (x + y) * x;
  EXPECT_EQ(p.coefficient(0b01), Rational(1));
  EXPECT_EQ(p.coefficient(0b11), Rational(1));
  EXPECT_EQ(p.degree(), 2u);
  const auto nx = Polynomial::negated_variable(2, 0);
  EXPECT_TRUE((x + nx - Polynomial::constant(2, 1)).is_zero());
}

TEST(Polynomial, EvaluatesAtRationalPoints) {
  const auto p = majority_poly(3);
  const Rational half(1, 2);
  const Rational pt[] = {half, half, half};
  EXPECT_EQ(p.evaluate(std::span<const Rational>(pt)), half);
}

TEST(Polynomial, ComposeSubstitutesInners) {
  const auto outer = mobius_interpolate(and_function(2));
  const Polynomial inners[] = {Polynomial::variable(3, 0) + Polynomial::variable(3, 1),
                               Polynomial::variable(3, 2)};
  const auto c = compose(outer, inners);
  EXPECT_EQ(c.coefficient(0b101), Rational(1));
  EXPECT_EQ(c.coefficient(0b110), Rational(1));
  EXPECT_EQ(c.term_count(), 2u);
}

TEST(Polynomial, JsonRoundTrip) {
  const auto p = mobius_interpolate(majority_function(3)) * Rational(2, 3);
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
}

}  // namespace
}  // namespace pdeglab
