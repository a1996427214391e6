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

#include "pdeglab/error.hpp"
#include "pdeglab/hadamard.hpp"

namespace pdeglab {
namespace {

TEST(Hadamard, CodebookForTOneAndTwo) {
  const auto one = hadamard_codebook(1);
  EXPECT_EQ(one.s, 2u);
  EXPECT_EQ(one.codewords, (std::vector<std::uint64_t>{0b00, 0b10}));
  const auto two = hadamard_codebook(2);
  EXPECT_EQ(two.codewords, (std::vector<std::uint64_t>{0b0000, 0b1010, 0b1100, 0b0110}));
  EXPECT_EQ(two.index_of(0b1100), 2u);
  EXPECT_FALSE(two.index_of(0b0001).has_value());
  EXPECT_THROW(hadamard_codebook(6), CapExceeded);
}

TEST(Hadamard, CodewordsAreOrthogonal) {
  const auto book = hadamard_codebook(4);
  for (std::size_t a = 0; a < book.s; ++a) {
    for (std::size_t b = 0; b < book.s; ++b) {
      EXPECT_EQ(book.signed_inner_product(a, b), a == b ? 16 : 0);
    }
  }
}

TEST(Hadamard, LinearityTestPolynomial) {
  const auto q = linearity_test_poly();
  Polynomial expected = Polynomial::constant(3, 1);
  for (std::size_t i = 0; i < 3; ++i) expected.add_term(std::uint64_t{1} << i, Rational(-1));
  for (std::uint64_t m : {0b011, 0b101, 0b110}) expected.add_term(m, Rational(2));
  expected.add_term(0b111, Rational(-4));
  EXPECT_EQ(q, expected);
}

TEST(Hadamard, InstanceLayout) {
  const auto inst = make_ubd_instance(2, 2);
  EXPECT_EQ(inst.s, 4u);
  EXPECT_EQ(inst.tuple_count(), 16u);
  EXPECT_EQ(inst.n, 8u + 16u + 1u);
  EXPECT_EQ(inst.x_index(1, 3), 7u);
  const std::size_t idx[] = {1, 2};
  EXPECT_EQ(inst.y_index(idx), 8u + 1u + 2u * 4u);
  EXPECT_EQ(linearity_test_count(inst), 32u);
  EXPECT_THROW(make_ubd_instance(5, 4), CapExceeded);
}

TEST(Hadamard, EvaluationAddressesOrFallsBack) {
  const auto inst = make_ubd_instance(2, 2);
  const auto& cw = inst.codebook.codewords;
  BitVector t_table(inst.tuple_count());
  t_table.set(1 + 3 * 4);
  const std::uint64_t good[] = {cw[1], cw[3]};
  EXPECT_TRUE(ubd_eval(inst, inst.make_input(good, t_table, false)));
  const std::uint64_t other[] = {cw[3], cw[1]};
  EXPECT_FALSE(ubd_eval(inst, inst.make_input(other, t_table, false)));
  const std::uint64_t bad[] = {0b0001, cw[1]};
  EXPECT_TRUE(ubd_eval(inst, inst.make_input(bad, t_table, true)));
  EXPECT_FALSE(ubd_eval(inst, inst.make_input(bad, t_table, false)));
}

TEST(Hadamard, SelectorIsDeltaOnCodewords) {
  const auto inst = make_ubd_instance(1, 2);
  for (std::size_t i0 = 0; i0 < 2; ++i0) {
    for (std::size_t i1 = 0; i1 < 2; ++i1) {
      const std::size_t idx[] = {i0, i1};
      const auto R = build_R(inst, idx);
      EXPECT_EQ(R.degree(), 2u);
      for (std::size_t k0 = 0; k0 < 2; ++k0) {
        for (std::size_t k1 = 0; k1 < 2; ++k1) {
          const std::uint64_t tables[] = {inst.codebook.codewords[k0],
                                          inst.codebook.codewords[k1]};
          const auto a = inst.make_input(tables, BitVector(inst.tuple_count()), false);
          EXPECT_EQ(R.evaluate(a), Rational(k0 == i0 && k1 == i1 ? 1 : 0));
        }
      }
    }
  }
}

TEST(Hadamard, QIsExactOnCodewordInputs) {
  const auto inst = make_ubd_instance(1, 1);
  const auto Q = build_Q(inst, Rational(1, 3));
  for (const auto& a : structured_inputs(inst)) {
    EXPECT_EQ(Q.draw(5)->evaluate_bits(a), Rational(1));
  }
}

TEST(Hadamard, AssemblyMatchesSymbolicForm) {
  const auto inst = make_ubd_instance(1, 1);
  const auto P = assemble_P(inst, build_Q(inst, Rational(1, 3)));
  const auto form = P.draw(3);
  const auto poly = P.sample(3);
  EXPECT_LE(static_cast<std::int64_t>(poly.degree()), P.degree_bound());
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << inst.n); ++k) {
    const auto a = BitVector::from_word(k, inst.n);
    EXPECT_EQ(poly.evaluate(a), form->evaluate_bits(a));
  }
}

TEST(Hadamard, RationalPathMatchesSymbolicWithConstantQ) {
  const auto inst = make_ubd_instance(2, 1);
  const auto half = std::make_shared<PolynomialForm>(Polynomial::constant(inst.n, Rational(1, 2)));
  HadamardAssemblyForm form(inst, half);
  const auto poly = form.materialize();
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < inst.n; ++i) pt.push_back(ratio(Integer(long(i) - 2), Integer(3)));
  EXPECT_EQ(form.evaluate(pt), poly.evaluate(std::span<const Rational>(pt)));
  EXPECT_EQ(poly.degree(), 2u);
}

TEST(Hadamard, AssemblyIsExactWhenQIsExact) {
  const auto inst = make_ubd_instance(2, 1);
  const auto exact_q = ProbPolynomial(inst.n, 0, [n = inst.n](std::uint64_t) -> FormPtr {
    return std::make_shared<PolynomialForm>(Polynomial::constant(n, 1));
  });
  HadamardAssemblyForm form(inst, exact_q.draw(0));
  for (const auto& a : structured_inputs(inst)) {
    EXPECT_EQ(form.evaluate_bits(a), Rational(ubd_eval(inst, a) ? 1 : 0));
  }
}

TEST(Hadamard, WitnessesCoverEveryVariable) {
  for (std::size_t t : {1, 2}) {
    const auto inst = make_ubd_instance(t, 1);
    const auto w = influence_witnesses(inst);
    ASSERT_EQ(w.size(), inst.n);
    for (std::size_t v = 0; v < inst.n; ++v) {
      EXPECT_EQ(w[v].variable, v);
      EXPECT_TRUE(w[v].verified);
      auto flipped = w[v].input;
      flipped.flip(v);
      EXPECT_NE(ubd_eval(inst, w[v].input), ubd_eval(inst, flipped));
    }
  }
}

TEST(Hadamard, ParamsPredictDegree) {
  const auto params = choose_params(2, Rational(1), Rational(1, 3));
  EXPECT_EQ(params.r, 2u);
  EXPECT_EQ(params.n, 25u);
  // m = 32 tests, p = 6, AND degree 6 * 6 = 36, linearity test degree 3
  EXPECT_EQ(params.predicted_degree, 3 * 36 + 2 + 1);
  const auto inst = make_ubd_instance(2, 2);
  EXPECT_EQ(assemble_P(inst, build_Q(inst, Rational(1, 3))).degree_bound(),
            params.predicted_degree);
}

TEST(Hadamard, RandomInputsAreDeterministic) {
  const auto inst = make_ubd_instance(2, 2);
  EXPECT_EQ(random_inputs(inst, 5, 1), random_inputs(inst, 5, 1));
  EXPECT_NE(random_inputs(inst, 5, 1), random_inputs(inst, 5, 2));
}

}  // namespace
}  // namespace pdeglab
