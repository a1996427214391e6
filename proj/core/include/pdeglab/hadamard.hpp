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

#include "json.hpp"
#include "pdeglab/bits.hpp"
#include "pdeglab/form.hpp"
#include "pdeglab/polynomial.hpp"
#include "pdeglab/prob_polynomial.hpp"
#include "pdeglab/rational.hpp"

namespace pdeglab {

inline constexpr std::size_t kMaxHadamardT = 5;
/// Pointwise evaluation only beyond this; nothing is tabulated.
inline constexpr std::uint64_t kMaxUbdArity = std::uint64_t{1} << 20;

/// Linear maps {0,1}^t -> {0,1}; codeword i is alpha -> popcount(i & alpha) mod 2,
/// stored as an s-bit word with bit alpha = h_i(alpha).
struct HadamardCodebook {
  std::size_t t = 0;
  std::size_t s = 0;
  std::vector<std::uint64_t> codewords;

  /// Codeword index of a table, or nullopt when it is not linear.
  std::optional<std::size_t> index_of(std::uint64_t table) const;
  /// sum_alpha (1 - 2 h_a(alpha)) (1 - 2 h_b(alpha)).
  std::int64_t signed_inner_product(std::size_t a, std::size_t b) const;
};

HadamardCodebook hadamard_codebook(std::size_t t);

/// Layout: x_{j,alpha} at j*s + alpha; y_{i_1..i_r} at s*r + sum_j i_j s^(j-1)
/// (i_1 least significant); y_0 last.
struct UbdInstance {
  std::size_t t = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t n = 0;
  HadamardCodebook codebook;

  std::size_t x_index(std::size_t j, std::size_t alpha) const { return j * s + alpha; }
  std::size_t y_index(std::span<const std::size_t> indices) const;
  std::size_t y_index_flat(std::uint64_t tuple) const { return s * r + tuple; }
  std::size_t y0_index() const { return n - 1; }
  std::uint64_t tuple_count() const;

  /// Table of g_j as an s-bit word.
  std::uint64_t g_table(const BitVector& a, std::size_t j) const;
  /// Input with g_j given by `tables`, T by `t_table` (s^r bits) and y_0 = b.
  BitVector make_input(std::span<const std::uint64_t> tables, const BitVector& t_table,
                       bool b) const;
};

UbdInstance make_ubd_instance(std::size_t t, std::size_t r);

bool ubd_eval(const UbdInstance& inst, const BitVector& a);

/// 1 xor z1 xor z2 xor z3 as a multilinear polynomial.
Polynomial linearity_test_poly();

/// Number of linearity predicates r * s^2 feeding the AND.
std::size_t linearity_test_count(const UbdInstance& inst);

/// AND of the linearity predicates q(x_{j,a}, x_{j,b}, x_{j,a xor b}).
/// Degree bound 3 * deg(AND).
ProbPolynomial build_Q(const UbdInstance& inst, const Rational& eps_q);

/// s^-r prod_j sum_alpha (1 - 2h_{i_j}(alpha)) (1 - 2 x_{j,alpha}); needs n <= 64.
Polynomial build_R(const UbdInstance& inst, std::span<const std::size_t> indices);

/// Q * (sum_I R_I y_I) + (1 - Q) y_0 with one Q draw used in both places.
class HadamardAssemblyForm final : public Form {
 public:
  HadamardAssemblyForm(const UbdInstance& inst, FormPtr q);

  const FormPtr& q() const noexcept { return q_; }

  Rational evaluate(std::span<const Rational> point) const override;
  Rational evaluate_bits(const BitVector& point) const override;
  BitVector support() const override;

 protected:
  Polynomial materialize_symbolic() const override;

 private:
  /// Value of sum_I R_I y_I at a Boolean point.
  Rational addressed_sum(const BitVector& point) const;

  UbdInstance inst_;
  FormPtr q_;
};

/// Degree bound deg(Q) + r + 1. Draws Q with the same seed.
ProbPolynomial assemble_P(const UbdInstance& inst, const ProbPolynomial& q);

struct InfluenceWitness {
  std::size_t variable = 0;
  BitVector input;
  bool verified = false;
};

/// One witness per variable, each checked by flipping it under ubd_eval.
std::vector<InfluenceWitness> influence_witnesses(const UbdInstance& inst);

struct UbdParams {
  std::size_t r = 0;
  std::uint64_t n = 0;
  std::int64_t predicted_degree = 0;
};

/// r = max(1, round(t^c)); predicted degree deg(Q) + r + 1 for the given eps_q.
UbdParams choose_params(std::size_t t, const Rational& c, const Rational& eps_q);

/// Every codeword tuple with T zero except at the tuple, in both T values and both b.
std::vector<BitVector> structured_inputs(const UbdInstance& inst);
std::vector<BitVector> random_inputs(const UbdInstance& inst, std::size_t count,
                                     std::uint64_t seed);

nlohmann::json to_json(const InfluenceWitness& w);

}  // namespace pdeglab
