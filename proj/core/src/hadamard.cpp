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

#include "pdeglab/hadamard.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <string>

#include "pdeglab/error.hpp"
#include "pdeglab/or_construction.hpp"

namespace pdeglab {

std::optional<std::size_t> HadamardCodebook::index_of(std::uint64_t table) const {
  std::size_t beta = 0;
  for (std::size_t k = 0; k < t; ++k) {
    if ((table >> (std::size_t{1} << k)) & 1U) beta |= std::size_t{1} << k;
  }
  if (codewords[beta] != table) return std::nullopt;
  return beta;
}

std::int64_t HadamardCodebook::signed_inner_product(std::size_t a, std::size_t b) const {
  const auto differ = std::popcount(codewords.at(a) ^ codewords.at(b));
  return static_cast<std::int64_t>(s) - 2 * differ;
}

HadamardCodebook hadamard_codebook(std::size_t t) {
  if (t == 0 || t > kMaxHadamardT) {
    throw CapExceeded("Hadamard codebook needs 1 <= t <= " + std::to_string(kMaxHadamardT));
  }
  HadamardCodebook book;
  book.t = t;
  book.s = std::size_t{1} << t;
  for (std::size_t beta = 0; beta < book.s; ++beta) {
    std::uint64_t word = 0;
    for (std::size_t alpha = 0; alpha < book.s; ++alpha) {
      if (std::popcount(beta & alpha) & 1) word |= std::uint64_t{1} << alpha;
    }
    book.codewords.push_back(word);
  }
  return book;
}

std::uint64_t UbdInstance::tuple_count() const {
  std::uint64_t c = 1;
  for (std::size_t j = 0; j < r; ++j) c *= s;
  return c;
}

std::size_t UbdInstance::y_index(std::span<const std::size_t> indices) const {
  if (indices.size() != r) throw ShapeError("need one codeword index per block");
  std::uint64_t flat = 0;
  std::uint64_t scale = 1;
  for (auto i : indices) {
    if (i >= s) throw ShapeError("codeword index out of range");
    flat += i * scale;
    scale *= s;
  }
  return y_index_flat(flat);
}

std::uint64_t UbdInstance::g_table(const BitVector& a, std::size_t j) const {
  std::uint64_t word = 0;
  for (std::size_t alpha = 0; alpha < s; ++alpha) {
    if (a.test(x_index(j, alpha))) word |= std::uint64_t{1} << alpha;
  }
  return word;
}

BitVector UbdInstance::make_input(std::span<const std::uint64_t> tables,
                                  const BitVector& t_table, bool b) const {
  if (tables.size() != r || t_table.size() != tuple_count()) {
    throw ShapeError("input parts do not match the instance");
  }
  BitVector a(n);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t alpha = 0; alpha < s; ++alpha) {
      if ((tables[j] >> alpha) & 1U) a.set(x_index(j, alpha));
    }
  }
  for (auto k : t_table.indices()) a.set(y_index_flat(k));
  a.set(y0_index(), b);
  return a;
}

UbdInstance make_ubd_instance(std::size_t t, std::size_t r) {
  if (r == 0) throw PreconditionError("instance needs r >= 1");
  UbdInstance inst;
  inst.codebook = hadamard_codebook(t);
  inst.t = t;
  inst.r = r;
  inst.s = inst.codebook.s;
  std::uint64_t tuples = 1;
  for (std::size_t j = 0; j < r; ++j) {
    if (tuples > kMaxUbdArity / inst.s) throw CapExceeded("instance size exceeds the evaluation cap");
    tuples *= inst.s;
  }
  const std::uint64_t n = inst.s * r + tuples + 1;
  if (n > kMaxUbdArity) throw CapExceeded("instance size exceeds the evaluation cap");
  inst.n = static_cast<std::size_t>(n);
  return inst;
}

bool ubd_eval(const UbdInstance& inst, const BitVector& a) {
  if (a.size() != inst.n) throw ShapeError("input length does not match the instance");
  std::uint64_t flat = 0;
  std::uint64_t scale = 1;
  for (std::size_t j = 0; j < inst.r; ++j) {
    const auto idx = inst.codebook.index_of(inst.g_table(a, j));
    if (!idx) return a.test(inst.y0_index());
    flat += *idx * scale;
    scale *= inst.s;
  }
  return a.test(inst.y_index_flat(flat));
}

Polynomial linearity_test_poly() {
  return mobius_interpolate(xor_function(3).complement());
}

std::size_t linearity_test_count(const UbdInstance& inst) { return inst.r * inst.s * inst.s; }

ProbPolynomial build_Q(const UbdInstance& inst, const Rational& eps_q) {
  const std::size_t m = linearity_test_count(inst);
  const ProbPolynomial q = lift_exact(linearity_test_poly());
  std::vector<ProbPolynomial> tests;
  tests.reserve(m);
  for (std::size_t j = 0; j < inst.r; ++j) {
    for (std::size_t alpha = 0; alpha < inst.s; ++alpha) {
      for (std::size_t beta = 0; beta < inst.s; ++beta) {
        tests.push_back(substitute_prob(q,
                                        {Literal::var(inst.x_index(j, alpha)),
                                         Literal::var(inst.x_index(j, beta)),
                                         Literal::var(inst.x_index(j, alpha ^ beta))},
                                        inst.n));
      }
    }
  }
  return compose_prob(and_prob_poly(m, eps_q), tests);
}

Polynomial build_R(const UbdInstance& inst, std::span<const std::size_t> indices) {
  if (indices.size() != inst.r) throw ShapeError("need one codeword index per block");
  if (inst.n > kMaxPolynomialArity) throw CapExceeded("R needs n <= 64");
  Polynomial out = Polynomial::constant(inst.n, 1);
  for (std::size_t j = 0; j < inst.r; ++j) {
    if (indices[j] >= inst.s) throw ShapeError("codeword index out of range");
    const std::uint64_t h = inst.codebook.codewords[indices[j]];
    Polynomial linear(inst.n);
    for (std::size_t alpha = 0; alpha < inst.s; ++alpha) {
      const long sign = ((h >> alpha) & 1U) ? -1 : 1;
      linear.add_term(0, Rational(sign));
      linear.add_term(std::uint64_t{1} << inst.x_index(j, alpha), Rational(-2 * sign));
    }
    out *= linear;
  }
  out *= Rational(1, static_cast<long>(inst.tuple_count()));
  return out;
}

// HadamardAssemblyForm

HadamardAssemblyForm::HadamardAssemblyForm(const UbdInstance& inst, FormPtr q)
    : Form(inst.n), inst_(inst), q_(std::move(q)) {
  if (!q_ || q_->arity() != inst.n) throw ShapeError("Q arity does not match the instance");
}

Rational HadamardAssemblyForm::addressed_sum(const BitVector& point) const {
  const std::size_t s = inst_.s;
  std::vector<std::int64_t> c(inst_.r * s);
  for (std::size_t j = 0; j < inst_.r; ++j) {
    const std::uint64_t g = inst_.g_table(point, j);
    for (std::size_t i = 0; i < s; ++i) {
      c[j * s + i] =
          static_cast<std::int64_t>(s) - 2 * std::popcount(g ^ inst_.codebook.codewords[i]);
    }
  }
  const std::uint64_t tuples = inst_.tuple_count();
  std::int64_t sum = 0;
  for (std::uint64_t flat = 0; flat < tuples; ++flat) {
    if (!point.test(inst_.y_index_flat(flat))) continue;
    std::int64_t prod = 1;
    std::uint64_t rest = flat;
    for (std::size_t j = 0; j < inst_.r && prod != 0; ++j, rest /= s) prod *= c[j * s + rest % s];
    sum += prod;
  }
  return ratio(Integer(static_cast<long>(sum)), Integer(static_cast<unsigned long>(tuples)));
}

Rational HadamardAssemblyForm::evaluate_bits(const BitVector& point) const {
  if (point.size() != arity()) throw ShapeError("point length does not match arity");
  const Rational q = q_->evaluate_bits(point);
  const Rational y0 = point.test(inst_.y0_index()) ? 1 : 0;
  if (is_zero(q)) return y0;
  return q * addressed_sum(point) + (1 - q) * y0;
}

Rational HadamardAssemblyForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity()) throw ShapeError("point length does not match arity");
  const Rational q = q_->evaluate(point);
  const std::size_t s = inst_.s;
  std::vector<Rational> c(inst_.r * s);
  for (std::size_t j = 0; j < inst_.r; ++j) {
    for (std::size_t i = 0; i < s; ++i) {
      Rational acc = 0;
      for (std::size_t alpha = 0; alpha < s; ++alpha) {
        const Rational term = 1 - 2 * point[inst_.x_index(j, alpha)];
        if ((inst_.codebook.codewords[i] >> alpha) & 1U) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      c[j * s + i] = acc;
    }
  }
  Rational sum = 0;
  const std::uint64_t tuples = inst_.tuple_count();
  for (std::uint64_t flat = 0; flat < tuples; ++flat) {
    const Rational& y = point[inst_.y_index_flat(flat)];
    if (is_zero(y)) continue;
    Rational prod = y;
    std::uint64_t rest = flat;
    for (std::size_t j = 0; j < inst_.r; ++j, rest /= s) prod *= c[j * s + rest % s];
    sum += prod;
  }
  sum /= Rational(static_cast<long>(tuples));
  return q * sum + (1 - q) * point[inst_.y0_index()];
}

BitVector HadamardAssemblyForm::support() const {
  BitVector all(arity());
  for (std::size_t i = 0; i < arity(); ++i) all.set(i);
  return all;
}

Polynomial HadamardAssemblyForm::materialize_symbolic() const {
  const Polynomial q = q_->materialize();
  Polynomial addressed(inst_.n);
  std::vector<std::size_t> indices(inst_.r);
  for (std::uint64_t flat = 0; flat < inst_.tuple_count(); ++flat) {
    std::uint64_t rest = flat;
    for (std::size_t j = 0; j < inst_.r; ++j, rest /= inst_.s) indices[j] = rest % inst_.s;
    addressed += build_R(inst_, indices) * Polynomial::variable(inst_.n, inst_.y_index_flat(flat));
  }
  const Polynomial y0 = Polynomial::variable(inst_.n, inst_.y0_index());
  return q * addressed + (Polynomial::constant(inst_.n, 1) - q) * y0;
}

ProbPolynomial assemble_P(const UbdInstance& inst, const ProbPolynomial& q) {
  if (q.arity() != inst.n) throw ShapeError("Q arity does not match the instance");
  auto drawer = [inst, q](std::uint64_t seed) -> FormPtr {
    return std::make_shared<HadamardAssemblyForm>(inst, q.draw(seed));
  };
  return ProbPolynomial(inst.n, q.degree_bound() + static_cast<std::int64_t>(inst.r) + 1, drawer);
}

// Witnesses and parameters

namespace {

InfluenceWitness check_witness(const UbdInstance& inst, std::size_t variable, BitVector input) {
  BitVector flipped = input;
  flipped.flip(variable);
  const bool ok = ubd_eval(inst, input) != ubd_eval(inst, flipped);
  return {variable, std::move(input), ok};
}

}  // namespace

std::vector<InfluenceWitness> influence_witnesses(const UbdInstance& inst) {
  std::vector<InfluenceWitness> out(inst.n);
  const std::uint64_t tuples = inst.tuple_count();
  const std::vector<std::uint64_t> zero_tables(inst.r, inst.codebook.codewords[0]);

  // x variables: every g_j the zero codeword, T = 0 only at that tuple, b = 1.
  BitVector t_table(tuples);
  for (std::uint64_t k = 1; k < tuples; ++k) t_table.set(k);
  const BitVector x_input = inst.make_input(zero_tables, t_table, true);
  for (std::size_t j = 0; j < inst.r; ++j) {
    for (std::size_t alpha = 0; alpha < inst.s; ++alpha) {
      const std::size_t v = inst.x_index(j, alpha);
      out[v] = check_witness(inst, v, x_input);
    }
  }

  // y variables: g_j = h_{i_j}, T = 0, b = 0.
  const BitVector zero_t(tuples);
  std::vector<std::uint64_t> tables(inst.r);
  for (std::uint64_t flat = 0; flat < tuples; ++flat) {
    std::uint64_t rest = flat;
    for (std::size_t j = 0; j < inst.r; ++j, rest /= inst.s) {
      tables[j] = inst.codebook.codewords[rest % inst.s];
    }
    const std::size_t v = inst.y_index_flat(flat);
    out[v] = check_witness(inst, v, inst.make_input(tables, zero_t, false));
  }

  // y_0: g_1 constant one, which is not linear.
  std::vector<std::uint64_t> bad = zero_tables;
  bad[0] = inst.s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << inst.s) - 1;
  out[inst.y0_index()] = check_witness(inst, inst.y0_index(), inst.make_input(bad, zero_t, false));
  return out;
}

UbdParams choose_params(std::size_t t, const Rational& c, const Rational& eps_q) {
  if (t == 0) throw PreconditionError("t must be at least 1");
  if (sgn(c) <= 0) throw PreconditionError("c must be positive");
  const double raw = std::pow(static_cast<double>(t), to_double(c));
  if (!(raw < 1e6)) throw CapExceeded("r = t^c is too large");
  const auto r = static_cast<std::size_t>(std::max<long long>(1, std::llround(raw)));
  const UbdInstance inst = make_ubd_instance(t, r);
  const std::size_t m = linearity_test_count(inst);
  const auto and_degree = static_cast<std::int64_t>(p_for_epsilon(eps_q) * (ceil_log2(m) + 1));
  return {r, inst.n, 3 * and_degree + static_cast<std::int64_t>(r) + 1};
}

std::vector<BitVector> structured_inputs(const UbdInstance& inst) {
  std::vector<BitVector> out;
  const std::uint64_t tuples = inst.tuple_count();
  std::vector<std::uint64_t> tables(inst.r);
  for (std::uint64_t flat = 0; flat < tuples; ++flat) {
    std::uint64_t rest = flat;
    for (std::size_t j = 0; j < inst.r; ++j, rest /= inst.s) {
      tables[j] = inst.codebook.codewords[rest % inst.s];
    }
    for (int value = 0; value < 2; ++value) {
      BitVector t_table(tuples);
      t_table.set(flat, value == 1);
      for (int b = 0; b < 2; ++b) out.push_back(inst.make_input(tables, t_table, b == 1));
    }
  }
  return out;
}

std::vector<BitVector> random_inputs(const UbdInstance& inst, std::size_t count,
                                     std::uint64_t seed) {
  std::vector<BitVector> out;
  out.reserve(count);
  SeedStream stream(seed);
  for (std::size_t k = 0; k < count; ++k) {
    BitVector a(inst.n);
    for (std::size_t i = 0; i < inst.n; ++i) a.set(i, stream.next_bit());
    out.push_back(std::move(a));
  }
  return out;
}

nlohmann::json to_json(const InfluenceWitness& w) {
  return {{"variable", w.variable}, {"input", w.input.to_string()}, {"verified", w.verified}};
}

}  // namespace pdeglab
