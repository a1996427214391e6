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
#include <memory>
#include <span>
#include <vector>

#include "pdeglab/bits.hpp"
#include "pdeglab/polynomial.hpp"
#include "pdeglab/rational.hpp"

namespace pdeglab {

/// One drawn polynomial, kept as an arithmetic circuit over `arity` variables.
///
/// A form evaluates exactly at any rational point and has a fast path for
/// Boolean points. materialize() returns the unique multilinear polynomial
/// agreeing with the circuit on {0,1}^arity, which equals symbolic expansion
/// followed by x^2 -> x reduction. Forms are immutable once built and may be
/// shared across threads.
class Form {
 public:
  explicit Form(std::size_t arity) : arity_(arity) {}
  virtual ~Form() = default;

  Form(const Form&) = delete;
  Form& operator=(const Form&) = delete;

  std::size_t arity() const noexcept { return arity_; }

  virtual Rational evaluate(std::span<const Rational> point) const = 0;
  virtual Rational evaluate_bits(const BitVector& point) const;
  /// Variables the circuit can depend on.
  virtual BitVector support() const = 0;

  Polynomial materialize() const;

 protected:
  /// Fallback when the support is too wide for cube interpolation.
  virtual Polynomial materialize_symbolic() const;

 private:
  std::size_t arity_;
};

using FormPtr = std::shared_ptr<const Form>;

/// Support sizes up to this are materialized by evaluating on the sub-cube.
inline constexpr std::size_t kDenseMaterializeMaxSupport = 18;

class PolynomialForm final : public Form {
 public:
  explicit PolynomialForm(Polynomial p);

  const Polynomial& polynomial() const noexcept { return poly_; }

  Rational evaluate(std::span<const Rational> point) const override;
  Rational evaluate_bits(const BitVector& point) const override;
  BitVector support() const override;

 protected:
  Polynomial materialize_symbolic() const override { return poly_; }

 private:
  Polynomial poly_;
  std::vector<std::size_t> support_vars_;
  std::vector<Rational> table_;  // values on the support sub-cube, when small
};

/// 1 - prod_j (1 - sum_{k in S_j} x_k), the product form of the OR sampler.
class OrProductForm final : public Form {
 public:
  OrProductForm(std::size_t arity, std::vector<BitVector> subsets);

  const std::vector<BitVector>& subsets() const noexcept { return subsets_; }

  Rational evaluate(std::span<const Rational> point) const override;
  Rational evaluate_bits(const BitVector& point) const override;
  BitVector support() const override;

 protected:
  Polynomial materialize_symbolic() const override;

 private:
  std::vector<BitVector> subsets_;
};

/// outer(inner_1(x), ..., inner_k(x)).
class ComposeForm final : public Form {
 public:
  ComposeForm(FormPtr outer, std::vector<FormPtr> inners);

  const FormPtr& outer() const noexcept { return outer_; }
  const std::vector<FormPtr>& inners() const noexcept { return inners_; }

  Rational evaluate(std::span<const Rational> point) const override;
  Rational evaluate_bits(const BitVector& point) const override;
  BitVector support() const override;

 protected:
  Polynomial materialize_symbolic() const override;

 private:
  Rational apply_outer(std::vector<Rational>& values) const;

  FormPtr outer_;
  std::vector<FormPtr> inners_;
};

/// Multilinear Maj_l applied to l copies; l odd, any size.
class MajorityForm final : public Form {
 public:
  explicit MajorityForm(std::vector<FormPtr> copies);

  const std::vector<FormPtr>& copies() const noexcept { return copies_; }

  Rational evaluate(std::span<const Rational> point) const override;
  Rational evaluate_bits(const BitVector& point) const override;
  BitVector support() const override;

 protected:
  Polynomial materialize_symbolic() const override;

 private:
  FormPtr front_;
  std::vector<FormPtr> copies_;
};

/// Multilinear extension of Maj_l at an arbitrary rational point.
Rational majority_extension(std::span<const Rational> point);

/// Literal substituted for one source variable.
struct Literal {
  enum class Kind : std::uint8_t { Zero, One, Var, NegVar };
  Kind kind = Kind::Zero;
  std::size_t index = 0;  ///< target variable for Var/NegVar

  static Literal zero() { return {Kind::Zero, 0}; }
  static Literal one() { return {Kind::One, 0}; }
  static Literal var(std::size_t i) { return {Kind::Var, i}; }
  static Literal neg(std::size_t i) { return {Kind::NegVar, i}; }
};

/// child(l_1(y), ..., l_n(y)) for literals l_i in {0, 1, y_j, 1 - y_j}.
class SubstitutionForm final : public Form {
 public:
  SubstitutionForm(FormPtr child, std::vector<Literal> literals, std::size_t target_arity);

  Rational evaluate(std::span<const Rational> point) const override;
  Rational evaluate_bits(const BitVector& point) const override;
  BitVector support() const override;

 protected:
  Polynomial materialize_symbolic() const override;

 private:
  FormPtr child_;
  std::vector<Literal> literals_;
};

/// offset + scale * child.
class AffineForm final : public Form {
 public:
  AffineForm(FormPtr child, Rational offset, Rational scale);

  Rational evaluate(std::span<const Rational> point) const override;
  Rational evaluate_bits(const BitVector& point) const override;
  BitVector support() const override { return child_->support(); }

 protected:
  Polynomial materialize_symbolic() const override;

 private:
  FormPtr child_;
  Rational offset_;
  Rational scale_;
};

/// Substitutes literals into a deterministic polynomial.
Polynomial substitute(const Polynomial& p, std::span<const Literal> literals,
                      std::size_t target_arity);

}  // namespace pdeglab
