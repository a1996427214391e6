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

#include "pdeglab/form.hpp"

#include <string>
#include <utility>

#include "pdeglab/error.hpp"

namespace pdeglab {

namespace {

BitVector to_bits(std::span<const Rational> values) {
  BitVector bits(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 1) bits.set(i);
  }
  return bits;
}

bool all_boolean(std::span<const Rational> values) {
  for (const auto& v : values) {
    if (!is_boolean(v)) return false;
  }
  return true;
}

void check_point(const Form& f, std::size_t size) {
  if (size != f.arity()) {
    throw ShapeError("point has " + std::to_string(size) + " coordinates, form arity is " +
                     std::to_string(f.arity()));
  }
}

}  // namespace

Rational Form::evaluate_bits(const BitVector& point) const {
  check_point(*this, point.size());
  std::vector<Rational> values(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) values[i] = point.test(i) ? 1 : 0;
  return evaluate(values);
}

Polynomial Form::materialize() const {
  if (arity_ > kMaxPolynomialArity) {
    throw CapExceeded("cannot materialize a form of arity " + std::to_string(arity_));
  }
  const auto vars = support().indices();
  if (vars.size() > kDenseMaterializeMaxSupport) return materialize_symbolic();

  const std::size_t k = vars.size();
  std::vector<Rational> values(std::size_t{1} << k);
  BitVector point(arity_);
  for (std::uint64_t m = 0; m < values.size(); ++m) {
    for (std::size_t j = 0; j < k; ++j) point.set(vars[j], (m >> j) & 1U);
    values[m] = evaluate_bits(point);
  }
  const Polynomial compact = interpolate_values(k, values);
  Polynomial out(arity_);
  for (const auto& [mask, c] : compact.terms()) {
    std::uint64_t wide = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask >> j) & 1U) wide |= std::uint64_t{1} << vars[j];
    }
    out.add_term(wide, c);
  }
  return out;
}

Polynomial Form::materialize_symbolic() const {
  throw CapExceeded("form support too wide to materialize (" + std::to_string(support().count()) +
                    " variables)");
}

// PolynomialForm

namespace {
inline constexpr std::size_t kPolynomialTableMaxSupport = 16;
}

PolynomialForm::PolynomialForm(Polynomial p) : Form(p.arity()), poly_(std::move(p)) {
  const std::uint64_t mask = poly_.support_mask();
  for (std::size_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) support_vars_.push_back(i);
  }
  if (support_vars_.size() <= kPolynomialTableMaxSupport) {
    Polynomial compact(support_vars_.size());
    for (const auto& [m, c] : poly_.terms()) {
      std::uint64_t cm = 0;
      for (std::size_t j = 0; j < support_vars_.size(); ++j) {
        if ((m >> support_vars_[j]) & 1U) cm |= std::uint64_t{1} << j;
      }
      compact.add_term(cm, c);
    }
    table_ = cube_values(compact);
  }
}

Rational PolynomialForm::evaluate(std::span<const Rational> point) const {
  check_point(*this, point.size());
  return poly_.evaluate(point);
}

Rational PolynomialForm::evaluate_bits(const BitVector& point) const {
  check_point(*this, point.size());
  if (table_.empty()) return poly_.evaluate(point);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < support_vars_.size(); ++j) {
    if (point.test(support_vars_[j])) idx |= std::size_t{1} << j;
  }
  return table_[idx];
}

BitVector PolynomialForm::support() const {
  BitVector s(arity());
  for (auto v : support_vars_) s.set(v);
  return s;
}

// OrProductForm

OrProductForm::OrProductForm(std::size_t arity, std::vector<BitVector> subsets)
    : Form(arity), subsets_(std::move(subsets)) {
  for (const auto& s : subsets_) {
    if (s.size() != arity) throw ShapeError("subset size does not match OR arity");
  }
}

Rational OrProductForm::evaluate(std::span<const Rational> point) const {
  check_point(*this, point.size());
  Rational prod = 1;
  for (const auto& s : subsets_) {
    Rational sum = 0;
    for (auto k : s.indices()) sum += point[k];
    prod *= 1 - sum;
    if (is_zero(prod)) return 1;
  }
  return 1 - prod;
}

Rational OrProductForm::evaluate_bits(const BitVector& point) const {
  check_point(*this, point.size());
  std::int64_t small = 1;
  Integer big;
  bool overflow = false;
  for (const auto& s : subsets_) {
    const auto c = static_cast<std::int64_t>(s.intersect_count(point));
    if (c == 0) continue;
    if (c == 1) return 1;
    const std::int64_t factor = 1 - c;
    if (!overflow) {
      std::int64_t next = 0;
      if (!__builtin_mul_overflow(small, factor, &next)) {
        small = next;
        continue;
      }
      overflow = true;
      big = Integer(static_cast<long>(small));
    }
    big *= static_cast<long>(factor);
  }
  if (overflow) return Rational(Integer(1 - big));
  return Rational(static_cast<long>(1 - small));
}

BitVector OrProductForm::support() const {
  BitVector s(arity());
  for (const auto& sub : subsets_) s |= sub;
  return s;
}

Polynomial OrProductForm::materialize_symbolic() const {
  Polynomial prod = Polynomial::constant(arity(), 1);
  for (const auto& s : subsets_) {
    Polynomial factor = Polynomial::constant(arity(), 1);
    for (auto k : s.indices()) factor -= Polynomial::variable(arity(), k);
    prod *= factor;
  }
  return Polynomial::constant(arity(), 1) - prod;
}

// ComposeForm

namespace {
std::size_t common_arity(const FormPtr& outer, const std::vector<FormPtr>& inners) {
  if (!outer) throw ShapeError("compose: null outer form");
  if (outer->arity() != inners.size()) {
    throw ShapeError("compose: outer arity " + std::to_string(outer->arity()) + " but " +
                     std::to_string(inners.size()) + " inner forms");
  }
  if (inners.empty()) throw ShapeError("compose: no inner forms");
  const std::size_t n = inners.front()->arity();
  for (const auto& f : inners) {
    if (!f || f->arity() != n) throw ShapeError("compose: inner forms disagree on arity");
  }
  return n;
}
}  // namespace

ComposeForm::ComposeForm(FormPtr outer, std::vector<FormPtr> inners)
    : Form(common_arity(outer, inners)), outer_(std::move(outer)), inners_(std::move(inners)) {}

Rational ComposeForm::apply_outer(std::vector<Rational>& values) const {
  if (all_boolean(values)) return outer_->evaluate_bits(to_bits(values));
  return outer_->evaluate(values);
}

Rational ComposeForm::evaluate(std::span<const Rational> point) const {
  check_point(*this, point.size());
  std::vector<Rational> values;
  values.reserve(inners_.size());
  for (const auto& f : inners_) values.push_back(f->evaluate(point));
  return apply_outer(values);
}

Rational ComposeForm::evaluate_bits(const BitVector& point) const {
  check_point(*this, point.size());
  std::vector<Rational> values;
  values.reserve(inners_.size());
  for (const auto& f : inners_) values.push_back(f->evaluate_bits(point));
  return apply_outer(values);
}

BitVector ComposeForm::support() const {
  BitVector s(arity());
  const BitVector used = outer_->support();
  for (std::size_t k = 0; k < inners_.size(); ++k) {
    if (used.test(k)) s |= inners_[k]->support();
  }
  return s;
}

Polynomial ComposeForm::materialize_symbolic() const {
  std::vector<Polynomial> inner;
  inner.reserve(inners_.size());
  const BitVector used = outer_->support();
  for (std::size_t k = 0; k < inners_.size(); ++k) {
    inner.push_back(used.test(k) ? inners_[k]->materialize() : Polynomial(arity()));
  }
  return compose(outer_->materialize(), inner);
}

// MajorityForm

Rational majority_extension(std::span<const Rational> point) {
  const std::size_t l = point.size();
  std::vector<Rational> e(l + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < l; ++i) {
    const Rational& x = point[i];
    const Rational y = 1 - x;
    for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] * y + e[k - 1] * x;
    e[0] *= y;
  }
  Rational out = 0;
  for (std::size_t k = l / 2 + 1; k <= l; ++k) out += e[k];
  return out;
}

MajorityForm::MajorityForm(std::vector<FormPtr> copies)
    : Form(copies.empty() ? 0 : copies.front()->arity()), copies_(std::move(copies)) {
  if (copies_.empty() || copies_.size() % 2 == 0) {
    throw PreconditionError("majority needs an odd, positive number of copies");
  }
  for (const auto& f : copies_) {
    if (!f || f->arity() != arity()) throw ShapeError("majority copies disagree on arity");
  }
}

Rational MajorityForm::evaluate(std::span<const Rational> point) const {
  check_point(*this, point.size());
  std::vector<Rational> values;
  values.reserve(copies_.size());
  for (const auto& f : copies_) values.push_back(f->evaluate(point));
  if (all_boolean(values)) {
    std::size_t ones = 0;
    for (const auto& v : values) ones += v == 1;
    return ones > copies_.size() / 2 ? 1 : 0;
  }
  return majority_extension(values);
}

Rational MajorityForm::evaluate_bits(const BitVector& point) const {
  check_point(*this, point.size());
  std::vector<Rational> values;
  values.reserve(copies_.size());
  bool boolean = true;
  std::size_t ones = 0;
  for (const auto& f : copies_) {
    values.push_back(f->evaluate_bits(point));
    if (values.back() == 1) {
      ++ones;
    } else if (values.back() != 0) {
      boolean = false;
    }
  }
  if (boolean) return ones > copies_.size() / 2 ? 1 : 0;
  return majority_extension(values);
}

BitVector MajorityForm::support() const {
  BitVector s(arity());
  for (const auto& f : copies_) s |= f->support();
  return s;
}

Polynomial MajorityForm::materialize_symbolic() const {
  if (copies_.size() > kMajorityMaxSize) {
    throw CapExceeded("majority of " + std::to_string(copies_.size()) +
                      " copies over a wide support cannot be materialized");
  }
  std::vector<Polynomial> inner;
  inner.reserve(copies_.size());
  for (const auto& f : copies_) inner.push_back(f->materialize());
  return compose(majority_poly(copies_.size()), inner);
}

// SubstitutionForm

SubstitutionForm::SubstitutionForm(FormPtr child, std::vector<Literal> literals,
                                   std::size_t target_arity)
    : Form(target_arity), child_(std::move(child)), literals_(std::move(literals)) {
  if (!child_ || literals_.size() != child_->arity()) {
    throw ShapeError("substitution needs one literal per child variable");
  }
  for (const auto& l : literals_) {
    if ((l.kind == Literal::Kind::Var || l.kind == Literal::Kind::NegVar) &&
        l.index >= target_arity) {
      throw ShapeError("substitution literal index out of range");
    }
  }
}

Rational SubstitutionForm::evaluate(std::span<const Rational> point) const {
  check_point(*this, point.size());
  std::vector<Rational> inner(literals_.size());
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    const auto& l = literals_[i];
    switch (l.kind) {
      case Literal::Kind::Zero: inner[i] = 0; break;
      case Literal::Kind::One: inner[i] = 1; break;
      case Literal::Kind::Var: inner[i] = point[l.index]; break;
      case Literal::Kind::NegVar: inner[i] = 1 - point[l.index]; break;
    }
  }
  return child_->evaluate(inner);
}

Rational SubstitutionForm::evaluate_bits(const BitVector& point) const {
  check_point(*this, point.size());
  BitVector inner(literals_.size());
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    const auto& l = literals_[i];
    switch (l.kind) {
      case Literal::Kind::Zero: break;
      case Literal::Kind::One: inner.set(i); break;
      case Literal::Kind::Var: inner.set(i, point.test(l.index)); break;
      case Literal::Kind::NegVar: inner.set(i, !point.test(l.index)); break;
    }
  }
  return child_->evaluate_bits(inner);
}

BitVector SubstitutionForm::support() const {
  BitVector s(arity());
  for (auto i : child_->support().indices()) {
    const auto& l = literals_[i];
    if (l.kind == Literal::Kind::Var || l.kind == Literal::Kind::NegVar) s.set(l.index);
  }
  return s;
}

Polynomial SubstitutionForm::materialize_symbolic() const {
  return substitute(child_->materialize(), literals_, arity());
}

Polynomial substitute(const Polynomial& p, std::span<const Literal> literals,
                      std::size_t target_arity) {
  if (literals.size() != p.arity()) throw ShapeError("substitute: literal count mismatch");
  std::vector<Polynomial> inner;
  inner.reserve(literals.size());
  for (const auto& l : literals) {
    switch (l.kind) {
      case Literal::Kind::Zero: inner.push_back(Polynomial(target_arity)); break;
      case Literal::Kind::One: inner.push_back(Polynomial::constant(target_arity, 1)); break;
      case Literal::Kind::Var: inner.push_back(Polynomial::variable(target_arity, l.index)); break;
      case Literal::Kind::NegVar:
        inner.push_back(Polynomial::negated_variable(target_arity, l.index));
        break;
    }
  }
  if (inner.empty()) {
    return Polynomial::constant(target_arity, p.coefficient(0));
  }
  return compose(p, inner);
}

// AffineForm

AffineForm::AffineForm(FormPtr child, Rational offset, Rational scale)
    : Form(child ? child->arity() : 0),
      child_(std::move(child)),
      offset_(std::move(offset)),
      scale_(std::move(scale)) {
  if (!child_) throw ShapeError("affine: null child form");
}

Rational AffineForm::evaluate(std::span<const Rational> point) const {
  return offset_ + scale_ * child_->evaluate(point);
}

Rational AffineForm::evaluate_bits(const BitVector& point) const {
  return offset_ + scale_ * child_->evaluate_bits(point);
}

Polynomial AffineForm::materialize_symbolic() const {
  return Polynomial::constant(arity(), offset_) + child_->materialize() * scale_;
}

}  // namespace pdeglab
