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

#include "pdeglab/polynomial.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "pdeglab/error.hpp"

namespace pdeglab {

namespace {

void check_arity(std::size_t n) {
  if (n > kMaxPolynomialArity) {
    throw CapExceeded("Polynomial: arity " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxPolynomialArity));
  }
}

std::uint64_t arity_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

Polynomial::Polynomial(std::size_t arity) : arity_(arity) { check_arity(arity); }

Polynomial Polynomial::constant(std::size_t arity, const Rational& value) {
  Polynomial p(arity);
  p.add_term(0, value);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ShapeError("Polynomial::variable: index out of range");
  Polynomial p(arity);
  p.add_term(std::uint64_t{1} << index, 1);
  return p;
}

Polynomial Polynomial::negated_variable(std::size_t arity, std::size_t index) {
  Polynomial p = variable(arity, index);
  p *= Rational(-1);
  p.add_term(0, 1);
  return p;
}

Polynomial Polynomial::monomial(std::size_t arity, std::uint64_t mask, const Rational& coefficient) {
  if ((mask & ~arity_mask(arity)) != 0) throw ShapeError("Polynomial::monomial: mask out of range");
  Polynomial p(arity);
  p.add_term(mask, coefficient);
  return p;
}

std::size_t Polynomial::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [mask, c] : terms_) d = std::max(d, static_cast<std::size_t>(std::popcount(mask)));
  return d;
}

Rational Polynomial::coefficient(std::uint64_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::support_mask() const noexcept {
  std::uint64_t m = 0;
  for (const auto& [mask, c] : terms_) m |= mask;
  return m;
}

void Polynomial::add_term(std::uint64_t mask, const Rational& coefficient) {
  if (pdeglab::is_zero(coefficient)) return;
  auto [it, inserted] = terms_.try_emplace(mask, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (pdeglab::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::check_same_arity(const Polynomial& other) const {
  if (arity_ != other.arity_) {
    throw ShapeError("Polynomial: arity mismatch (" + std::to_string(arity_) + " vs " +
                     std::to_string(other.arity_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_arity(other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_arity(other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (pdeglab::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= scalar;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_arity(b);
  Polynomial out(a.arity_);
  Rational product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term(ma | mb, product);
    }
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw ShapeError("Polynomial::evaluate: point length mismatch");
  Rational sum = 0;
  Rational term;
  for (const auto& [mask, c] : terms_) {
    term = c;
    for (std::uint64_t rest = mask; rest != 0 && !pdeglab::is_zero(term); rest &= rest - 1) {
      term *= point[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    sum += term;
  }
  return sum;
}

Rational Polynomial::evaluate(const BitVector& point) const {
  if (point.size() != arity_) throw ShapeError("Polynomial::evaluate: point length mismatch");
  return evaluate_mask(point.to_word());
}

Rational Polynomial::evaluate_mask(std::uint64_t point) const {
  Rational sum = 0;
  for (const auto& [mask, c] : terms_) {
    if ((mask & ~point) == 0) sum += c;
  }
  return sum;
}

Polynomial interpolate_values(std::size_t arity, std::span<const Rational> values) {
  if (arity > kMaxDenseArity) throw CapExceeded("interpolate_values: arity exceeds dense cap");
  const std::uint64_t size = std::uint64_t{1} << arity;
  if (values.size() != size) throw ShapeError("interpolate_values: need 2^arity values");
  std::vector<Rational> c(values.begin(), values.end());
  // Moebius inversion over the subset lattice.
  for (std::size_t i = 0; i < arity; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t k = 0; k < size; ++k) {
      if (k & bit) c[k] -= c[k ^ bit];
    }
  }
  Polynomial p(arity);
  for (std::uint64_t k = 0; k < size; ++k) p.add_term(k, c[k]);
  return p;
}

std::vector<Rational> cube_values(const Polynomial& p) {
  if (p.arity() > kMaxDenseArity) throw CapExceeded("cube_values: arity exceeds dense cap");
  const std::uint64_t size = std::uint64_t{1} << p.arity();
  std::vector<Rational> v(size);
  for (const auto& [mask, c] : p.terms()) v[mask] = c;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t k = 0; k < size; ++k) {
      if (k & bit) v[k] += v[k ^ bit];
    }
  }
  return v;
}

Polynomial mobius_interpolate(const BooleanFunction& f) {
  const std::size_t n = f.arity();
  if (n > kMaxDenseArity) throw CapExceeded("mobius_interpolate: arity exceeds dense cap");
  const std::uint64_t size = f.table_size();
  // |coefficient| <= 2^n, so 64-bit integers are exact here.
  std::vector<std::int64_t> c(size);
  for (std::uint64_t k = 0; k < size; ++k) c[k] = f.value(k) ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t k = 0; k < size; ++k) {
      if (k & bit) c[k] -= c[k ^ bit];
    }
  }
  Polynomial p(n);
  for (std::uint64_t k = 0; k < size; ++k) {
    if (c[k] != 0) p.add_term(k, Rational(static_cast<long>(c[k])));
  }
  return p;
}

Polynomial majority_poly(std::size_t l) {
  if (l % 2 == 0) throw PreconditionError("majority_poly: size must be odd");
  if (l > kMajorityMaxSize) {
    throw CapExceeded("majority_poly: size exceeds cap " + std::to_string(kMajorityMaxSize));
  }
  return mobius_interpolate(majority_function(l));
}

Polynomial compose(const Polynomial& outer, std::span<const Polynomial> inners) {
  if (inners.size() != outer.arity()) {
    throw ShapeError("compose: need one inner polynomial per outer variable");
  }
  if (inners.empty()) return outer;
  const std::size_t m = inners.front().arity();
  for (const auto& q : inners) {
    if (q.arity() != m) throw ShapeError("compose: inner polynomials must share an arity");
  }
  // products[mask] = prod_{i in mask} inners[i], built by peeling the top bit
  std::unordered_map<std::uint64_t, Polynomial> products;
  products.emplace(0, Polynomial::constant(m, 1));
  const auto product_for = [&](auto&& self, std::uint64_t mask) -> const Polynomial& {
    if (auto it = products.find(mask); it != products.end()) return it->second;
    const std::size_t top = 63 - static_cast<std::size_t>(std::countl_zero(mask));
    const std::uint64_t rest = mask & ~(std::uint64_t{1} << top);
    Polynomial value = self(self, rest) * inners[top];
    return products.emplace(mask, std::move(value)).first->second;
  };
  Polynomial out(m);
  for (const auto& [mask, c] : outer.terms()) {
    out += product_for(product_for, mask) * c;
  }
  return out;
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mask, c] : p.terms()) {
    nlohmann::json monomial = nlohmann::json::array();
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      monomial.push_back(std::countr_zero(rest));
    }
    terms.push_back({{"monomial", std::move(monomial)}, {"coeff", to_fraction_string(c)}});
  }
  return {{"arity", p.arity()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  const std::size_t arity = j.at("arity").get<std::size_t>();
  Polynomial p(arity);
  std::uint64_t previous = 0;
  bool first = true;
  for (const auto& term : j.at("terms")) {
    std::uint64_t mask = 0;
    std::size_t last = 0;
    bool first_index = true;
    for (const auto& idx : term.at("monomial")) {
      const std::size_t i = idx.get<std::size_t>();
      if (i >= arity) throw ShapeError("polynomial JSON: variable index out of range");
      if (!first_index && i <= last) {
        throw PreconditionError("polynomial JSON: monomial indices must be strictly increasing");
      }
      mask |= std::uint64_t{1} << i;
      last = i;
      first_index = false;
    }
    if (!first && mask <= previous) {
      throw PreconditionError("polynomial JSON: terms must be sorted by monomial mask");
    }
    const Rational c = parse_rational(term.at("coeff").get<std::string>());
    if (is_zero(c)) throw PreconditionError("polynomial JSON: zero coefficient stored");
    p.add_term(mask, c);
    previous = mask;
    first = false;
  }
  return p;
}

}  // namespace pdeglab
