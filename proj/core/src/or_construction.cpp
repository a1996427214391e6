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

#include "pdeglab/or_construction.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "pdeglab/error.hpp"
#include "pdeglab/form.hpp"
#include "pdeglab/parallel.hpp"

namespace pdeglab {

std::size_t ceil_log2(std::uint64_t n) {
  if (n == 0) throw PreconditionError("ceil_log2 needs n >= 1");
  std::size_t k = 0;
  while ((std::uint64_t{1} << k) < n) ++k;
  return k;
}

const Rational& e_lower() {
  static const Rational value("2718281828459045235360287471352/1000000000000000000000000000000");
  return value;
}

const Rational& e_upper() {
  static const Rational value("2718281828459045235360287471353/1000000000000000000000000000000");
  return value;
}

std::size_t p_for_epsilon(const Rational& eps) {
  if (sgn(eps) <= 0 || eps >= 1) throw PreconditionError("OR polynomial needs 0 < eps < 1");
  const Rational base = 1 - 1 / (2 * e_upper());
  Rational power = 1;
  std::size_t p = 0;
  while (power > eps) {
    power *= base;
    ++p;
  }
  return p;
}

ScaledSubsetFamily ScaledSubsetFamily::generate(std::size_t s, std::size_t p,
                                                std::uint64_t seed) {
  if (s == 0) throw PreconditionError("subset family needs s >= 1");
  if (p == 0) throw PreconditionError("subset family needs p >= 1");
  ScaledSubsetFamily family;
  family.s = s;
  family.p = p;
  family.seed = seed;
  SeedStream stream(seed);
  const std::size_t scales = family.scales();
  family.subsets.reserve(scales * p);
  for (std::size_t i = 0; i < scales; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      BitVector subset(s);
      for (std::size_t k = 0; k < s; ++k) {
        if (stream.one_in_pow2(static_cast<unsigned>(i))) subset.set(k);
      }
      family.subsets.push_back(std::move(subset));
    }
  }
  return family;
}

ProbPolynomial or_prob_poly(std::size_t n, const Rational& eps) {
  if (n == 0) throw PreconditionError("OR polynomial needs n >= 1");
  const std::size_t p = p_for_epsilon(eps);
  const auto degree = static_cast<std::int64_t>(p * (ceil_log2(n) + 1));
  auto drawer = [n, p](std::uint64_t seed) -> FormPtr {
    auto family = ScaledSubsetFamily::generate(n, p, seed);
    return std::make_shared<OrProductForm>(n, std::move(family.subsets));
  };
  return ProbPolynomial(n, degree, drawer);
}

ProbPolynomial and_prob_poly(std::size_t n, const Rational& eps) {
  std::vector<Literal> literals;
  for (std::size_t i = 0; i < n; ++i) literals.push_back(Literal::neg(i));
  return complement_prob(substitute_prob(or_prob_poly(n, eps), std::move(literals), n));
}

bool is_or_normalized(const BooleanFunction& g) {
  if (g.arity() == 0 || g.value(0)) return false;
  for (std::size_t j = 0; j < g.arity(); ++j) {
    if (!g.value(std::uint64_t{1} << j)) return false;
  }
  return true;
}

std::vector<Restriction> or_reduction_family(const BooleanFunction& g, std::size_t p,
                                             std::uint64_t seed) {
  if (!is_or_normalized(g)) {
    throw PreconditionError("restriction family needs g(0) = 0 and g(e_j) = 1 for all j");
  }
  const auto family = ScaledSubsetFamily::generate(g.arity(), p, seed);
  std::vector<Restriction> out;
  out.reserve(family.size());
  for (const auto& subset : family.subsets) {
    Restriction rho;
    rho.map.resize(g.arity(), Fix::Zero);
    for (auto k : subset.indices()) rho.map[k] = Fix::Star;
    out.push_back(std::move(rho));
  }
  return out;
}

ErrorReport or_family_scan(const BooleanFunction& g, std::size_t p,
                           std::span<const BitVector> inputs, const ScanConfig& config) {
  if (!is_or_normalized(g)) {
    throw PreconditionError("restriction family needs g(0) = 0 and g(e_j) = 1 for all j");
  }
  std::vector<std::uint64_t> words;
  words.reserve(inputs.size());
  for (const auto& a : inputs) {
    if (a.size() != g.arity()) throw ShapeError("input length does not match arity");
    words.push_back(a.to_word());
  }
  const std::size_t s = g.arity();
  const auto counts = parallel_counts(
      config.seed0, config.trials, inputs.size(), config.jobs,
      [&](std::uint64_t seed, std::span<std::uint64_t> fails) {
        const auto family = ScaledSubsetFamily::generate(s, p, seed);
        std::vector<std::uint64_t> masks;
        masks.reserve(family.size());
        for (const auto& subset : family.subsets) masks.push_back(subset.to_word());
        for (std::size_t k = 0; k < words.size(); ++k) {
          bool predicate = false;
          for (auto m : masks) {
            if (g.value(words[k] & m)) {
              predicate = true;
              break;
            }
          }
          if (predicate != (words[k] != 0)) ++fails[k];
        }
      });
  return report_from_counts(inputs, counts, config,
                            static_cast<std::int64_t>(p * (ceil_log2(s) + 1)));
}

BooleanFunction NormalizedFunction::replay() const {
  const BooleanFunction base = complemented ? original.complement() : original;
  return restrict(xor_shift(base, shift), trailing);
}

NormalizedFunction normalize_sensitive(const BooleanFunction& f) {
  if (f.is_constant()) throw PreconditionError("normalization needs a non-constant function");
  NormalizedFunction nf;
  nf.original = f;
  const auto sens = sensitivity(f);
  nf.shift = BitVector::from_word(sens.witness, f.arity());
  nf.complemented = f.value(sens.witness);
  const BooleanFunction shifted =
      xor_shift(nf.complemented ? f.complement() : f, nf.shift);
  nf.trailing.map.assign(f.arity(), Fix::Zero);
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (shifted.value(std::uint64_t{1} << i)) {
      nf.sensitive.push_back(i);
      nf.trailing.map[i] = Fix::Star;
    }
  }
  nf.permutation = nf.sensitive;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (nf.trailing.map[i] != Fix::Star) nf.permutation.push_back(i);
  }
  nf.g = restrict(shifted, nf.trailing);
  if (nf.s() != sens.sensitivity || !is_or_normalized(nf.g)) {
    throw VerificationError("normalization did not produce an OR-normalized function");
  }
  return nf;
}

ProbPolynomial normalize_prob(const NormalizedFunction& nf, const ProbPolynomial& ppf) {
  if (ppf.arity() != nf.original.arity()) throw ShapeError("polynomial arity does not match f");
  std::vector<Literal> literals(nf.original.arity());
  std::size_t next = 0;
  for (std::size_t i = 0; i < literals.size(); ++i) {
    const bool a = nf.shift.test(i);
    if (nf.trailing.map[i] == Fix::Star) {
      literals[i] = a ? Literal::neg(next) : Literal::var(next);
      ++next;
    } else {
      literals[i] = a ? Literal::one() : Literal::zero();
    }
  }
  ProbPolynomial shifted = substitute_prob(ppf, std::move(literals), next);
  return nf.complemented ? complement_prob(shifted) : shifted;
}

OrFromFunction or_from_function(const BooleanFunction& f, const ProbPolynomial& ppf,
                                const Rational& eps_f) {
  if (ppf.arity() != f.arity()) throw ShapeError("polynomial arity does not match f");
  NormalizedFunction nf = normalize_sensitive(f);
  const std::size_t s = nf.s();
  const std::size_t family_p = p_for_epsilon(Rational(1, 10));
  const std::size_t l = family_p * (ceil_log2(s) + 1);
  const std::size_t copies = majority_copies(eps_f, Rational(1, static_cast<long>(10 * l)));
  const ProbPolynomial outer = or_prob_poly(l, Rational(1, 10));
  const ProbPolynomial ppg = normalize_prob(nf, ppf);

  auto drawer = [s, family_p, copies, outer, ppg](std::uint64_t seed) -> FormPtr {
    const auto family = ScaledSubsetFamily::generate(s, family_p, derive_seed(seed, 0));
    FormPtr o = outer.draw(derive_seed(seed, 1));
    std::vector<FormPtr> inner;
    inner.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::vector<Literal> literals(s, Literal::zero());
      for (auto k : family.subsets[i].indices()) literals[k] = Literal::var(k);
      const std::uint64_t gseed = derive_seed(seed, 2 + i);
      if (copies == 1) {
        inner.push_back(std::make_shared<SubstitutionForm>(ppg.draw(gseed), literals, s));
        continue;
      }
      std::vector<FormPtr> reps;
      reps.reserve(copies);
      for (std::size_t k = 0; k < copies; ++k) {
        reps.push_back(
            std::make_shared<SubstitutionForm>(ppg.draw(derive_seed(gseed, k)), literals, s));
      }
      inner.push_back(std::make_shared<MajorityForm>(std::move(reps)));
    }
    return std::make_shared<ComposeForm>(std::move(o), std::move(inner));
  };

  const std::int64_t degree =
      outer.degree_bound() * static_cast<std::int64_t>(copies) * ppf.degree_bound();
  OrFromFunction out{ProbPolynomial(s, degree, drawer), std::move(nf), family_p, l, copies,
                     outer.degree_bound(), ppf.degree_bound()};
  return out;
}

nlohmann::json family_to_json(const ScaledSubsetFamily& family) {
  nlohmann::json subsets = nlohmann::json::array();
  for (std::size_t k = 0; k < family.size(); ++k) {
    subsets.push_back({{"scale", family.scale_of(k)}, {"members", family.subsets[k].indices()}});
  }
  return {{"s", family.s},
          {"p", family.p},
          {"scales", family.scales()},
          {"l", family.size()},
          {"seed", family.seed},
          {"subsets", std::move(subsets)}};
}

}  // namespace pdeglab
