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

#include "pdeglab/prob_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "pdeglab/error.hpp"
#include "pdeglab/parallel.hpp"

namespace pdeglab {

ProbPolynomial::ProbPolynomial(std::size_t arity, std::int64_t degree_bound, Drawer drawer,
                               std::optional<Support> support)
    : arity_(arity),
      degree_bound_(degree_bound),
      drawer_(std::move(drawer)),
      support_(std::move(support)) {
  if (!drawer_) throw ShapeError("probabilistic polynomial needs a drawer");
  if (degree_bound_ < 0) throw PreconditionError("degree bound must be nonnegative");
  if (support_) {
    Rational total = 0;
    for (const auto& e : *support_) {
      if (!e.form || e.form->arity() != arity_) throw ShapeError("support entry arity mismatch");
      if (sgn(e.probability) <= 0) throw PreconditionError("support probabilities must be positive");
      total += e.probability;
    }
    if (total != 1) throw PreconditionError("support probabilities must sum to 1");
  }
}

FormPtr ProbPolynomial::draw(std::uint64_t seed) const {
  FormPtr f = drawer_(seed);
  if (!f || f->arity() != arity_) throw VerificationError("drawer returned a form of the wrong arity");
  return f;
}

Polynomial ProbPolynomial::sample(std::uint64_t seed) const {
  Polynomial p = draw(seed)->materialize();
  if (static_cast<std::int64_t>(p.degree()) > degree_bound_) {
    throw VerificationError("sampled degree " + std::to_string(p.degree()) +
                            " exceeds certified bound " + std::to_string(degree_bound_));
  }
  return p;
}

ProbPolynomial lift_exact(const Polynomial& p) {
  FormPtr form = std::make_shared<PolynomialForm>(p);
  Support support{{form, Rational(1)}};
  return ProbPolynomial(p.arity(), static_cast<std::int64_t>(p.degree()),
                        [form](std::uint64_t) { return form; }, std::move(support));
}

namespace {

Integer uniform_integer(SeedStream& stream, const Integer& bound) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  while (true) {
    Integer u = 0;
    for (std::size_t got = 0; got < bits; got += 32) {
      u <<= 32;
      u += static_cast<unsigned long>(stream.next() >> 32);
    }
    const std::size_t words = (bits + 31) / 32;
    u >>= words * 32 - bits;
    if (u < bound) return u;
  }
}

}  // namespace

ProbPolynomial from_support(std::size_t arity,
                            std::vector<std::pair<Polynomial, Rational>> entries) {
  if (entries.empty()) throw PreconditionError("mixture needs at least one entry");
  Support support;
  std::int64_t degree = 0;
  Integer lcm = 1;
  for (auto& [p, prob] : entries) {
    if (p.arity() != arity) throw ShapeError("mixture entry arity mismatch");
    degree = std::max<std::int64_t>(degree, static_cast<std::int64_t>(p.degree()));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), prob.get_den_mpz_t());
    support.push_back({std::make_shared<PolynomialForm>(std::move(p)), prob});
  }
  std::vector<Integer> cumulative;
  Integer running = 0;
  for (const auto& e : support) {
    running += e.probability.get_num() * (lcm / e.probability.get_den());
    cumulative.push_back(running);
  }
  auto forms = std::make_shared<std::vector<FormPtr>>();
  for (const auto& e : support) forms->push_back(e.form);
  auto drawer = [forms, cumulative, lcm](std::uint64_t seed) {
    SeedStream stream(seed);
    const Integer u = uniform_integer(stream, lcm);
    for (std::size_t k = 0; k < cumulative.size(); ++k) {
      if (u < cumulative[k]) return (*forms)[k];
    }
    return forms->back();
  };
  return ProbPolynomial(arity, degree, drawer, std::move(support));
}

Rational majority_tail(std::size_t l, const Rational& eps) {
  if (l % 2 == 0) throw PreconditionError("majority size must be odd");
  const Rational q = 1 - eps;
  Rational tail = 0;
  for (std::size_t k = (l + 1) / 2; k <= l; ++k) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), l, k);
    tail += Rational(binom) * pow(eps, k) * pow(q, l - k);
  }
  return tail;
}

namespace {
inline constexpr std::size_t kMaxMajorityCopies = 4001;
}

std::size_t majority_copies(const Rational& eps, const Rational& delta) {
  if (sgn(eps) < 0 || eps > Rational(1, 3)) {
    throw PreconditionError("error reduction needs 0 <= eps <= 1/3");
  }
  if (sgn(delta) < 0) throw PreconditionError("error reduction needs delta >= 0");
  if (delta >= eps) return 1;
  if (sgn(delta) == 0) throw PreconditionError("delta = 0 is unreachable for eps > 0");
  for (std::size_t l = 1; l <= kMaxMajorityCopies; l += 2) {
    if (majority_tail(l, eps) <= delta) return l;
  }
  throw CapExceeded("error reduction needs more than " + std::to_string(kMaxMajorityCopies) +
                    " copies");
}

namespace {

std::optional<Support> power_support(const std::optional<Support>& base, std::size_t l,
                                     std::size_t arity) {
  if (!base) return std::nullopt;
  const std::size_t m = base->size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (total > kMaxSupportSize / m) return std::nullopt;
    total *= m;
  }
  Support out;
  out.reserve(total);
  std::vector<std::size_t> digits(l, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<FormPtr> copies;
    Rational prob = 1;
    for (std::size_t i = 0; i < l; ++i) {
      copies.push_back((*base)[digits[i]].form);
      prob *= (*base)[digits[i]].probability;
    }
    out.push_back({std::make_shared<MajorityForm>(std::move(copies)), prob});
    for (std::size_t i = 0; i < l && ++digits[i] == m; ++i) digits[i] = 0;
  }
  (void)arity;
  return out;
}

}  // namespace

ProbPolynomial reduce_error(const ProbPolynomial& pp, const Rational& eps, const Rational& delta) {
  const std::size_t l = majority_copies(eps, delta);
  if (l == 1) return pp;
  auto drawer = [pp, l](std::uint64_t seed) -> FormPtr {
    std::vector<FormPtr> copies;
    copies.reserve(l);
    for (std::size_t k = 0; k < l; ++k) copies.push_back(pp.draw(derive_seed(seed, k)));
    return std::make_shared<MajorityForm>(std::move(copies));
  };
  return ProbPolynomial(pp.arity(), pp.degree_bound() * static_cast<std::int64_t>(l), drawer,
                        power_support(pp.support(), l, pp.arity()));
}

ProbPolynomial compose_prob(const ProbPolynomial& outer, std::span<const ProbPolynomial> inners) {
  if (inners.size() != outer.arity()) {
    throw ShapeError("compose: outer arity " + std::to_string(outer.arity()) + " but " +
                     std::to_string(inners.size()) + " inners");
  }
  if (inners.empty()) throw ShapeError("compose: no inner polynomials");
  const std::size_t n = inners.front().arity();
  std::int64_t inner_degree = 0;
  for (const auto& q : inners) {
    if (q.arity() != n) throw ShapeError("compose: inner arities differ");
    inner_degree = std::max(inner_degree, q.degree_bound());
  }
  std::vector<ProbPolynomial> inner_list(inners.begin(), inners.end());

  std::optional<Support> support;
  bool enumerable = outer.support().has_value();
  std::size_t total = enumerable ? outer.support()->size() : 0;
  for (const auto& q : inner_list) {
    if (!enumerable) break;
    if (!q.support() || total > kMaxSupportSize / q.support()->size()) {
      enumerable = false;
      break;
    }
    total *= q.support()->size();
  }
  if (enumerable) {
    Support out;
    out.reserve(total);
    std::vector<std::size_t> digits(inner_list.size(), 0);
    for (const auto& o : *outer.support()) {
      std::fill(digits.begin(), digits.end(), 0);
      while (true) {
        std::vector<FormPtr> forms;
        Rational prob = o.probability;
        for (std::size_t k = 0; k < inner_list.size(); ++k) {
          const auto& e = (*inner_list[k].support())[digits[k]];
          forms.push_back(e.form);
          prob *= e.probability;
        }
        out.push_back({std::make_shared<ComposeForm>(o.form, std::move(forms)), prob});
        std::size_t k = 0;
        for (; k < digits.size(); ++k) {
          if (++digits[k] < inner_list[k].support()->size()) break;
          digits[k] = 0;
        }
        if (k == digits.size()) break;
      }
    }
    support = std::move(out);
  }

  auto drawer = [outer, inner_list](std::uint64_t seed) -> FormPtr {
    FormPtr o = outer.draw(derive_seed(seed, 0));
    std::vector<FormPtr> forms;
    forms.reserve(inner_list.size());
    for (std::size_t k = 0; k < inner_list.size(); ++k) {
      forms.push_back(inner_list[k].draw(derive_seed(seed, k + 1)));
    }
    return std::make_shared<ComposeForm>(std::move(o), std::move(forms));
  };
  return ProbPolynomial(n, outer.degree_bound() * inner_degree, drawer, std::move(support));
}

ProbPolynomial substitute_prob(const ProbPolynomial& pp, std::vector<Literal> literals,
                               std::size_t target_arity) {
  if (literals.size() != pp.arity()) throw ShapeError("substitution needs one literal per variable");
  for (const auto& l : literals) {
    if ((l.kind == Literal::Kind::Var || l.kind == Literal::Kind::NegVar) &&
        l.index >= target_arity) {
      throw ShapeError("substitution literal index out of range");
    }
  }
  std::optional<Support> support;
  if (pp.support()) {
    Support out;
    for (const auto& e : *pp.support()) {
      out.push_back({std::make_shared<SubstitutionForm>(e.form, literals, target_arity),
                     e.probability});
    }
    support = std::move(out);
  }
  auto drawer = [pp, literals, target_arity](std::uint64_t seed) -> FormPtr {
    return std::make_shared<SubstitutionForm>(pp.draw(seed), literals, target_arity);
  };
  return ProbPolynomial(target_arity, pp.degree_bound(), drawer, std::move(support));
}

ProbPolynomial restrict_prob(const ProbPolynomial& pp, const Restriction& rho) {
  if (rho.size() != pp.arity()) throw ShapeError("restriction size does not match arity");
  std::vector<Literal> literals;
  std::size_t next = 0;
  for (auto fix : rho.map) {
    switch (fix) {
      case Fix::Zero: literals.push_back(Literal::zero()); break;
      case Fix::One: literals.push_back(Literal::one()); break;
      case Fix::Star: literals.push_back(Literal::var(next++)); break;
    }
  }
  return substitute_prob(pp, std::move(literals), next);
}

ProbPolynomial restrict_prob_keep_arity(const ProbPolynomial& pp, const Restriction& rho) {
  if (rho.size() != pp.arity()) throw ShapeError("restriction size does not match arity");
  std::vector<Literal> literals;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    switch (rho.map[i]) {
      case Fix::Zero: literals.push_back(Literal::zero()); break;
      case Fix::One: literals.push_back(Literal::one()); break;
      case Fix::Star: literals.push_back(Literal::var(i)); break;
    }
  }
  return substitute_prob(pp, std::move(literals), pp.arity());
}

ProbPolynomial project_prob(const ProbPolynomial& pp, const Projection& nu) {
  nu.validate();
  if (nu.map.size() != pp.arity()) throw ShapeError("projection size does not match arity");
  std::vector<Literal> literals;
  for (auto j : nu.map) literals.push_back(Literal::var(j));
  return substitute_prob(pp, std::move(literals), nu.target_arity);
}

ProbPolynomial shift_prob(const ProbPolynomial& pp, const BitVector& shift) {
  if (shift.size() != pp.arity()) throw ShapeError("shift size does not match arity");
  std::vector<Literal> literals;
  for (std::size_t i = 0; i < shift.size(); ++i) {
    literals.push_back(shift.test(i) ? Literal::neg(i) : Literal::var(i));
  }
  return substitute_prob(pp, std::move(literals), pp.arity());
}

ProbPolynomial complement_prob(const ProbPolynomial& pp) {
  std::optional<Support> support;
  if (pp.support()) {
    Support out;
    for (const auto& e : *pp.support()) {
      out.push_back({std::make_shared<AffineForm>(e.form, Rational(1), Rational(-1)),
                     e.probability});
    }
    support = std::move(out);
  }
  auto drawer = [pp](std::uint64_t seed) -> FormPtr {
    return std::make_shared<AffineForm>(pp.draw(seed), Rational(1), Rational(-1));
  };
  return ProbPolynomial(pp.arity(), pp.degree_bound(), drawer, std::move(support));
}

// Error measurement

std::string to_string(ErrorMode mode) {
  return mode == ErrorMode::Exact ? "exact" : "monte_carlo";
}

double hoeffding_radius(std::uint64_t trials, double confidence) {
  if (trials == 0) throw PreconditionError("Monte Carlo needs at least one trial");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw PreconditionError("confidence must lie strictly between 0 and 1");
  }
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(trials)));
}

bool ErrorEntry::within(const Rational& bound) const {
  if (mode == ErrorMode::Exact) return exact <= bound;
  return estimate <= to_double(bound) + radius;
}

double ErrorReport::max_error() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.estimate);
  return m;
}

bool ErrorReport::within(const Rational& bound) const {
  return std::all_of(entries.begin(), entries.end(),
                     [&](const ErrorEntry& e) { return e.within(bound); });
}

nlohmann::json to_json(const ErrorReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j = {{"input", e.input.to_string()},
                        {"mode", to_string(e.mode)},
                        {"estimate", e.estimate},
                        {"trials", e.trials},
                        {"radius", e.radius}};
    if (e.mode == ErrorMode::Exact) {
      j["exact"] = to_fraction_string(e.exact);
    } else {
      j["failures"] = e.failures;
    }
    entries.push_back(std::move(j));
  }
  nlohmann::json summary = {{"max_error", report.max_error()},
                            {"degree_bound", report.degree_bound},
                            {"seed_0", report.seed0},
                            {"mode", to_string(report.mode)},
                            {"inputs", report.entries.size()}};
  if (report.mode == ErrorMode::MonteCarlo) summary["confidence"] = report.confidence;
  return {{"entries", std::move(entries)}, {"summary", std::move(summary)}};
}

std::vector<BitVector> all_inputs(std::size_t n) {
  if (n > kMaxArity) throw CapExceeded("exhaustive input list capped at arity " + std::to_string(kMaxArity));
  std::vector<BitVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) out.push_back(BitVector::from_word(k, n));
  return out;
}

ErrorReport report_from_counts(std::span<const BitVector> inputs,
                               std::span<const std::uint64_t> failures, const ScanConfig& config,
                               std::int64_t degree_bound) {
  if (inputs.size() != failures.size()) throw ShapeError("one failure count per input");
  ErrorReport report;
  report.mode = ErrorMode::MonteCarlo;
  report.degree_bound = degree_bound;
  report.seed0 = config.seed0;
  report.confidence = config.confidence;
  const double radius = hoeffding_radius(config.trials, config.confidence);
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    ErrorEntry e;
    e.input = inputs[k];
    e.mode = ErrorMode::MonteCarlo;
    e.trials = config.trials;
    e.failures = failures[k];
    e.estimate = static_cast<double>(failures[k]) / static_cast<double>(config.trials);
    e.radius = radius;
    report.entries.push_back(std::move(e));
  }
  return report;
}

ErrorReport error_scan(const ProbPolynomial& pp, std::span<const BitVector> inputs,
                       std::span<const bool> expected, ErrorMode mode, const ScanConfig& config) {
  if (inputs.size() != expected.size()) throw ShapeError("one expected value per input");
  for (const auto& a : inputs) {
    if (a.size() != pp.arity()) throw ShapeError("input length does not match arity");
  }
  if (mode == ErrorMode::Exact) {
    if (!pp.support()) throw PreconditionError("exact mode requires an enumerated support");
    ErrorReport report;
    report.mode = ErrorMode::Exact;
    report.degree_bound = pp.degree_bound();
    report.seed0 = config.seed0;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      const Rational want = expected[k] ? 1 : 0;
      Rational err = 0;
      for (const auto& e : *pp.support()) {
        if (e.form->evaluate_bits(inputs[k]) != want) err += e.probability;
      }
      ErrorEntry entry;
      entry.input = inputs[k];
      entry.mode = ErrorMode::Exact;
      entry.exact = err;
      entry.estimate = to_double(err);
      report.entries.push_back(std::move(entry));
    }
    return report;
  }
  std::vector<Rational> want(expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) want[k] = expected[k] ? 1 : 0;
  const auto counts = parallel_counts(
      config.seed0, config.trials, inputs.size(), config.jobs,
      [&](std::uint64_t seed, std::span<std::uint64_t> fails) {
        const FormPtr form = pp.draw(seed);
        for (std::size_t k = 0; k < inputs.size(); ++k) {
          if (form->evaluate_bits(inputs[k]) != want[k]) ++fails[k];
        }
      });
  return report_from_counts(inputs, counts, config, pp.degree_bound());
}

ErrorReport error_scan(const ProbPolynomial& pp, const BooleanFunction& f,
                       std::span<const BitVector> inputs, ErrorMode mode,
                       const ScanConfig& config) {
  if (f.arity() != pp.arity()) throw ShapeError("function and polynomial arities differ");
  std::vector<char> tmp;
  tmp.reserve(inputs.size());
  for (const auto& a : inputs) tmp.push_back(f.evaluate(a) ? 1 : 0);
  std::unique_ptr<bool[]> expected(new bool[inputs.size()]);
  for (std::size_t k = 0; k < inputs.size(); ++k) expected[k] = tmp[k] != 0;
  return error_scan(pp, inputs, std::span<const bool>(expected.get(), inputs.size()), mode,
                    config);
}

ErrorEntry error_at(const ProbPolynomial& pp, const BooleanFunction& f, const BitVector& a,
                    ErrorMode mode, const ScanConfig& config) {
  const BitVector inputs[1] = {a};
  return error_scan(pp, f, inputs, mode, config).entries.front();
}

}  // namespace pdeglab
