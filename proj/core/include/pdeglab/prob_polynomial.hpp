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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdeglab/bits.hpp"
#include "pdeglab/boolean_function.hpp"
#include "pdeglab/form.hpp"
#include "pdeglab/polynomial.hpp"
#include "pdeglab/rational.hpp"

namespace pdeglab {

struct SupportEntry {
  FormPtr form;
  Rational probability;
};
using Support = std::vector<SupportEntry>;

/// Supports larger than this are dropped; error measurement then needs Monte Carlo.
inline constexpr std::size_t kMaxSupportSize = std::size_t{1} << 20;

/// Seeded distribution over polynomials of a fixed arity with a degree bound.
///
/// draw(seed) returns the circuit for one sample and is a pure function of
/// the seed. sample(seed) materializes it and checks the degree bound.
class ProbPolynomial {
 public:
  using Drawer = std::function<FormPtr(std::uint64_t seed)>;

  ProbPolynomial(std::size_t arity, std::int64_t degree_bound, Drawer drawer,
                 std::optional<Support> support = std::nullopt);

  std::size_t arity() const noexcept { return arity_; }
  std::int64_t degree_bound() const noexcept { return degree_bound_; }
  const std::optional<Support>& support() const noexcept { return support_; }

  FormPtr draw(std::uint64_t seed) const;
  /// Throws VerificationError if the sample exceeds the degree bound.
  Polynomial sample(std::uint64_t seed) const;

 private:
  std::size_t arity_;
  std::int64_t degree_bound_;
  Drawer drawer_;
  std::optional<Support> support_;
};

ProbPolynomial lift_exact(const Polynomial& p);

/// Finite mixture; probabilities must be positive and sum to exactly 1.
/// Sampling picks entry k with probability exactly probability_k.
ProbPolynomial from_support(std::size_t arity, std::vector<std::pair<Polynomial, Rational>> entries);

/// Pr[Bin(l, eps) >= (l+1)/2] for odd l.
Rational majority_tail(std::size_t l, const Rational& eps);
/// Smallest odd l with majority_tail(l, eps) <= delta.
std::size_t majority_copies(const Rational& eps, const Rational& delta);

/// Majority of l independent copies, l = majority_copies(eps, delta).
/// When delta >= eps the input is returned unchanged.
ProbPolynomial reduce_error(const ProbPolynomial& pp, const Rational& eps, const Rational& delta);

/// Draws the outer with derive_seed(seed, 0) and inner k with derive_seed(seed, k + 1).
ProbPolynomial compose_prob(const ProbPolynomial& outer, std::span<const ProbPolynomial> inners);

/// Applies literal substitution to every draw; the degree bound is kept.
ProbPolynomial substitute_prob(const ProbPolynomial& pp, std::vector<Literal> literals,
                               std::size_t target_arity);
/// Stars become the new variables in ascending order.
ProbPolynomial restrict_prob(const ProbPolynomial& pp, const Restriction& rho);
/// Fixed coordinates are substituted but the arity is unchanged.
ProbPolynomial restrict_prob_keep_arity(const ProbPolynomial& pp, const Restriction& rho);
ProbPolynomial project_prob(const ProbPolynomial& pp, const Projection& nu);
/// x -> x xor shift.
ProbPolynomial shift_prob(const ProbPolynomial& pp, const BitVector& shift);
/// 1 - P.
ProbPolynomial complement_prob(const ProbPolynomial& pp);

// Error measurement.

enum class ErrorMode : std::uint8_t { Exact, MonteCarlo };

std::string to_string(ErrorMode mode);

struct ScanConfig {
  std::uint64_t trials = 10000;
  std::uint64_t seed0 = 0;
  double confidence = 0.999;
  unsigned jobs = 0;
};

/// Two-sided Hoeffding radius sqrt(ln(2 / (1 - confidence)) / (2 trials)).
double hoeffding_radius(std::uint64_t trials, double confidence);

struct ErrorEntry {
  BitVector input;
  ErrorMode mode = ErrorMode::Exact;
  Rational exact;               ///< exact mode only
  std::uint64_t trials = 0;     ///< Monte Carlo only
  std::uint64_t failures = 0;   ///< Monte Carlo only
  double estimate = 0.0;
  double radius = 0.0;

  /// estimate <= bound + radius (exact mode compares the rational).
  bool within(const Rational& bound) const;
};

struct ErrorReport {
  std::vector<ErrorEntry> entries;
  ErrorMode mode = ErrorMode::Exact;
  std::int64_t degree_bound = 0;
  std::uint64_t seed0 = 0;
  double confidence = 0.0;

  double max_error() const;
  bool within(const Rational& bound) const;
};

nlohmann::json to_json(const ErrorReport& report);

std::vector<BitVector> all_inputs(std::size_t n);

ErrorEntry error_at(const ProbPolynomial& pp, const BooleanFunction& f, const BitVector& a,
                    ErrorMode mode, const ScanConfig& config = {});

/// Error of pp against `expected[k]` at `inputs[k]`; one draw per seed is
/// shared by all inputs.
ErrorReport error_scan(const ProbPolynomial& pp, std::span<const BitVector> inputs,
                       std::span<const bool> expected, ErrorMode mode,
                       const ScanConfig& config = {});
ErrorReport error_scan(const ProbPolynomial& pp, const BooleanFunction& f,
                       std::span<const BitVector> inputs, ErrorMode mode,
                       const ScanConfig& config = {});

/// Builds a Monte Carlo report from per-input failure counts.
ErrorReport report_from_counts(std::span<const BitVector> inputs,
                               std::span<const std::uint64_t> failures,
                               const ScanConfig& config, std::int64_t degree_bound);

}  // namespace pdeglab
