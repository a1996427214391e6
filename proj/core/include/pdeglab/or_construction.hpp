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
#include <vector>

#include "json.hpp"
#include "pdeglab/bits.hpp"
#include "pdeglab/boolean_function.hpp"
#include "pdeglab/prob_polynomial.hpp"
#include "pdeglab/rational.hpp"

namespace pdeglab {

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::uint64_t n);

/// Rational enclosure of e: e_lower() < e < e_upper(), 30 decimal digits.
const Rational& e_lower();
const Rational& e_upper();

/// Smallest p with (1 - 1/(2e))^p <= eps, evaluated with e replaced by
/// e_upper() (which can only increase p). Requires 0 < eps < 1.
std::size_t p_for_epsilon(const Rational& eps);

/// p independent random subsets of [s] at each scale i = 0..ceil(log2 s),
/// each element kept with probability 2^-i. Subset k belongs to scale k / p.
struct ScaledSubsetFamily {
  std::size_t s = 0;
  std::size_t p = 0;
  std::uint64_t seed = 0;
  std::vector<BitVector> subsets;

  static ScaledSubsetFamily generate(std::size_t s, std::size_t p, std::uint64_t seed);

  std::size_t scales() const noexcept { return ceil_log2(s) + 1; }
  std::size_t size() const noexcept { return subsets.size(); }
  std::size_t scale_of(std::size_t k) const noexcept { return k / p; }
};

/// 1 - prod (1 - sum_{k in S} x_k) over a fresh ScaledSubsetFamily per draw.
/// Degree bound p * (ceil(log2 n) + 1).
ProbPolynomial or_prob_poly(std::size_t n, const Rational& eps);
/// 1 - OR(1 - x): the AND of n bits with the same degree and error.
ProbPolynomial and_prob_poly(std::size_t n, const Rational& eps);

/// g(0) = 0 and g(e_j) = 1 for every j.
bool is_or_normalized(const BooleanFunction& g);

/// The restrictions that zero every variable outside one family subset.
std::vector<Restriction> or_reduction_family(const BooleanFunction& g, std::size_t p,
                                             std::uint64_t seed);

/// Disagreement of OR_l(g restricted by each family member) with OR_s, per
/// input, over family seeds seed0 .. seed0 + trials - 1.
ErrorReport or_family_scan(const BooleanFunction& g, std::size_t p,
                           std::span<const BitVector> inputs, const ScanConfig& config);

/// g(y) = [complement] f(x xor shift) with x_{sensitive[j]} = y_j and every
/// other coordinate of x equal to 0.
struct NormalizedFunction {
  BooleanFunction g;
  BooleanFunction original;
  bool complemented = false;
  BitVector shift;
  std::vector<std::size_t> sensitive;    ///< ascending; new coordinate j is original sensitive[j]
  std::vector<std::size_t> permutation;  ///< sensitive coordinates first, then the rest
  Restriction trailing;                  ///< on the shifted function: stars at `sensitive`, zeros elsewhere

  std::size_t s() const noexcept { return sensitive.size(); }
  /// Recomputes g from the provenance.
  BooleanFunction replay() const;
};

NormalizedFunction normalize_sensitive(const BooleanFunction& f);

/// The probabilistic polynomial for g induced by one for f.
ProbPolynomial normalize_prob(const NormalizedFunction& nf, const ProbPolynomial& ppf);

struct OrFromFunction {
  ProbPolynomial pp;           ///< for OR_s
  NormalizedFunction normalized;
  std::size_t family_p = 0;    ///< repetitions in the restriction family
  std::size_t l = 0;           ///< number of restrictions
  std::size_t reduce_copies = 0;
  std::int64_t outer_degree = 0;
  std::int64_t inner_degree = 0;  ///< degree bound of the given polynomial for f
};

/// Reduction from f with sensitivity s to OR_s. `eps_f` is the per-input
/// error of `ppf` (0 for an exact lift). Per draw the family uses
/// derive_seed(seed, 0), the outer OR polynomial derive_seed(seed, 1), and
/// G_i derive_seed(seed, 2 + i).
OrFromFunction or_from_function(const BooleanFunction& f, const ProbPolynomial& ppf,
                                const Rational& eps_f);

nlohmann::json family_to_json(const ScaledSubsetFamily& family);

}  // namespace pdeglab
