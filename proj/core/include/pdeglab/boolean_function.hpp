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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pdeglab/bits.hpp"

namespace pdeglab {

/// Largest arity for which a truth table is materialized.
inline constexpr std::size_t kMaxArity = 26;

/// Total Boolean function {0,1}^n -> {0,1} stored as a truth table.
///
/// Table bit k holds the value at the input whose binary expansion is k,
/// with variable 0 as the least significant bit.
class BooleanFunction {
 public:
  BooleanFunction() : BooleanFunction(0, false) {}
  BooleanFunction(std::size_t arity, bool constant_value);

  static BooleanFunction from_table(std::size_t arity, const BitVector& table);
  static BooleanFunction from_rule(std::size_t arity,
                                   const std::function<bool(std::uint64_t)>& rule);

  std::size_t arity() const noexcept { return arity_; }
  std::uint64_t table_size() const noexcept { return std::uint64_t{1} << arity_; }

  bool value(std::uint64_t index) const noexcept { return table_.test(index); }
  bool evaluate(const BitVector& input) const;
  const BitVector& table() const noexcept { return table_; }

  bool is_constant() const noexcept;
  BooleanFunction complement() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  std::size_t arity_;
  BitVector table_;
};

// Named families.
BooleanFunction or_function(std::size_t n);
BooleanFunction and_function(std::size_t n);
BooleanFunction xor_function(std::size_t n);
/// 1 iff strictly more than half of the inputs are 1.
BooleanFunction majority_function(std::size_t n);
BooleanFunction dictator_function(std::size_t n, std::size_t variable);
/// Addr_r on r + 2^r variables: addressing bits 0..r-1 (bit 0 least
/// significant) select addressed bit r + a.
BooleanFunction addressing_function(std::size_t r);

/// Parses `OR:<n>`, `AND:<n>`, `MAJ:<n>`, `XOR:<n>`, `ADDR:<r>`.
BooleanFunction parse_named_function(std::string_view spec);

/// Truth-table text format: `n=<arity>` then ceil(2^n/4) hex digits, most
/// significant digit first.
std::string to_truth_table_text(const BooleanFunction& f);
BooleanFunction from_truth_table_text(std::string_view text);
void write_truth_table(std::ostream& out, const BooleanFunction& f);
BooleanFunction read_truth_table(std::istream& in);
std::string to_hex(const BooleanFunction& f);

enum class Fix : std::uint8_t { Zero, One, Star };

/// Partial assignment [n] -> {0, 1, *}.
struct Restriction {
  std::vector<Fix> map;

  std::size_t size() const noexcept { return map.size(); }
  std::vector<std::size_t> stars() const;
  /// Sets every Zero/One position of `input` (length n) to its fixed value.
  BitVector apply_in_place(BitVector input) const;
};

/// Variable identification map [n] -> [m].
struct Projection {
  std::vector<std::size_t> map;
  std::size_t target_arity = 0;

  static Projection identity(std::size_t n);
  void validate() const;
  /// y o nu: the source input induced by a target input y.
  BitVector pull_back(const BitVector& target_input) const;
};

BooleanFunction restrict(const BooleanFunction& f, const Restriction& rho);
/// f restricted by rho but still viewed as a function of all n variables.
BooleanFunction restrict_keep_arity(const BooleanFunction& f, const Restriction& rho);
BooleanFunction project(const BooleanFunction& f, const Projection& nu);
BooleanFunction xor_shift(const BooleanFunction& f, const BitVector& shift);

/// Indices i such that flipping bit i changes f somewhere.
std::vector<std::size_t> influential_variables(const BooleanFunction& f);
bool is_truly_variate(const BooleanFunction& f);

struct SensitivityResult {
  std::size_t sensitivity = 0;
  std::uint64_t witness = 0;  ///< lowest-index input attaining the maximum
};

std::size_t sensitivity_at(const BooleanFunction& f, std::uint64_t input);
SensitivityResult sensitivity(const BooleanFunction& f);

inline constexpr std::size_t kBlockSensitivityMaxArity = 10;
std::size_t block_sensitivity_at(const BooleanFunction& f, std::uint64_t input);
/// Exhaustive over packings of minimal sensitive blocks; arity capped.
std::size_t block_sensitivity(const BooleanFunction& f);

}  // namespace pdeglab
