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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace pdeglab {

/// Arbitrary-precision rational; always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p", or a decimal literal such as "0.1" or "-2.5e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form, always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

/// Bits of |num| plus bits of den, each counted as the length of its binary expansion.
std::size_t bit_size(const Rational& q);

/// num / den in canonical form.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_boolean(const Rational& q) { return q == 0 || q == 1; }

/// Exact q^k for k >= 0.
Rational pow(const Rational& q, unsigned long k);

/// Double approximation, for reporting only.
inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace pdeglab
