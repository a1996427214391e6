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

#include "pdeglab/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pdeglab/error.hpp"

namespace pdeglab {

namespace {

void check_arity(std::size_t n) {
  if (n > kMaxArity) {
    throw CapExceeded("BooleanFunction: arity " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxArity));
  }
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw PreconditionError("cannot parse " + std::string(what) + " from '" + std::string(text) +
                            "'");
  }
  return value;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BooleanFunction::BooleanFunction(std::size_t arity, bool constant_value)
    : arity_(arity), table_((check_arity(arity), std::size_t{1} << arity)) {
  if (constant_value) {
    for (std::uint64_t k = 0; k < table_size(); ++k) table_.set(k);
  }
}

BooleanFunction BooleanFunction::from_table(std::size_t arity, const BitVector& table) {
  check_arity(arity);
  if (table.size() != (std::size_t{1} << arity)) {
    throw ShapeError("BooleanFunction::from_table: table length must be 2^arity");
  }
  BooleanFunction f(arity, false);
  f.table_ = table;
  return f;
}

BooleanFunction BooleanFunction::from_rule(std::size_t arity,
                                           const std::function<bool(std::uint64_t)>& rule) {
  BooleanFunction f(arity, false);
  for (std::uint64_t k = 0; k < f.table_size(); ++k) {
    if (rule(k)) f.table_.set(k);
  }
  return f;
}

bool BooleanFunction::evaluate(const BitVector& input) const {
  if (input.size() != arity_) {
    throw ShapeError("evaluate: input length " + std::to_string(input.size()) +
                     " != arity " + std::to_string(arity_));
  }
  return value(input.to_word());
}

bool BooleanFunction::is_constant() const noexcept {
  const std::size_t ones = table_.count();
  return ones == 0 || ones == table_size();
}

BooleanFunction BooleanFunction::complement() const {
  BooleanFunction g = *this;
  for (std::uint64_t k = 0; k < table_size(); ++k) g.table_.flip(k);
  return g;
}

BooleanFunction or_function(std::size_t n) {
  return BooleanFunction::from_rule(n, [](std::uint64_t k) { return k != 0; });
}

BooleanFunction and_function(std::size_t n) {
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  return BooleanFunction::from_rule(n, [all](std::uint64_t k) { return k == all; });
}

BooleanFunction xor_function(std::size_t n) {
  return BooleanFunction::from_rule(n, [](std::uint64_t k) { return std::popcount(k) % 2 == 1; });
}

BooleanFunction majority_function(std::size_t n) {
  return BooleanFunction::from_rule(
      n, [n](std::uint64_t k) { return 2 * static_cast<std::size_t>(std::popcount(k)) > n; });
}

BooleanFunction dictator_function(std::size_t n, std::size_t variable) {
  if (variable >= n) throw ShapeError("dictator_function: variable out of range");
  return BooleanFunction::from_rule(n, [variable](std::uint64_t k) { return (k >> variable) & 1U; });
}

BooleanFunction addressing_function(std::size_t r) {
  if (r >= 5 || r + (std::size_t{1} << r) > kMaxArity) {
    throw CapExceeded("addressing_function: r = " + std::to_string(r) +
                      " exceeds the truth-table cap");
  }
  const std::size_t n = r + (std::size_t{1} << r);
  const std::uint64_t address_mask = (std::uint64_t{1} << r) - 1;
  return BooleanFunction::from_rule(n, [r, address_mask](std::uint64_t k) {
    const std::uint64_t address = k & address_mask;
    return (k >> (r + address)) & 1U;
  });
}

BooleanFunction parse_named_function(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw PreconditionError("function spec '" + std::string(spec) + "' must look like NAME:<size>");
  }
  const std::string_view name = spec.substr(0, colon);
  const std::size_t size = parse_size(spec.substr(colon + 1), "function size");
  if (name == "OR") return or_function(size);
  if (name == "AND") return and_function(size);
  if (name == "MAJ") return majority_function(size);
  if (name == "XOR") return xor_function(size);
  if (name == "ADDR") return addressing_function(size);
  throw PreconditionError("unknown function family '" + std::string(name) + "'");
}

std::string to_hex(const BooleanFunction& f) {
  const std::uint64_t bits = f.table_size();
  const std::uint64_t digits = (bits + 3) / 4;
  std::string out(digits, '0');
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::uint64_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint64_t k = 4 * d + b;
      if (k < bits && f.value(k)) v |= 1U << b;
    }
    out[digits - 1 - d] = kDigits[v];
  }
  return out;
}

std::string to_truth_table_text(const BooleanFunction& f) {
  return "n=" + std::to_string(f.arity()) + "\n" + to_hex(f) + "\n";
}

BooleanFunction from_truth_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_truth_table(in);
}

void write_truth_table(std::ostream& out, const BooleanFunction& f) {
  out << to_truth_table_text(f);
}

BooleanFunction read_truth_table(std::istream& in) {
  std::string header;
  std::string hex;
  if (!std::getline(in, header) || !std::getline(in, hex)) {
    throw PreconditionError("truth table: expected two lines");
  }
  const std::string_view h = trim(header);
  if (h.substr(0, 2) != "n=") throw PreconditionError("truth table: first line must be n=<arity>");
  const std::size_t n = parse_size(h.substr(2), "arity");
  check_arity(n);
  const std::string_view digits = trim(hex);
  const std::uint64_t bits = std::uint64_t{1} << n;
  const std::uint64_t expected = (bits + 3) / 4;
  if (digits.size() != expected) {
    throw ShapeError("truth table: expected " + std::to_string(expected) + " hex digits, got " +
                     std::to_string(digits.size()));
  }
  BitVector table(bits);
  for (std::uint64_t d = 0; d < expected; ++d) {
    const int v = hex_value(digits[expected - 1 - d]);
    if (v < 0) throw PreconditionError("truth table: invalid hex digit");
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint64_t k = 4 * d + b;
      if ((v >> b) & 1) {
        if (k >= bits) throw PreconditionError("truth table: bits set beyond 2^n");
        table.set(k);
      }
    }
  }
  return BooleanFunction::from_table(n, table);
}

std::vector<std::size_t> Restriction::stars() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] == Fix::Star) out.push_back(i);
  }
  return out;
}

BitVector Restriction::apply_in_place(BitVector input) const {
  if (input.size() != map.size()) throw ShapeError("Restriction: length mismatch");
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] == Fix::Zero) input.set(i, false);
    if (map[i] == Fix::One) input.set(i, true);
  }
  return input;
}

Projection Projection::identity(std::size_t n) {
  Projection nu;
  nu.target_arity = n;
  nu.map.resize(n);
  for (std::size_t i = 0; i < n; ++i) nu.map[i] = i;
  return nu;
}

void Projection::validate() const {
  for (std::size_t image : map) {
    if (image >= target_arity) throw ShapeError("Projection: image outside target range");
  }
}

BitVector Projection::pull_back(const BitVector& target_input) const {
  if (target_input.size() != target_arity) throw ShapeError("Projection: target length mismatch");
  BitVector source(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) source.set(i, target_input.test(map[i]));
  return source;
}

BooleanFunction restrict(const BooleanFunction& f, const Restriction& rho) {
  if (rho.size() != f.arity()) throw ShapeError("restrict: restriction length != arity");
  const auto stars = rho.stars();
  std::uint64_t base = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho.map[i] == Fix::One) base |= std::uint64_t{1} << i;
  }
  return BooleanFunction::from_rule(stars.size(), [&](std::uint64_t y) {
    std::uint64_t x = base;
    for (std::size_t j = 0; j < stars.size(); ++j) {
      if ((y >> j) & 1U) x |= std::uint64_t{1} << stars[j];
    }
    return f.value(x);
  });
}

BooleanFunction restrict_keep_arity(const BooleanFunction& f, const Restriction& rho) {
  if (rho.size() != f.arity()) throw ShapeError("restrict: restriction length != arity");
  std::uint64_t keep = 0;
  std::uint64_t ones = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho.map[i] == Fix::Star) keep |= std::uint64_t{1} << i;
    if (rho.map[i] == Fix::One) ones |= std::uint64_t{1} << i;
  }
  return BooleanFunction::from_rule(f.arity(),
                                    [&](std::uint64_t x) { return f.value((x & keep) | ones); });
}

BooleanFunction project(const BooleanFunction& f, const Projection& nu) {
  if (nu.map.size() != f.arity()) throw ShapeError("project: projection length != arity");
  nu.validate();
  return BooleanFunction::from_rule(nu.target_arity, [&](std::uint64_t y) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < nu.map.size(); ++i) {
      if ((y >> nu.map[i]) & 1U) x |= std::uint64_t{1} << i;
    }
    return f.value(x);
  });
}

BooleanFunction xor_shift(const BooleanFunction& f, const BitVector& shift) {
  if (shift.size() != f.arity()) throw ShapeError("xor_shift: shift length != arity");
  const std::uint64_t s = shift.to_word();
  return BooleanFunction::from_rule(f.arity(), [&](std::uint64_t x) { return f.value(x ^ s); });
}

std::vector<std::size_t> influential_variables(const BooleanFunction& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t x = 0; x < f.table_size(); ++x) {
      if ((x & bit) == 0 && f.value(x) != f.value(x | bit)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool is_truly_variate(const BooleanFunction& f) {
  return influential_variables(f).size() == f.arity();
}

std::size_t sensitivity_at(const BooleanFunction& f, std::uint64_t input) {
  std::size_t s = 0;
  const bool v = f.value(input);
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (f.value(input ^ (std::uint64_t{1} << i)) != v) ++s;
  }
  return s;
}

SensitivityResult sensitivity(const BooleanFunction& f) {
  SensitivityResult best;
  for (std::uint64_t x = 0; x < f.table_size(); ++x) {
    const std::size_t s = sensitivity_at(f, x);
    if (s > best.sensitivity) best = {s, x};
  }
  return best;
}

std::size_t block_sensitivity_at(const BooleanFunction& f, std::uint64_t input) {
  const std::size_t n = f.arity();
  if (n > kBlockSensitivityMaxArity) {
    throw CapExceeded("block_sensitivity: arity exceeds cap " +
                      std::to_string(kBlockSensitivityMaxArity));
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const bool v = f.value(input);

  // minimal sensitive blocks, bucketed by their lowest element
  std::vector<std::uint8_t> covered(subsets, 0);  // some nonempty subset of B is sensitive
  std::vector<std::vector<std::uint64_t>> by_lowest(n);
  for (std::uint64_t b = 1; b < subsets; ++b) {
    bool below = false;
    for (std::uint64_t rest = b; rest != 0; rest &= rest - 1) {
      const std::uint64_t sub = b & ~(rest & (~rest + 1));
      if (sub != 0 && covered[sub]) {
        below = true;
        break;
      }
    }
    const bool sensitive = f.value(input ^ b) != v;
    covered[b] = below || sensitive;
    if (sensitive && !below) by_lowest[static_cast<std::size_t>(std::countr_zero(b))].push_back(b);
  }

  std::vector<std::int8_t> memo(subsets, -1);
  std::function<int(std::uint64_t)> pack = [&](std::uint64_t avail) -> int {
    if (avail == 0) return 0;
    if (memo[avail] >= 0) return memo[avail];
    const std::uint64_t low = avail & (~avail + 1);
    int best = pack(avail & ~low);
    for (std::uint64_t block : by_lowest[static_cast<std::size_t>(std::countr_zero(low))]) {
      if ((block & ~avail) == 0) best = std::max(best, 1 + pack(avail & ~block));
    }
    memo[avail] = static_cast<std::int8_t>(best);
    return best;
  };
  return static_cast<std::size_t>(pack(subsets - 1));
}

std::size_t block_sensitivity(const BooleanFunction& f) {
  std::size_t best = 0;
  for (std::uint64_t x = 0; x < f.table_size(); ++x) {
    best = std::max(best, block_sensitivity_at(f, x));
  }
  return best;
}

}  // namespace pdeglab
