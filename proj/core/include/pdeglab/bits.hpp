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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdeglab {

/// Dynamically sized bit vector used for Boolean inputs and variable sets.
///
/// Bit i is variable i (0-based). Bits past size() are kept zero, so
/// equality and hashing can work on the word array directly.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  /// Low `size` bits of `word`; size must be at most 64.
  static BitVector from_word(std::uint64_t word, std::size_t size);
  /// Parses a string of '0'/'1' characters, character i being bit i.
  static BitVector from_string(std::string_view bits);
  static BitVector from_indices(std::size_t size, std::span<const std::size_t> indices);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  bool operator[](std::size_t i) const noexcept { return test(i); }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept;
  std::size_t intersect_count(const BitVector& other) const noexcept;
  bool is_subset_of(const BitVector& other) const noexcept;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  /// Value as an integer; requires size() <= 64.
  std::uint64_t to_word() const;
  /// Indices of set bits in increasing order.
  std::vector<std::size_t> indices() const;
  /// '0'/'1' string, character i being bit i.
  std::string to_string() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t w = a.words_.size(); w-- > 0;) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

BitVector operator^(BitVector a, const BitVector& b);
BitVector operator&(BitVector a, const BitVector& b);
BitVector operator|(BitVector a, const BitVector& b);

/// One SplitMix64 step: advances `state` and returns the next output.
std::uint64_t splitmix64_next(std::uint64_t& state) noexcept;

/// Child seed derivation: the (index+1)-th SplitMix64 output of `seed`.
///
/// All randomness in the library flows through this function so that a
/// parent seed determines every descendant draw.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Deterministic stream of 64-bit words from a seed (SplitMix64).
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept { return splitmix64_next(state_); }
  bool next_bit() noexcept { return (next() >> 63) != 0; }
  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) noexcept;
  /// True with probability exactly 2^-k.
  bool one_in_pow2(unsigned k) noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace pdeglab

template <>
struct std::hash<pdeglab::BitVector> {
  std::size_t operator()(const pdeglab::BitVector& v) const noexcept;
};
