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

#include "pdeglab/bits.hpp"

#include <algorithm>
#include <bit>

#include "pdeglab/error.hpp"

namespace pdeglab {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_word(std::uint64_t word, std::size_t size) {
  if (size > 64) throw ShapeError("BitVector::from_word: size exceeds 64");
  BitVector v(size);
  if (size > 0) {
    v.words_[0] = size == 64 ? word : word & ((std::uint64_t{1} << size) - 1);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ShapeError("BitVector::from_string: expected only '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  BitVector v(size);
  for (std::size_t i : indices) {
    if (i >= size) throw ShapeError("BitVector::from_indices: index out of range");
    v.set(i);
  }
  return v;
}

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::intersect_count(const BitVector& other) const noexcept {
  std::size_t c = 0;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

bool BitVector::is_subset_of(const BitVector& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw ShapeError("BitVector: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.size_ != size_) throw ShapeError("BitVector: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  if (other.size_ != size_) throw ShapeError("BitVector: size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::uint64_t BitVector::to_word() const {
  if (size_ > 64) throw ShapeError("BitVector::to_word: size exceeds 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t state = seed + index * 0x9E3779B97F4A7C15ULL;
  return splitmix64_next(state);
}

std::uint64_t SeedStream::uniform(std::uint64_t bound) noexcept {
  // Largest multiple of bound representable, for unbiased rejection.
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

bool SeedStream::one_in_pow2(unsigned k) noexcept {
  while (k >= 64) {
    if (next() != 0) return false;
    k -= 64;
  }
  if (k == 0) return true;
  return (next() & ((std::uint64_t{1} << k) - 1)) == 0;
}

}  // namespace pdeglab

std::size_t std::hash<pdeglab::BitVector>::operator()(const pdeglab::BitVector& v) const noexcept {
  std::uint64_t h = v.size();
  for (auto w : v.words()) {
    std::uint64_t s = h ^ w;
    h = pdeglab::splitmix64_next(s);
  }
  return static_cast<std::size_t>(h);
}
