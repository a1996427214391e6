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

#include <gtest/gtest.h>

#include <set>
#include <unordered_set>

#include "pdeglab/bits.hpp"

namespace pdeglab {
namespace {

TEST(BitVector, StringRoundTripIsLittleEndian) {
  const auto v = BitVector::from_string("1101");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_TRUE(v.test(0));
  EXPECT_TRUE(v.test(1));
  EXPECT_FALSE(v.test(2));
  EXPECT_TRUE(v.test(3));
  EXPECT_EQ(v.to_word(), 0b1011u);
  EXPECT_EQ(v.to_string(), "1101");
}

TEST(BitVector, WordAndIndices) {
  const auto v = BitVector::from_word(0b100101, 6);
  EXPECT_EQ(v.count(), 3u);
  EXPECT_EQ(v.indices(), (std::vector<std::size_t>{0, 2, 5}));
  const std::size_t idx[] = {0, 2, 5};
  EXPECT_EQ(BitVector::from_indices(6, idx), v);
}

TEST(BitVector, WideVectorsCrossWordBoundaries) {
  BitVector a(130), b(130);
  a.set(0);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  EXPECT_EQ(a.intersect_count(b), 1u);
  EXPECT_EQ((a | b).count(), 4u);
  EXPECT_EQ((a ^ b).count(), 3u);
  EXPECT_EQ((a & b).indices(), (std::vector<std::size_t>{64}));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_TRUE((a & b).is_subset_of(a));
  a.flip(129);
  EXPECT_FALSE(a.test(129));
}

TEST(BitVector, OrderingAndHash) {
  const auto a = BitVector::from_word(3, 4);
  const auto b = BitVector::from_word(4, 4);
  EXPECT_LT(a, b);
  std::unordered_set<BitVector> set{a, b, a};
  EXPECT_EQ(set.size(), 2u);
}

TEST(Seeds, DeriveSeedIsDeterministicAndSpread) {
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 20; ++s) {
    for (std::uint64_t i = 0; i < 20; ++i) seen.insert(derive_seed(s, i));
  }
  EXPECT_EQ(seen.size(), 400u);
}

TEST(Seeds, DeriveSeedMatchesSplitMixStream) {
  std::uint64_t state = 99;
  splitmix64_next(state);
  const std::uint64_t second = splitmix64_next(state);
  EXPECT_EQ(derive_seed(99, 1), second);
}

TEST(SeedStream, UniformStaysInRangeAndCoversIt) {
  SeedStream s(1);
  std::vector<int> hits(7, 0);
  for (int k = 0; k < 7000; ++k) {
    const auto u = s.uniform(7);
    ASSERT_LT(u, 7u);
    ++hits[u];
  }
  for (int h : hits) EXPECT_NEAR(h, 1000, 150);
}

TEST(SeedStream, OneInPow2Frequencies) {
  SeedStream s(5);
  int zero = 0, three = 0;
  for (int k = 0; k < 16000; ++k) {
    zero += s.one_in_pow2(0);
    three += s.one_in_pow2(3);
  }
  EXPECT_EQ(zero, 16000);
  EXPECT_NEAR(three, 2000, 200);
}

}  // namespace
}  // namespace pdeglab
