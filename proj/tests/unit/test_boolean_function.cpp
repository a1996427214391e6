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

#include <sstream>

#include "pdeglab/boolean_function.hpp"
#include "pdeglab/error.hpp"

namespace pdeglab {
namespace {

TEST(BooleanFunction, NamedFamilies) {
  const auto f = or_function(3);
  EXPECT_FALSE(f.value(0));
  for (std::uint64_t k = 1; k < 8; ++k) EXPECT_TRUE(f.value(k));
  const auto g = and_function(3);
  EXPECT_TRUE(g.value(7));
  EXPECT_FALSE(g.value(6));
  const auto x = xor_function(4);
  EXPECT_TRUE(x.value(0b0111));
  EXPECT_FALSE(x.value(0b0101));
  const auto m = majority_function(3);
  EXPECT_TRUE(m.value(0b011));
  EXPECT_FALSE(m.value(0b100));
  EXPECT_EQ(parse_named_function("MAJ:5"), majority_function(5));
  EXPECT_THROW(parse_named_function("FOO:3"), PreconditionError);
  EXPECT_THROW(parse_named_function("OR"), PreconditionError);
}

TEST(BooleanFunction, AddressingReadsTheAddressedCell) {
  const auto f = addressing_function(2);
  EXPECT_EQ(f.arity(), 6u);
  // address 10 (y1=0, y2=1) selects cell 2, which is variable 4
  EXPECT_TRUE(f.evaluate(BitVector::from_string("011010")));
  EXPECT_FALSE(f.evaluate(BitVector::from_string("011101")));
  EXPECT_THROW(addressing_function(5), CapExceeded);
}

TEST(BooleanFunction, TruthTableTextRoundTrip) {
  const auto f = majority_function(5);
  EXPECT_EQ(from_truth_table_text(to_truth_table_text(f)), f);
  std::stringstream ss;
  write_truth_table(ss, addressing_function(2));
  EXPECT_EQ(read_truth_table(ss), addressing_function(2));
  EXPECT_EQ(to_hex(or_function(2)), "e");
}

TEST(BooleanFunction, RestrictAndProject) {
  const auto f = majority_function(3);
  Restriction rho{{Fix::One, Fix::Star, Fix::Zero}};
  const auto g = restrict(f, rho);
  EXPECT_EQ(g.arity(), 1u);
  EXPECT_FALSE(g.value(0));
  EXPECT_TRUE(g.value(1));
  const auto h = restrict_keep_arity(f, rho);
  EXPECT_EQ(h.arity(), 3u);
  EXPECT_EQ(influential_variables(h), (std::vector<std::size_t>{1}));

  Projection nu{{0, 0, 1}, 2};
  const auto p = project(f, nu);
  EXPECT_EQ(p, dictator_function(2, 0));
  EXPECT_EQ(project(f, Projection::identity(3)), f);
}

TEST(BooleanFunction, XorShiftAndComplement) {
  const auto f = and_function(3);
  const auto g = xor_shift(f, BitVector::from_string("111"));
  EXPECT_TRUE(g.value(0));
  EXPECT_EQ(f.complement().complement(), f);
  EXPECT_TRUE(BooleanFunction(3, true).is_constant());
}

TEST(BooleanFunction, TrulyVariate) {
  EXPECT_TRUE(is_truly_variate(xor_function(4)));
  EXPECT_FALSE(is_truly_variate(dictator_function(3, 1)));
}

TEST(Sensitivity, KnownValues) {
  EXPECT_EQ(sensitivity(or_function(5)).sensitivity, 5u);
  EXPECT_EQ(sensitivity(or_function(5)).witness, 0u);
  EXPECT_EQ(sensitivity(majority_function(5)).sensitivity, 3u);
  EXPECT_EQ(sensitivity(xor_function(4)).sensitivity, 4u);
  EXPECT_EQ(sensitivity(addressing_function(2)).sensitivity, 3u);
}

TEST(BlockSensitivity, AtLeastSensitivity) {
  for (const auto& f : {or_function(4), majority_function(5), addressing_function(2)}) {
    EXPECT_GE(block_sensitivity(f), sensitivity(f).sensitivity);
  }
  EXPECT_EQ(block_sensitivity(majority_function(5)), 3u);
}

}  // namespace
}  // namespace pdeglab
