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

#include <algorithm>
#include <set>

#include "pdeglab/boolean_function.hpp"
#include "pdeglab/decision_tree.hpp"
#include "pdeglab/error.hpp"
#include "pdeglab/prob_polynomial.hpp"
#include "pdeglab/pseudoaddressing.hpp"

namespace pdeglab {
namespace {

TEST(PathPairs, OnePairPerQueriedVariable) {
  const auto tree = reduced_tree(min_depth_tree(addressing_function(2)));
  const auto pairs = path_pairs(tree);
  EXPECT_EQ(pairs.size(), 6u);
  for (const auto& [v, pair] : pairs) {
    EXPECT_EQ(pair.variable, v);
    EXPECT_FALSE(pair.zero.leaf);
    EXPECT_TRUE(pair.one.leaf);
    EXPECT_LE(pair.zero.steps.size(), tree.depth());
    EXPECT_LE(pair.one.steps.size(), tree.depth());
    std::map<std::size_t, bool> z, o;
    for (const auto& st : pair.zero.steps) z[st.variable] = st.value;
    for (const auto& st : pair.one.steps) o[st.variable] = st.value;
    EXPECT_NE(z.at(v), o.at(v));
    EXPECT_FALSE(std::count(pair.others.begin(), pair.others.end(), v));
    EXPECT_EQ(walk_tree(tree, z), pair.zero);
    EXPECT_EQ(walk_tree(tree, o), pair.one);
  }
}

TEST(PathPairs, RejectsUnreducedTrees) {
  DecisionTree t(2);
  const auto l0 = t.add_leaf(false);
  const auto l1 = t.add_leaf(true);
  t.set_root(t.add_query(0, t.add_query(1, l1, l1), l0));
  EXPECT_THROW(path_pairs(t), PreconditionError);
}

TEST(IndependentSet, StarGraphPicksLeaves) {
  std::map<std::size_t, PathPair> pairs;
  for (std::size_t v = 0; v < 5; ++v) {
    PathPair p;
    p.variable = v;
    if (v == 0) p.others = {1, 2, 3, 4};
    pairs.emplace(v, p);
  }
  EXPECT_EQ(independent_set(pairs, 1), (std::vector<std::size_t>{1, 2, 3, 4}));
}

TEST(IndependentSet, CliqueKeepsOneVertex) {
  std::map<std::size_t, PathPair> pairs;
  for (std::size_t v = 0; v < 4; ++v) {
    PathPair p;
    p.variable = v;
    for (std::size_t u = 0; u < 4; ++u) {
      if (u != v) p.others.push_back(u);
    }
    pairs.emplace(v, p);
  }
  EXPECT_EQ(independent_set(pairs, 1).size(), 1u);
}

TEST(Projection, IdentityProjectionKeepsTheTree) {
  const auto tree = sample_addressing_tree();
  EXPECT_TRUE(project_tree(tree, Projection::identity(tree.arity())).isomorphic_to(tree));
}

TEST(Projection, MergedVariablesFollowFixedValues) {
  // x0 ? (x1 ? 1 : 0) : 0 with both sent to one variable is the dictator
  DecisionTree t(2);
  const auto l0 = t.add_leaf(false);
  const auto l1 = t.add_leaf(true);
  t.set_root(t.add_query(0, l0, t.add_query(1, l0, l1)));
  const auto p = project_tree(t, Projection{{0, 0}, 1});
  EXPECT_EQ(p.depth(), 1u);
  EXPECT_EQ(tree_to_function(p), dictator_function(1, 0));
}

TEST(Projection, SampleSendsGoodVariablesPastR) {
  const auto tree = reduced_tree(min_depth_tree(addressing_function(2)));
  const auto pairs = path_pairs(tree);
  const auto z = independent_set(pairs, tree.depth());
  const auto sample = sample_projection(tree.arity(), z, pairs, tree.depth(), 3);
  EXPECT_EQ(sample.r, 90u);
  EXPECT_GE(2 * sample.t(), z.size());
  for (std::size_t j = 0; j < sample.t(); ++j) {
    EXPECT_EQ(sample.nu.map[sample.good[j]], 90u + j);
  }
  EXPECT_THROW(sample_projection(tree.arity(), {}, pairs, tree.depth(), 3), EmptyAddressedSet);
}

TEST(Certificate, AddressingFunctionVerifies) {
  const auto cert = extract_pseudoaddressing(addressing_function(2), 1);
  EXPECT_EQ(cert.depth, 3u);
  EXPECT_EQ(cert.r, 90u);
  EXPECT_GE(2 * cert.t(), cert.z_prime.size());
  EXPECT_GE(cert.z_prime.size(), cert.independent_bound);
  std::string reason;
  EXPECT_TRUE(verify_certificate(cert, &reason)) << reason;
  EXPECT_EQ(extract_pseudoaddressing(addressing_function(2), 1).nu.map, cert.nu.map);
}

TEST(Certificate, SampleTreeVerifies) {
  const auto cert = extract_pseudoaddressing_from_tree(sample_addressing_tree(), 2);
  EXPECT_EQ(cert.depth, 4u);
  EXPECT_EQ(cert.r, 160u);
  EXPECT_TRUE(verify_certificate(cert));
}

TEST(Certificate, TamperingIsDetected) {
  const auto cert = extract_pseudoaddressing(addressing_function(2), 1);
  {
    auto bad = cert;
    std::swap(bad.pairs[0].zero, bad.pairs[0].one);
    EXPECT_FALSE(verify_certificate(bad));
  }
  {
    auto bad = cert;
    bad.nu.map[bad.good[0]] = 0;
    EXPECT_FALSE(verify_certificate(bad));
  }
  {
    auto bad = cert;
    bad.f = bad.f.complement();
    EXPECT_FALSE(verify_certificate(bad));
  }
  {
    auto bad = cert;
    bad.pairs[0].one.steps.back().value = !bad.pairs[0].one.steps.back().value;
    EXPECT_FALSE(verify_certificate(bad));
  }
}

TEST(Certificate, ConstantOrDegenerateFunctionsAreRejected) {
  EXPECT_THROW(extract_pseudoaddressing(dictator_function(3, 0), 1), PreconditionError);
}

TEST(RestrictedFunction, DictatorFollowsB) {
  const auto cert = extract_pseudoaddressing(dictator_function(1, 0), 4);
  ASSERT_EQ(cert.t(), 1u);
  EXPECT_EQ(cert.r, 10u);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto F = random_restriction_F(cert, seed);
    EXPECT_EQ(F.value_at(0), F.b.test(0) != F.polarity.test(0));
  }
}

TEST(RestrictedFunction, FlippingBFlipsValue) {
  const auto cert = extract_pseudoaddressing(addressing_function(2), 1);
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto F = random_restriction_F(cert, seed);
    for (std::size_t j = 0; j < cert.t(); ++j) {
      EXPECT_EQ(F.value_at(j), F.b.test(j) != F.polarity.test(j));
    }
    seen.insert(F.b.to_string());
  }
  EXPECT_GT(seen.size(), 4u);
}

TEST(RestrictedFunction, StatisticsAreBalanced) {
  const auto cert = extract_pseudoaddressing(addressing_function(2), 1);
  const auto stats = restriction_statistics(cert, 4000, 0);
  const double radius = hoeffding_radius(4000, 0.999);
  for (std::size_t j = 0; j < cert.t(); ++j) {
    EXPECT_NEAR(stats.ones[j] / 4000.0, 0.5, radius);
    EXPECT_EQ(stats.agreements[j][j], 4000u);
    for (std::size_t k = j + 1; k < cert.t(); ++k) {
      EXPECT_NEAR(stats.agreements[j][k] / 4000.0, 0.5, radius);
    }
  }
}

TEST(Json, CertificateHasCoreFields) {
  const auto j = to_json(extract_pseudoaddressing(addressing_function(2), 1));
  EXPECT_EQ(j["r"], 90);
  EXPECT_TRUE(j.contains("tree"));
  EXPECT_TRUE(j.contains("pairs"));
}

}  // namespace
}  // namespace pdeglab
