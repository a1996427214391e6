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
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdeglab/bits.hpp"
#include "pdeglab/boolean_function.hpp"
#include "pdeglab/decision_tree.hpp"
#include "pdeglab/error.hpp"

namespace pdeglab {

/// No addressed variable survived the projection; retry with another seed.
class EmptyAddressedSet : public Error {
 public:
  using Error::Error;
};

struct PathStep {
  std::size_t variable = 0;
  bool value = false;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Root-to-leaf path: the queried variables with the values taken, then the leaf.
struct Path {
  std::vector<PathStep> steps;
  bool leaf = false;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Two paths that split at the first node querying `variable` and end in
/// leaves 0 and 1, agreeing on every other shared variable.
struct PathPair {
  std::size_t variable = 0;
  std::size_t node = 0;  ///< split node
  Path zero;             ///< ends in leaf 0
  Path one;              ///< ends in leaf 1
  bool swapped = false;  ///< zero goes through the 1-child of the split node
  std::vector<std::size_t> others;  ///< other variables on either path, ascending
};

/// One pair per queried variable. Requires a reduced tree of arity <= kMaxArity.
std::map<std::size_t, PathPair> path_pairs(const DecisionTree& tree);

/// Greedy minimum-degree independent set of the conflict graph
/// {i, j} : j in P_i or i in P_j. Checks size >= vertices / (4 depth + 1).
std::vector<std::size_t> independent_set(const std::map<std::size_t, PathPair>& pairs,
                                         std::size_t depth);

struct ProjectionSample {
  Projection nu;
  std::size_t r = 0;
  std::vector<std::size_t> good;  ///< good[j] is sent to r + j
  std::size_t attempts = 0;
  std::size_t t() const noexcept { return good.size(); }
};

inline constexpr std::size_t kProjectionRetryCap = 64;

/// r = 10 depth^2. Attempt k draws nu' from derive_seed(seed, k), one
/// uniform value in [r) per variable outside Z' in ascending order.
/// Accepts when at least ceil(|Z'| / 2) members of Z' are good; bad ones go
/// to variable 0.
ProjectionSample sample_projection(std::size_t arity, const std::vector<std::size_t>& z_prime,
                                   const std::map<std::size_t, PathPair>& pairs,
                                   std::size_t depth, std::uint64_t seed,
                                   std::size_t retry_cap = kProjectionRetryCap);

/// Relabels queries through nu; re-queries of a fixed target variable follow
/// the fixed value.
DecisionTree project_tree(const DecisionTree& tree, const Projection& nu);

/// Walks `tree` under the partial assignment; every queried variable must be assigned.
Path walk_tree(const DecisionTree& tree, const std::map<std::size_t, bool>& assignment);

struct PseudoaddressingCertificate {
  std::size_t r = 0;
  std::size_t depth = 0;
  BooleanFunction f;           ///< source function
  DecisionTree source_tree;    ///< reduced tree for f
  DecisionTree tree;           ///< projected tree over r + t variables
  Projection nu;
  std::vector<std::size_t> z_prime;
  std::vector<std::size_t> good;
  std::vector<PathPair> pairs;  ///< pairs[j] for z_j = variable r + j of `tree`
  std::size_t attempts = 0;
  std::size_t independent_bound = 0;  ///< ceil(vertices / (4 depth + 1))

  std::size_t t() const noexcept { return good.size(); }
};

PseudoaddressingCertificate extract_pseudoaddressing(const BooleanFunction& f,
                                                     std::uint64_t seed);
/// Same pipeline from a given reduced tree.
PseudoaddressingCertificate extract_pseudoaddressing_from_tree(const DecisionTree& tree,
                                                               std::uint64_t seed);

/// Checks the tree against project(f, nu) on the image variables and P1/P2
/// for every pair. `reason` receives the first failure.
bool verify_certificate(const PseudoaddressingCertificate& cert, std::string* reason = nullptr);

/// F: the certificate tree with z_j fixed to b_j, over the r y-variables.
struct RestrictedRandomFunction {
  DecisionTree tree;
  std::vector<BitVector> points;  ///< a^(j), free coordinates 0
  BitVector b;
  BitVector polarity;             ///< F(a^(j)) = b_j xor polarity_j

  bool evaluate(const BitVector& y) const { return tree.evaluate(y); }
  bool value_at(std::size_t j) const { return tree.evaluate(points.at(j)); }
};

RestrictedRandomFunction random_restriction_F(const PseudoaddressingCertificate& cert,
                                              std::uint64_t seed);

struct RestrictionStatistics {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> ones;                     ///< F(a^(j)) = 1
  std::vector<std::vector<std::uint64_t>> agreements;  ///< F(a^(j)) = F(a^(k))
};

RestrictionStatistics restriction_statistics(const PseudoaddressingCertificate& cert,
                                             std::uint64_t trials, std::uint64_t seed0,
                                             unsigned jobs = 0);

/// Hand-built depth-4 tree on y_1..y_5 (variables 0..4) and z_1..z_5 (5..9).
DecisionTree sample_addressing_tree();

nlohmann::json to_json(const DecisionTree& tree);
nlohmann::json to_json(const Path& path);
nlohmann::json to_json(const PathPair& pair);
nlohmann::json to_json(const PseudoaddressingCertificate& cert);

}  // namespace pdeglab
