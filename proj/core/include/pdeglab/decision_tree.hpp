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
#include <optional>
#include <vector>

#include "pdeglab/bits.hpp"
#include "pdeglab/boolean_function.hpp"

namespace pdeglab {

/// Binary query tree over `arity` variables with 0/1 leaves.
///
/// Nodes live in a flat arena; children are arena indices. A node with
/// `variable == kLeaf` is a leaf carrying `leaf_value`.
class DecisionTree {
 public:
  static constexpr std::size_t kLeaf = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t variable = kLeaf;
    std::size_t child[2] = {0, 0};
    bool leaf_value = false;

    bool is_leaf() const noexcept { return variable == kLeaf; }
  };

  DecisionTree() = default;
  explicit DecisionTree(std::size_t arity) : arity_(arity) {}

  std::size_t add_leaf(bool value);
  std::size_t add_query(std::size_t variable, std::size_t on_zero, std::size_t on_one);
  void set_root(std::size_t node) { root_ = node; }

  std::size_t arity() const noexcept { return arity_; }
  std::size_t root() const noexcept { return root_; }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  /// Throws unless the tree is acyclic, every variable is in range and no
  /// variable repeats on a root-to-leaf path.
  void validate() const;

  bool evaluate(const BitVector& input) const;
  bool evaluate(std::uint64_t input) const;
  std::size_t depth() const;
  std::size_t depth_from(std::size_t node) const;
  std::size_t leaf_count() const;

  /// Variables queried anywhere, ascending.
  std::vector<std::size_t> queried_variables() const;

  /// Copy of the subtree rooted at `node`, as a standalone tree.
  DecisionTree subtree(std::size_t node) const;

  /// Structural equality of the reachable trees (ignores arena layout).
  bool isomorphic_to(const DecisionTree& other) const;

 private:
  std::size_t arity_ = 0;
  std::size_t root_ = 0;
  std::vector<Node> nodes_;
};

BooleanFunction tree_to_function(const DecisionTree& tree);
/// Function computed by the subtree at `node`, over all arity() variables.
BooleanFunction subtree_function(const DecisionTree& tree, std::size_t node);

inline constexpr std::size_t kMinDepthMaxArity = 12;

/// D(f) without building the tree.
std::size_t decision_tree_depth(const BooleanFunction& f);

/// Minimum-depth tree for f, via memoized search over all restrictions of f.
/// Ties break toward the lowest variable index.
DecisionTree min_depth_tree(const BooleanFunction& f);

/// Collapses every internal node whose two children compute the same
/// function, bottom-up. Never increases depth; preserves the function.
DecisionTree reduced_tree(const DecisionTree& tree);

/// True when no internal node has children computing identical functions.
bool is_reduced(const DecisionTree& tree);

}  // namespace pdeglab
