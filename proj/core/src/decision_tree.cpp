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

#include "pdeglab/decision_tree.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "pdeglab/error.hpp"

namespace pdeglab {

std::size_t DecisionTree::add_leaf(bool value) {
  Node n;
  n.leaf_value = value;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

std::size_t DecisionTree::add_query(std::size_t variable, std::size_t on_zero, std::size_t on_one) {
  if (variable >= arity_) throw ShapeError("DecisionTree: query variable out of range");
  if (on_zero >= nodes_.size() || on_one >= nodes_.size()) {
    throw ShapeError("DecisionTree: child must be added before its parent");
  }
  Node n;
  n.variable = variable;
  n.child[0] = on_zero;
  n.child[1] = on_one;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

void DecisionTree::validate() const {
  if (nodes_.empty()) throw PreconditionError("DecisionTree: empty tree");
  if (root_ >= nodes_.size()) throw PreconditionError("DecisionTree: root out of range");
  std::vector<std::uint8_t> on_path(arity_, 0);
  std::size_t steps = 0;
  const std::size_t step_limit = std::size_t{1} << std::min<std::size_t>(arity_ + 1, 40);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t id, std::size_t depth) {
    if (id >= nodes_.size()) throw PreconditionError("DecisionTree: child out of range");
    if (depth > arity_ || ++steps > step_limit) {
      throw PreconditionError("DecisionTree: path longer than arity (cycle or repeated query)");
    }
    const Node& n = nodes_[id];
    if (n.is_leaf()) return;
    if (n.variable >= arity_) throw PreconditionError("DecisionTree: variable out of range");
    if (on_path[n.variable]) {
      throw PreconditionError("DecisionTree: variable " + std::to_string(n.variable) +
                              " repeats on a root-to-leaf path");
    }
    on_path[n.variable] = 1;
    walk(n.child[0], depth + 1);
    walk(n.child[1], depth + 1);
    on_path[n.variable] = 0;
  };
  walk(root_, 0);
}

bool DecisionTree::evaluate(const BitVector& input) const {
  if (input.size() != arity_) throw ShapeError("DecisionTree::evaluate: input length mismatch");
  std::size_t id = root_;
  while (!nodes_[id].is_leaf()) id = nodes_[id].child[input.test(nodes_[id].variable) ? 1 : 0];
  return nodes_[id].leaf_value;
}

bool DecisionTree::evaluate(std::uint64_t input) const {
  std::size_t id = root_;
  while (!nodes_[id].is_leaf()) id = nodes_[id].child[(input >> nodes_[id].variable) & 1U];
  return nodes_[id].leaf_value;
}

std::size_t DecisionTree::depth_from(std::size_t node) const {
  const Node& n = nodes_.at(node);
  if (n.is_leaf()) return 0;
  return 1 + std::max(depth_from(n.child[0]), depth_from(n.child[1]));
}

std::size_t DecisionTree::depth() const { return nodes_.empty() ? 0 : depth_from(root_); }

std::size_t DecisionTree::leaf_count() const {
  std::function<std::size_t(std::size_t)> count = [&](std::size_t id) -> std::size_t {
    const Node& n = nodes_[id];
    return n.is_leaf() ? 1 : count(n.child[0]) + count(n.child[1]);
  };
  return nodes_.empty() ? 0 : count(root_);
}

std::vector<std::size_t> DecisionTree::queried_variables() const {
  std::vector<std::uint8_t> seen(arity_, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t id) {
    const Node& n = nodes_[id];
    if (n.is_leaf()) return;
    seen[n.variable] = 1;
    walk(n.child[0]);
    walk(n.child[1]);
  };
  if (!nodes_.empty()) walk(root_);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

DecisionTree DecisionTree::subtree(std::size_t node) const {
  DecisionTree out(arity_);
  std::function<std::size_t(std::size_t)> copy = [&](std::size_t id) -> std::size_t {
    const Node& n = nodes_.at(id);
    if (n.is_leaf()) return out.add_leaf(n.leaf_value);
    const std::size_t lo = copy(n.child[0]);
    const std::size_t hi = copy(n.child[1]);
    return out.add_query(n.variable, lo, hi);
  };
  out.set_root(copy(node));
  return out;
}

bool DecisionTree::isomorphic_to(const DecisionTree& other) const {
  std::function<bool(std::size_t, std::size_t)> same = [&](std::size_t a, std::size_t b) {
    const Node& x = nodes_[a];
    const Node& y = other.nodes_[b];
    if (x.is_leaf() != y.is_leaf()) return false;
    if (x.is_leaf()) return x.leaf_value == y.leaf_value;
    return x.variable == y.variable && same(x.child[0], y.child[0]) &&
           same(x.child[1], y.child[1]);
  };
  return arity_ == other.arity_ && same(root_, other.root_);
}

BooleanFunction tree_to_function(const DecisionTree& tree) {
  return subtree_function(tree, tree.root());
}

BooleanFunction subtree_function(const DecisionTree& tree, std::size_t node) {
  if (tree.arity() > kMaxArity) throw CapExceeded("subtree_function: arity exceeds cap");
  return BooleanFunction::from_rule(tree.arity(), [&](std::uint64_t x) {
    std::size_t id = node;
    while (!tree.node(id).is_leaf()) {
      id = tree.node(id).child[(x >> tree.node(id).variable) & 1U];
    }
    return tree.node(id).leaf_value;
  });
}

namespace {

// Restriction states are base-3 numbers: digit 0/1 = fixed, 2 = free.
struct RestrictionTable {
  enum : std::uint8_t { kZero = 0, kOne = 1, kMixed = 2 };

  std::size_t n;
  std::vector<std::uint64_t> pow3;
  std::vector<std::uint8_t> kind;
  std::vector<std::uint8_t> depth;

  explicit RestrictionTable(const BooleanFunction& f) : n(f.arity()), pow3(f.arity() + 1, 1) {
    for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
    const std::uint64_t states = pow3[n];
    kind.assign(states, kZero);
    depth.assign(states, 0);
    for (std::uint64_t s = 0; s < states; ++s) {
      std::uint64_t rest = s;
      std::uint64_t point = 0;
      std::size_t first_star = n;
      std::uint8_t best = 0xFF;
      bool any_star = false;
      for (std::size_t i = 0; i < n; ++i, rest /= 3) {
        const std::uint64_t digit = rest % 3;
        if (digit == 1) point |= std::uint64_t{1} << i;
        if (digit == 2) {
          if (!any_star) first_star = i;
          any_star = true;
        }
      }
      if (!any_star) {
        kind[s] = f.value(point) ? kOne : kZero;
        continue;
      }
      const std::uint64_t lo = s - 2 * pow3[first_star];
      const std::uint64_t hi = lo + pow3[first_star];
      kind[s] = (kind[lo] == kind[hi] && kind[lo] != kMixed) ? kind[lo] : std::uint8_t{kMixed};
      if (kind[s] != kMixed) continue;
      rest = s;
      for (std::size_t i = 0; i < n; ++i, rest /= 3) {
        if (rest % 3 != 2) continue;
        const std::uint64_t c0 = s - 2 * pow3[i];
        const std::uint64_t c1 = c0 + pow3[i];
        const std::uint8_t d = static_cast<std::uint8_t>(1 + std::max(depth[c0], depth[c1]));
        if (d < best) best = d;
      }
      depth[s] = best;
    }
  }

  std::uint64_t full() const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += 2 * pow3[i];
    return s;
  }

  std::size_t build(DecisionTree& tree, std::uint64_t s) const {
    if (kind[s] != kMixed) return tree.add_leaf(kind[s] == kOne);
    std::uint64_t rest = s;
    for (std::size_t i = 0; i < n; ++i, rest /= 3) {
      if (rest % 3 != 2) continue;
      const std::uint64_t c0 = s - 2 * pow3[i];
      const std::uint64_t c1 = c0 + pow3[i];
      if (1 + std::max(depth[c0], depth[c1]) == depth[s]) {
        const std::size_t lo = build(tree, c0);
        const std::size_t hi = build(tree, c1);
        return tree.add_query(i, lo, hi);
      }
    }
    throw VerificationError("min_depth_tree: inconsistent memo table");
  }
};

void check_min_depth_cap(const BooleanFunction& f) {
  if (f.arity() > kMinDepthMaxArity) {
    throw CapExceeded("min_depth_tree: arity " + std::to_string(f.arity()) + " exceeds cap " +
                      std::to_string(kMinDepthMaxArity));
  }
}

}  // namespace

std::size_t decision_tree_depth(const BooleanFunction& f) {
  check_min_depth_cap(f);
  const RestrictionTable table(f);
  return table.depth[table.full()];
}

DecisionTree min_depth_tree(const BooleanFunction& f) {
  check_min_depth_cap(f);
  const RestrictionTable table(f);
  DecisionTree tree(f.arity());
  tree.set_root(table.build(tree, table.full()));
  return tree;
}

DecisionTree reduced_tree(const DecisionTree& tree) {
  tree.validate();
  DecisionTree out(tree.arity());
  std::function<std::size_t(std::size_t)> reduce = [&](std::size_t id) -> std::size_t {
    const auto& n = tree.node(id);
    if (n.is_leaf()) return out.add_leaf(n.leaf_value);
    const std::size_t lo = reduce(n.child[0]);
    const std::size_t hi = reduce(n.child[1]);
    if (subtree_function(out, lo) == subtree_function(out, hi)) return lo;
    return out.add_query(n.variable, lo, hi);
  };
  out.set_root(reduce(tree.root()));
  return out.subtree(out.root());
}

bool is_reduced(const DecisionTree& tree) {
  std::function<bool(std::size_t)> check = [&](std::size_t id) {
    const auto& n = tree.node(id);
    if (n.is_leaf()) return true;
    if (subtree_function(tree, n.child[0]) == subtree_function(tree, n.child[1])) return false;
    return check(n.child[0]) && check(n.child[1]);
  };
  return check(tree.root());
}

}  // namespace pdeglab
