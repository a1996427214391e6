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

#include "pdeglab/pseudoaddressing.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "pdeglab/parallel.hpp"

namespace pdeglab {

namespace {

/// Follows `input` from `node` to a leaf, appending the steps.
bool follow(const DecisionTree& tree, std::size_t node, std::uint64_t input,
            std::vector<PathStep>& steps) {
  while (!tree.node(node).is_leaf()) {
    const auto& nd = tree.node(node);
    const bool v = (input >> nd.variable) & 1U;
    steps.push_back({nd.variable, v});
    node = nd.child[v ? 1 : 0];
  }
  return tree.node(node).leaf_value;
}

std::vector<std::size_t> other_variables(const PathPair& pair) {
  std::set<std::size_t> vars;
  for (const auto* path : {&pair.zero, &pair.one}) {
    for (const auto& st : path->steps) {
      if (st.variable != pair.variable) vars.insert(st.variable);
    }
  }
  return {vars.begin(), vars.end()};
}

}  // namespace

std::map<std::size_t, PathPair> path_pairs(const DecisionTree& tree) {
  tree.validate();
  if (!is_reduced(tree)) {
    throw PreconditionError("path pairs need a reduced tree (some node has equal children)");
  }
  if (tree.arity() > kMaxArity) throw CapExceeded("path pairs need arity <= 26");
  std::map<std::size_t, PathPair> out;
  std::vector<PathStep> prefix;
  const std::function<void(std::size_t)> visit = [&](std::size_t node) {
    const auto& nd = tree.node(node);
    if (nd.is_leaf()) return;
    if (!out.contains(nd.variable)) {
      const BooleanFunction t0 = subtree_function(tree, nd.child[0]);
      const BooleanFunction t1 = subtree_function(tree, nd.child[1]);
      std::uint64_t a = 0;
      while (a < t0.table_size() && t0.value(a) == t1.value(a)) ++a;
      if (a == t0.table_size()) throw PreconditionError("tree is not reduced");
      PathPair pair;
      pair.variable = nd.variable;
      pair.node = node;
      pair.swapped = t0.value(a);
      for (int c = 0; c < 2; ++c) {
        Path path;
        path.steps = prefix;
        path.steps.push_back({nd.variable, c == 1});
        path.leaf = follow(tree, nd.child[c], a, path.steps);
        (path.leaf ? pair.one : pair.zero) = std::move(path);
      }
      pair.others = other_variables(pair);
      out.emplace(nd.variable, std::move(pair));
    }
    for (int c = 0; c < 2; ++c) {
      prefix.push_back({nd.variable, c == 1});
      visit(nd.child[c]);
      prefix.pop_back();
    }
  };
  visit(tree.root());
  return out;
}

std::vector<std::size_t> independent_set(const std::map<std::size_t, PathPair>& pairs,
                                         std::size_t depth) {
  std::map<std::size_t, std::set<std::size_t>> adj;
  for (const auto& [v, pair] : pairs) adj[v];
  for (const auto& [v, pair] : pairs) {
    for (auto u : pair.others) {
      if (u == v || !adj.contains(u)) continue;
      adj[v].insert(u);
      adj[u].insert(v);
    }
  }
  const std::size_t vertices = adj.size();
  std::vector<std::size_t> chosen;
  while (!adj.empty()) {
    auto best = adj.begin();
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() < best->second.size()) best = it;
    }
    const std::size_t v = best->first;
    const std::set<std::size_t> removed = best->second;
    chosen.push_back(v);
    for (auto u : removed) {
      for (auto w : adj[u]) {
        if (w != v && !removed.contains(w)) adj[w].erase(u);
      }
      adj.erase(u);
    }
    adj.erase(v);
  }
  std::sort(chosen.begin(), chosen.end());
  if (chosen.size() * (4 * depth + 1) < vertices) {
    throw VerificationError("independent set smaller than vertices / (4 depth + 1)");
  }
  return chosen;
}

ProjectionSample sample_projection(std::size_t arity, const std::vector<std::size_t>& z_prime,
                                   const std::map<std::size_t, PathPair>& pairs,
                                   std::size_t depth, std::uint64_t seed,
                                   std::size_t retry_cap) {
  if (z_prime.empty()) throw EmptyAddressedSet("Z' is empty");
  if (depth == 0) throw PreconditionError("projection needs depth >= 1");
  const std::size_t r = 10 * depth * depth;
  std::vector<bool> in_z(arity, false);
  for (auto i : z_prime) {
    if (i >= arity) throw ShapeError("Z' member out of range");
    in_z[i] = true;
  }
  const std::size_t need = (z_prime.size() + 1) / 2;
  for (std::size_t attempt = 0; attempt < retry_cap; ++attempt) {
    SeedStream stream(derive_seed(seed, attempt));
    std::vector<std::size_t> base(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) {
      if (!in_z[v]) base[v] = stream.uniform(r);
    }
    std::vector<std::size_t> good;
    for (auto i : z_prime) {
      std::set<std::size_t> images;
      bool injective = true;
      const auto it = pairs.find(i);
      if (it == pairs.end()) throw ShapeError("Z' member has no path pair");
      for (auto u : it->second.others) {
        if (in_z[u]) throw VerificationError("Z' is not independent");
        injective = images.insert(base[u]).second && injective;
      }
      if (injective) good.push_back(i);
    }
    if (good.size() < need) continue;
    if (good.empty()) throw EmptyAddressedSet("no good addressed variable");
    ProjectionSample out;
    out.r = r;
    out.attempts = attempt + 1;
    out.nu.target_arity = r + good.size();
    out.nu.map = base;
    for (auto i : z_prime) out.nu.map[i] = 0;
    for (std::size_t j = 0; j < good.size(); ++j) out.nu.map[good[j]] = r + j;
    out.good = std::move(good);
    return out;
  }
  throw VerificationError("projection retry cap exceeded");
}

namespace {

/// Target of one source variable: another variable or a constant.
struct Relabel {
  bool constant = false;
  bool value = false;
  std::size_t target = 0;
};

DecisionTree rebuild(const DecisionTree& tree, std::size_t target_arity,
                     const std::vector<Relabel>& map) {
  DecisionTree out(target_arity);
  std::map<std::size_t, bool> fixed;
  const std::function<std::size_t(std::size_t)> build = [&](std::size_t node) -> std::size_t {
    const auto& nd = tree.node(node);
    if (nd.is_leaf()) return out.add_leaf(nd.leaf_value);
    const Relabel& m = map.at(nd.variable);
    if (m.constant) return build(nd.child[m.value ? 1 : 0]);
    if (auto it = fixed.find(m.target); it != fixed.end()) {
      return build(nd.child[it->second ? 1 : 0]);
    }
    std::size_t kids[2];
    for (int c = 0; c < 2; ++c) {
      fixed[m.target] = c == 1;
      kids[c] = build(nd.child[c]);
    }
    fixed.erase(m.target);
    return out.add_query(m.target, kids[0], kids[1]);
  };
  out.set_root(build(tree.root()));
  return out;
}

}  // namespace

DecisionTree project_tree(const DecisionTree& tree, const Projection& nu) {
  nu.validate();
  if (nu.map.size() != tree.arity()) throw ShapeError("projection size does not match tree arity");
  std::vector<Relabel> map(tree.arity());
  for (std::size_t v = 0; v < tree.arity(); ++v) map[v].target = nu.map[v];
  return rebuild(tree, nu.target_arity, map);
}

Path walk_tree(const DecisionTree& tree, const std::map<std::size_t, bool>& assignment) {
  Path path;
  std::size_t node = tree.root();
  while (!tree.node(node).is_leaf()) {
    const auto& nd = tree.node(node);
    const auto it = assignment.find(nd.variable);
    if (it == assignment.end()) throw ShapeError("walk reached an unassigned variable");
    path.steps.push_back({nd.variable, it->second});
    node = nd.child[it->second ? 1 : 0];
  }
  path.leaf = tree.node(node).leaf_value;
  return path;
}

namespace {

std::size_t node_at(const DecisionTree& tree, const Path& path, std::size_t steps) {
  std::size_t node = tree.root();
  for (std::size_t k = 0; k < steps; ++k) node = tree.node(node).child[path.steps[k].value ? 1 : 0];
  return node;
}

PseudoaddressingCertificate run_pipeline(const BooleanFunction& f, const DecisionTree& tree,
                                         std::uint64_t seed) {
  PseudoaddressingCertificate cert;
  cert.f = f;
  cert.source_tree = tree;
  cert.depth = tree.depth();
  const auto pairs = path_pairs(tree);
  cert.z_prime = independent_set(pairs, cert.depth);
  cert.independent_bound = (pairs.size() + 4 * cert.depth) / (4 * cert.depth + 1);
  const auto sample = sample_projection(tree.arity(), cert.z_prime, pairs, cert.depth, seed);
  cert.r = sample.r;
  cert.nu = sample.nu;
  cert.good = sample.good;
  cert.attempts = sample.attempts;
  cert.tree = project_tree(tree, cert.nu);

  for (std::size_t j = 0; j < cert.good.size(); ++j) {
    const PathPair& src = pairs.at(cert.good[j]);
    PathPair pair;
    pair.variable = cert.r + j;
    pair.swapped = src.swapped;
    for (const auto* path : {&src.zero, &src.one}) {
      std::map<std::size_t, bool> assignment;
      for (const auto& st : path->steps) {
        const std::size_t u = cert.nu.map[st.variable];
        const auto [it, inserted] = assignment.emplace(u, st.value);
        if (!inserted && it->second != st.value) {
          throw VerificationError("projected path assigns one variable two values");
        }
      }
      Path projected = walk_tree(cert.tree, assignment);
      if (projected.leaf != path->leaf) throw VerificationError("projected path changed its leaf");
      (path->leaf ? pair.one : pair.zero) = std::move(projected);
    }
    std::size_t k = 0;
    while (k < pair.zero.steps.size() && k < pair.one.steps.size() &&
           pair.zero.steps[k] == pair.one.steps[k]) {
      ++k;
    }
    pair.node = node_at(cert.tree, pair.zero, k);
    pair.others = other_variables(pair);
    cert.pairs.push_back(std::move(pair));
  }
  std::string reason;
  if (!verify_certificate(cert, &reason)) {
    throw VerificationError("certificate failed verification: " + reason);
  }
  return cert;
}

}  // namespace

PseudoaddressingCertificate extract_pseudoaddressing(const BooleanFunction& f,
                                                     std::uint64_t seed) {
  if (!is_truly_variate(f)) throw PreconditionError("function is not truly n-variate");
  return run_pipeline(f, reduced_tree(min_depth_tree(f)), seed);
}

PseudoaddressingCertificate extract_pseudoaddressing_from_tree(const DecisionTree& tree,
                                                               std::uint64_t seed) {
  tree.validate();
  const BooleanFunction f = tree_to_function(tree);
  if (!is_truly_variate(f)) throw PreconditionError("tree function is not truly n-variate");
  return run_pipeline(f, tree, seed);
}

namespace {

bool fail(std::string* reason, std::string text) {
  if (reason) *reason = std::move(text);
  return false;
}

bool path_is_valid(const DecisionTree& tree, const Path& path) {
  std::size_t node = tree.root();
  for (const auto& st : path.steps) {
    const auto& nd = tree.node(node);
    if (nd.is_leaf() || nd.variable != st.variable) return false;
    node = nd.child[st.value ? 1 : 0];
  }
  return tree.node(node).is_leaf() && tree.node(node).leaf_value == path.leaf;
}

}  // namespace

bool verify_certificate(const PseudoaddressingCertificate& cert, std::string* reason) {
  const std::size_t t = cert.t();
  const std::size_t m = cert.r + t;
  if (t == 0) return fail(reason, "no addressed variables");
  if (cert.tree.arity() != m || cert.nu.target_arity != m || cert.pairs.size() != t) {
    return fail(reason, "sizes disagree");
  }
  if (cert.nu.map.size() != cert.f.arity()) return fail(reason, "projection size mismatch");
  for (std::size_t j = 0; j < t; ++j) {
    if (cert.nu.map.at(cert.good[j]) != cert.r + j) return fail(reason, "good variable misplaced");
  }
  try {
    cert.tree.validate();
  } catch (const Error& e) {
    return fail(reason, e.what());
  }

  // The tree against project(f, nu), on the image variables only.
  std::vector<std::size_t> image(cert.nu.map.begin(), cert.nu.map.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (auto v : cert.tree.queried_variables()) {
    if (!std::binary_search(image.begin(), image.end(), v)) {
      return fail(reason, "tree queries a variable outside the image of nu");
    }
  }
  if (image.size() > kMaxArity) return fail(reason, "image too large to verify");
  Projection compact;
  compact.target_arity = image.size();
  for (auto u : cert.nu.map) {
    compact.map.push_back(static_cast<std::size_t>(
        std::lower_bound(image.begin(), image.end(), u) - image.begin()));
  }
  const BooleanFunction g = project(cert.f, compact);
  for (std::uint64_t c = 0; c < g.table_size(); ++c) {
    BitVector full(m);
    for (std::size_t k = 0; k < image.size(); ++k) full.set(image[k], (c >> k) & 1U);
    if (cert.tree.evaluate(full) != g.value(c)) {
      return fail(reason, "tree differs from the projected function");
    }
  }

  for (std::size_t j = 0; j < t; ++j) {
    const PathPair& pair = cert.pairs[j];
    const std::size_t z = cert.r + j;
    if (pair.variable != z) return fail(reason, "pair " + std::to_string(j) + " has the wrong variable");
    if (!path_is_valid(cert.tree, pair.zero) || !path_is_valid(cert.tree, pair.one)) {
      return fail(reason, "pair " + std::to_string(j) + " is not a pair of tree paths");
    }
    if (pair.zero.leaf || !pair.one.leaf) return fail(reason, "P1: leaves are not 0 and 1");
    std::size_t k = 0;
    while (k < pair.zero.steps.size() && k < pair.one.steps.size() &&
           pair.zero.steps[k] == pair.one.steps[k]) {
      ++k;
    }
    if (k >= pair.zero.steps.size() || k >= pair.one.steps.size() ||
        pair.zero.steps[k].variable != z) {
      return fail(reason, "P1: paths do not diverge at z_" + std::to_string(j));
    }
    std::map<std::size_t, bool> seen;
    for (const auto& st : pair.zero.steps) seen[st.variable] = st.value;
    for (const auto& st : pair.one.steps) {
      if (st.variable == z) continue;
      if (auto it = seen.find(st.variable); it != seen.end() && it->second != st.value) {
        return fail(reason, "P2: paths of z_" + std::to_string(j) + " differ off z_j");
      }
    }
  }
  return true;
}

RestrictedRandomFunction random_restriction_F(const PseudoaddressingCertificate& cert,
                                              std::uint64_t seed) {
  std::string reason;
  const std::size_t t = cert.t();
  if (t == 0 || cert.pairs.size() != t || cert.tree.arity() != cert.r + t) {
    throw PreconditionError("invalid certificate");
  }
  RestrictedRandomFunction F;
  F.b = BitVector(t);
  F.polarity = BitVector(t);
  SeedStream stream(seed);
  for (std::size_t j = 0; j < t; ++j) F.b.set(j, stream.next_bit());

  std::vector<Relabel> map(cert.r + t);
  for (std::size_t v = 0; v < cert.r; ++v) map[v].target = v;
  for (std::size_t j = 0; j < t; ++j) map[cert.r + j] = {true, F.b.test(j), 0};
  F.tree = rebuild(cert.tree, cert.r, map);

  for (std::size_t j = 0; j < t; ++j) {
    const PathPair& pair = cert.pairs[j];
    BitVector a(cert.r);
    for (const auto* path : {&pair.zero, &pair.one}) {
      for (const auto& st : path->steps) {
        if (st.variable < cert.r) a.set(st.variable, st.value);
      }
    }
    bool branch = false;
    for (const auto& st : pair.one.steps) {
      if (st.variable == cert.r + j) branch = st.value;
    }
    F.polarity.set(j, !branch);
    F.points.push_back(std::move(a));
  }
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = j + 1; k < t; ++k) {
      if (F.points[j] == F.points[k]) throw VerificationError("restriction points coincide");
    }
    if (F.value_at(j) != (F.b.test(j) != F.polarity.test(j))) {
      throw VerificationError("F(a^(j)) does not follow b_j");
    }
  }
  return F;
}

RestrictionStatistics restriction_statistics(const PseudoaddressingCertificate& cert,
                                             std::uint64_t trials, std::uint64_t seed0,
                                             unsigned jobs) {
  const std::size_t t = cert.t();
  const auto counts = parallel_counts(
      seed0, trials, t + t * t, jobs, [&](std::uint64_t seed, std::span<std::uint64_t> c) {
        const auto F = random_restriction_F(cert, seed);
        std::vector<bool> v(t);
        for (std::size_t j = 0; j < t; ++j) v[j] = F.value_at(j);
        for (std::size_t j = 0; j < t; ++j) {
          c[j] += v[j];
          for (std::size_t k = 0; k < t; ++k) c[t + j * t + k] += v[j] == v[k];
        }
      });
  RestrictionStatistics out;
  out.trials = trials;
  out.ones.assign(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(t));
  out.agreements.assign(t, std::vector<std::uint64_t>(t));
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = 0; k < t; ++k) out.agreements[j][k] = counts[t + j * t + k];
  }
  return out;
}

DecisionTree sample_addressing_tree() {
  DecisionTree tree(10);
  const auto z = [&](std::size_t j) {
    return tree.add_query(4 + j, tree.add_leaf(false), tree.add_leaf(true));
  };
  const auto leaf0 = [&] { return tree.add_leaf(false); };
  const auto leaf1 = [&] { return tree.add_leaf(true); };
  const std::size_t a = tree.add_query(2, z(1), leaf0());
  const std::size_t b = tree.add_query(2, z(2), z(3));
  const std::size_t left = tree.add_query(1, a, b);
  const std::size_t c = tree.add_query(3, z(4), leaf0());
  const std::size_t d = tree.add_query(4, z(5), leaf1());
  const std::size_t right = tree.add_query(2, c, d);
  tree.set_root(tree.add_query(0, left, right));
  tree.validate();
  return tree;
}

nlohmann::json to_json(const DecisionTree& tree) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < tree.node_count(); ++i) {
    const auto& nd = tree.node(i);
    if (nd.is_leaf()) {
      nodes.push_back({{"leaf", nd.leaf_value ? 1 : 0}});
    } else {
      nodes.push_back({{"var", nd.variable}, {"children", {nd.child[0], nd.child[1]}}});
    }
  }
  return {{"arity", tree.arity()}, {"root", tree.root()}, {"nodes", std::move(nodes)}};
}

nlohmann::json to_json(const Path& path) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : path.steps) steps.push_back({st.variable, st.value ? 1 : 0});
  return {{"steps", std::move(steps)}, {"leaf", path.leaf ? 1 : 0}};
}

nlohmann::json to_json(const PathPair& pair) {
  return {{"variable", pair.variable}, {"node", pair.node},   {"swapped", pair.swapped},
          {"zero", to_json(pair.zero)}, {"one", to_json(pair.one)}, {"others", pair.others}};
}

nlohmann::json to_json(const PseudoaddressingCertificate& cert) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : cert.pairs) pairs.push_back(to_json(p));
  return {{"r", cert.r},
          {"t", cert.t()},
          {"depth", cert.depth},
          {"source_arity", cert.f.arity()},
          {"z_prime", cert.z_prime},
          {"good", cert.good},
          {"nu", cert.nu.map},
          {"attempts", cert.attempts},
          {"independent_bound", cert.independent_bound},
          {"source_tree", to_json(cert.source_tree)},
          {"tree", to_json(cert.tree)},
          {"pairs", std::move(pairs)}};
}

}  // namespace pdeglab
