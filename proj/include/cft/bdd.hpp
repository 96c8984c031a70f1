// Copyright 2026 The cftkit Authors. All Rights Reserved.
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

/// @file bdd.hpp
/// Reduced ordered binary decision diagrams over named variables.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cft/fault_tree.hpp"
#include "cft/model.hpp"

namespace cft {

using BddRef = std::uint32_t;

inline constexpr BddRef kBddFalse = 0;
inline constexpr BddRef kBddTrue = 1;

struct BddNode {
  std::uint32_t var;  // index into the order; terminals use order size
  BddRef low;
  BddRef high;
};

/// Node table with hash-consing. Nodes are never freed; every BddRef stays
/// valid for the manager's lifetime. Two functions over the same manager
/// are equal iff their refs are equal.
class BddManager {
 public:
  /// Throws InvalidOrder on duplicate names.
  explicit BddManager(std::vector<std::string> order);

  const std::vector<std::string>& order() const { return order_; }
  std::optional<std::uint32_t> var_index(std::string_view name) const;

  BddRef variable(std::uint32_t var);
  BddRef apply(GateOp op, BddRef a, BddRef b);

  /// Function of node `root`; throws InvalidOrder when the cone references
  /// an event missing from the order.
  BddRef from_tree(const FaultTree& ft, NodeId root);

  const BddNode& node(BddRef ref) const { return nodes_[ref]; }
  static bool is_terminal(BddRef ref) { return ref <= kBddTrue; }
  std::size_t table_size() const { return nodes_.size(); }

  /// Internal nodes reachable from `root`.
  std::size_t internal_count(BddRef root) const;

  /// `failed` is indexed by variable.
  bool evaluate(BddRef root, const std::vector<bool>& failed) const;

  /// Shannon decomposition; `p` is indexed by variable.
  double probability(BddRef root, std::span<const double> p) const;

  /// Assignment reaching the true terminal, preferring low edges; nullopt
  /// for the false function.
  std::optional<std::vector<bool>> satisfying_assignment(BddRef root) const;

  /// Minimal solutions of a monotone function, as sorted variable-index
  /// sets. Meaningless for non-monotone functions.
  std::vector<std::vector<std::uint32_t>> minimal_solutions(BddRef root) const;

  /// No redundant test and no duplicate triple anywhere under `root`, and
  /// variable indices strictly increase along every path.
  bool is_reduced_and_ordered(BddRef root) const;

 private:
  struct Key {
    std::uint32_t a, b, c;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  BddRef make(std::uint32_t var, BddRef low, BddRef high);
  std::uint32_t var_of(BddRef ref) const { return nodes_[ref].var; }

  std::vector<std::string> order_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<BddNode> nodes_;
  std::unordered_map<Key, BddRef, KeyHash> unique_;
  std::unordered_map<Key, BddRef, KeyHash> apply_memo_;
};

/// A single function together with the manager that owns it.
class Bdd {
 public:
  Bdd(BddManager manager, BddRef root)
      : manager_(std::move(manager)), root_(root) {}

  const BddManager& manager() const { return manager_; }
  BddRef root() const { return root_; }
  const std::vector<std::string>& order() const { return manager_.order(); }
  std::size_t internal_count() const { return manager_.internal_count(root_); }

  /// Throws UnknownNameError for names outside the order.
  bool evaluate(const Scenario& scenario) const;

 private:
  BddManager manager_;
  BddRef root_;
};

/// Default order: depth-first first occurrence from the top's root,
/// followed by the remaining tree events in node order. An explicit order
/// must be a permutation of all the tree's basic events (InvalidOrder).
Bdd build_bdd(const FaultTree& ft, std::string_view top,
              std::optional<std::vector<std::string>> order = std::nullopt);

}  // namespace cft
