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

/// @file fault_tree.hpp
/// Classic fault trees as rooted Boolean DAGs.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cft/model.hpp"

namespace cft {

using NodeId = std::uint32_t;

struct FaultTreeNode {
  enum class Kind { Event, Gate };

  Kind kind = Kind::Event;
  /// Qualified event name, or the gate label (empty for anonymous gates).
  std::string name;
  std::optional<double> probability;  // events only
  GateOp op = GateOp::Or;             // gates only
  std::vector<NodeId> children;       // gates only, declaration order

  bool is_event() const { return kind == Kind::Event; }
};

/// Rooted Boolean DAG over basic events with AND/OR/XOR gates.
///
/// Nodes are numbered in creation order and every gate's children have
/// smaller ids than the gate, so the node vector is a topological order and
/// the graph is acyclic by construction. Shared subtrees are ordinary
/// multiple references to the same id.
class FaultTree {
 public:
  /// Throws ModelError on a duplicate name or a probability outside [0,1].
  NodeId add_event(std::string name, std::optional<double> probability);

  /// Throws ModelError on bad arity (AND/OR need >= 2 children, XOR exactly
  /// 2), dangling children, or a label clashing with an existing name.
  NodeId add_gate(GateOp op, std::vector<NodeId> children,
                  std::string label = {});

  /// Throws ModelError on a duplicate top-event name or dangling node.
  void add_root(std::string top, NodeId node);

  std::size_t size() const { return nodes_.size(); }
  const FaultTreeNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<FaultTreeNode>& nodes() const { return nodes_; }

  const std::vector<std::pair<std::string, NodeId>>& roots() const {
    return roots_;
  }
  std::optional<NodeId> find_root(std::string_view top) const;
  /// Throws UnknownNameError when the top event does not exist.
  NodeId root(std::string_view top) const;

  std::optional<NodeId> find_event(std::string_view name) const;
  /// Event or labelled gate carrying this name.
  std::optional<NodeId> find_named(std::string_view name) const;

  /// All event ids, ascending.
  std::vector<NodeId> events() const;
  std::vector<std::string> event_names() const;

  /// Ids reachable from `from` (inclusive), ascending.
  std::vector<NodeId> cone(NodeId from) const;
  /// Event ids reachable from `from`, ascending.
  std::vector<NodeId> cone_events(NodeId from) const;
  /// Event names in depth-first first-occurrence order from `from`.
  std::vector<std::string> first_occurrence_order(NodeId from) const;

  /// No XOR gate is reachable from `from`.
  bool is_coherent(NodeId from) const;

  /// Longest root-to-leaf path from `from`, counted in edges.
  std::size_t depth(NodeId from) const;

  /// Copy keeping only the given top events and their cones. Labels and
  /// probabilities are preserved; ids are renumbered.
  FaultTree restricted_to(const std::vector<std::string>& tops) const;

 private:
  std::vector<FaultTreeNode> nodes_;
  std::vector<std::pair<std::string, NodeId>> roots_;
  std::map<std::string, NodeId, std::less<>> names_;
};

/// Structural equality of two rooted sub-DAGs: same node kinds, names,
/// probabilities, operators and child order. Sharing is not compared.
bool same_structure(const FaultTree& a, NodeId root_a, const FaultTree& b,
                    NodeId root_b);

/// Structural equality of whole trees: same event set with the same
/// probabilities, same top events, and same_structure on every root.
bool same_structure(const FaultTree& a, const FaultTree& b);

/// Number of gates whose operator differs when the two rooted trees are
/// unfolded and walked in parallel; nullopt when their shapes (node kinds,
/// arities, leaf names) differ anywhere else.
std::optional<std::size_t> count_operator_differences(const FaultTree& a,
                                                      NodeId root_a,
                                                      const FaultTree& b,
                                                      NodeId root_b);

}  // namespace cft
