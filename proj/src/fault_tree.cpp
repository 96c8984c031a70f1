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

#include "cft/fault_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace cft {
namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

NodeId FaultTree::add_event(std::string name,
                            std::optional<double> probability) {
  if (name.empty()) throw ModelError("basic event name must not be empty");
  if (names_.count(name))
    throw ModelError("duplicate name " + quoted(name) + " in fault tree");
  if (probability && !(*probability >= 0.0 && *probability <= 1.0))
    throw ModelError("probability of " + quoted(name) + " outside [0,1]");
  auto id = static_cast<NodeId>(nodes_.size());
  FaultTreeNode node;
  node.kind = FaultTreeNode::Kind::Event;
  node.name = name;
  node.probability = probability;
  nodes_.push_back(std::move(node));
  names_.emplace(std::move(name), id);
  return id;
}

NodeId FaultTree::add_gate(GateOp op, std::vector<NodeId> children,
                           std::string label) {
  if (op == GateOp::Xor ? children.size() != 2 : children.size() < 2)
    throw ModelError(std::string(to_string(op)) + " gate " +
                     (label.empty() ? std::string() : quoted(label) + " ") +
                     "has " + std::to_string(children.size()) +
                     " children");
  for (auto c : children)
    if (c >= nodes_.size()) throw ModelError("dangling child reference");
  if (!label.empty() && names_.count(label))
    throw ModelError("duplicate name " + quoted(label) + " in fault tree");
  auto id = static_cast<NodeId>(nodes_.size());
  FaultTreeNode node;
  node.kind = FaultTreeNode::Kind::Gate;
  node.name = label;
  node.op = op;
  node.children = std::move(children);
  nodes_.push_back(std::move(node));
  if (!label.empty()) names_.emplace(std::move(label), id);
  return id;
}

void FaultTree::add_root(std::string top, NodeId node) {
  if (node >= nodes_.size()) throw ModelError("dangling root reference");
  if (find_root(top))
    throw ModelError("duplicate top event " + quoted(top));
  roots_.emplace_back(std::move(top), node);
}

std::optional<NodeId> FaultTree::find_root(std::string_view top) const {
  for (const auto& [name, id] : roots_)
    if (name == top) return id;
  return std::nullopt;
}

NodeId FaultTree::root(std::string_view top) const {
  if (auto id = find_root(top)) return *id;
  throw UnknownNameError("unknown top event " + quoted(top));
}

std::optional<NodeId> FaultTree::find_event(std::string_view name) const {
  auto id = find_named(name);
  if (id && nodes_[*id].is_event()) return id;
  return std::nullopt;
}

std::optional<NodeId> FaultTree::find_named(std::string_view name) const {
  auto it = names_.find(name);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

std::vector<NodeId> FaultTree::events() const {
  std::vector<NodeId> ids;
  for (NodeId i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].is_event()) ids.push_back(i);
  return ids;
}

std::vector<std::string> FaultTree::event_names() const {
  std::vector<std::string> names;
  for (auto id : events()) names.push_back(nodes_[id].name);
  return names;
}

std::vector<NodeId> FaultTree::cone(NodeId from) const {
  std::vector<char> seen(nodes_.size(), 0);
  seen.at(from) = 1;
  // Children precede parents, so one descending sweep marks the cone.
  for (NodeId i = from + 1; i-- > 0;) {
    if (!seen[i]) continue;
    for (auto c : nodes_[i].children) seen[c] = 1;
  }
  std::vector<NodeId> ids;
  for (NodeId i = 0; i <= from; ++i)
    if (seen[i]) ids.push_back(i);
  return ids;
}

std::vector<NodeId> FaultTree::cone_events(NodeId from) const {
  auto ids = cone(from);
  std::erase_if(ids, [&](NodeId i) { return !nodes_[i].is_event(); });
  return ids;
}

std::vector<std::string> FaultTree::first_occurrence_order(NodeId from) const {
  std::vector<std::string> order;
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    if (seen[id]) continue;
    seen[id] = 1;
    const auto& n = nodes_[id];
    if (n.is_event()) {
      order.push_back(n.name);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      if (!seen[*it]) stack.push_back(*it);
  }
  return order;
}

bool FaultTree::is_coherent(NodeId from) const {
  for (auto id : cone(from)) {
    const auto& n = nodes_[id];
    if (!n.is_event() && n.op == GateOp::Xor) return false;
  }
  return true;
}

std::size_t FaultTree::depth(NodeId from) const {
  std::vector<std::size_t> d(from + 1, 0);
  for (auto id : cone(from)) {
    for (auto c : nodes_[id].children) d[id] = std::max(d[id], d[c] + 1);
  }
  return d[from];
}

FaultTree FaultTree::restricted_to(const std::vector<std::string>& tops) const {
  std::vector<char> keep(nodes_.size(), 0);
  for (const auto& t : tops)
    for (auto id : cone(root(t))) keep[id] = 1;
  FaultTree out;
  std::vector<NodeId> remap(nodes_.size(), 0);
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (!keep[i]) continue;
    const auto& n = nodes_[i];
    if (n.is_event()) {
      remap[i] = out.add_event(n.name, n.probability);
    } else {
      std::vector<NodeId> children;
      for (auto c : n.children) children.push_back(remap[c]);
      remap[i] = out.add_gate(n.op, std::move(children), n.name);
    }
  }
  for (const auto& [name, id] : roots_)
    if (std::find(tops.begin(), tops.end(), name) != tops.end())
      out.add_root(name, remap[id]);
  return out;
}

bool same_structure(const FaultTree& a, NodeId root_a, const FaultTree& b,
                    NodeId root_b) {
  const auto& x = a.node(root_a);
  const auto& y = b.node(root_b);
  if (x.kind != y.kind || x.name != y.name) return false;
  if (x.is_event()) return x.probability == y.probability;
  if (x.op != y.op || x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!same_structure(a, x.children[i], b, y.children[i])) return false;
  return true;
}

bool same_structure(const FaultTree& a, const FaultTree& b) {
  auto ea = a.events();
  auto eb = b.events();
  if (ea.size() != eb.size()) return false;
  for (auto id : ea) {
    auto other = b.find_event(a.node(id).name);
    if (!other || b.node(*other).probability != a.node(id).probability)
      return false;
  }
  if (a.roots().size() != b.roots().size()) return false;
  for (std::size_t i = 0; i < a.roots().size(); ++i) {
    const auto& [name_a, id_a] = a.roots()[i];
    const auto& [name_b, id_b] = b.roots()[i];
    if (name_a != name_b || !same_structure(a, id_a, b, id_b)) return false;
  }
  return true;
}

std::optional<std::size_t> count_operator_differences(const FaultTree& a,
                                                      NodeId root_a,
                                                      const FaultTree& b,
                                                      NodeId root_b) {
  const auto& x = a.node(root_a);
  const auto& y = b.node(root_b);
  if (x.kind != y.kind) return std::nullopt;
  if (x.is_event()) {
    if (x.name != y.name) return std::nullopt;
    return 0;
  }
  if (x.children.size() != y.children.size()) return std::nullopt;
  std::size_t diffs = x.op == y.op ? 0 : 1;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    auto sub = count_operator_differences(a, x.children[i], b, y.children[i]);
    if (!sub) return std::nullopt;
    diffs += *sub;
  }
  return diffs;
}

}  // namespace cft
