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

#include "cft/bdd.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace cft {

std::size_t BddManager::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = k.a;
  h = h * 0x9E3779B97F4A7C15ull ^ k.b;
  h = h * 0x9E3779B97F4A7C15ull ^ k.c;
  h ^= h >> 29;
  return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ull);
}

BddManager::BddManager(std::vector<std::string> order)
    : order_(std::move(order)) {
  for (std::uint32_t i = 0; i < order_.size(); ++i)
    if (!index_.emplace(order_[i], i).second)
      throw InvalidOrder("variable '" + order_[i] + "' appears twice in order");
  const auto terminal = static_cast<std::uint32_t>(order_.size());
  nodes_.push_back({terminal, kBddFalse, kBddFalse});
  nodes_.push_back({terminal, kBddTrue, kBddTrue});
}

std::optional<std::uint32_t> BddManager::var_index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BddRef BddManager::make(std::uint32_t var, BddRef low, BddRef high) {
  if (low == high) return low;
  const Key key{var, low, high};
  if (auto it = unique_.find(key); it != unique_.end()) return it->second;
  auto ref = static_cast<BddRef>(nodes_.size());
  nodes_.push_back({var, low, high});
  unique_.emplace(key, ref);
  return ref;
}

BddRef BddManager::variable(std::uint32_t var) {
  if (var >= order_.size()) throw InvalidOrder("variable index out of range");
  return make(var, kBddFalse, kBddTrue);
}

BddRef BddManager::apply(GateOp op, BddRef a, BddRef b) {
  switch (op) {
    case GateOp::And:
      if (a == kBddFalse || b == kBddFalse) return kBddFalse;
      if (a == kBddTrue) return b;
      if (b == kBddTrue || a == b) return a;
      break;
    case GateOp::Or:
      if (a == kBddTrue || b == kBddTrue) return kBddTrue;
      if (a == kBddFalse) return b;
      if (b == kBddFalse || a == b) return a;
      break;
    case GateOp::Xor:
      if (a == kBddFalse) return b;
      if (b == kBddFalse) return a;
      if (a == b) return kBddFalse;
      if (is_terminal(a) && is_terminal(b)) return kBddFalse;  // 1 ^ 1
      break;
  }
  if (a > b) std::swap(a, b);  // every operator is commutative
  const Key key{static_cast<std::uint32_t>(op), a, b};
  if (auto it = apply_memo_.find(key); it != apply_memo_.end())
    return it->second;

  const auto va = var_of(a);
  const auto vb = var_of(b);
  const auto v = std::min(va, vb);
  const BddRef a0 = va == v ? nodes_[a].low : a;
  const BddRef a1 = va == v ? nodes_[a].high : a;
  const BddRef b0 = vb == v ? nodes_[b].low : b;
  const BddRef b1 = vb == v ? nodes_[b].high : b;
  const BddRef low = apply(op, a0, b0);
  const BddRef high = apply(op, a1, b1);
  const BddRef result = make(v, low, high);
  apply_memo_.emplace(key, result);
  return result;
}

BddRef BddManager::from_tree(const FaultTree& ft, NodeId root) {
  std::map<NodeId, BddRef> refs;
  for (auto id : ft.cone(root)) {
    const auto& n = ft.node(id);
    if (n.is_event()) {
      auto var = var_index(n.name);
      if (!var)
        throw InvalidOrder("variable order misses basic event '" + n.name + "'");
      refs[id] = variable(*var);
      continue;
    }
    BddRef acc = refs.at(n.children.front());
    for (std::size_t i = 1; i < n.children.size(); ++i)
      acc = apply(n.op, acc, refs.at(n.children[i]));
    refs[id] = acc;
  }
  return refs.at(root);
}

std::size_t BddManager::internal_count(BddRef root) const {
  std::set<BddRef> seen;
  std::vector<BddRef> stack{root};
  while (!stack.empty()) {
    auto r = stack.back();
    stack.pop_back();
    if (is_terminal(r) || !seen.insert(r).second) continue;
    stack.push_back(nodes_[r].low);
    stack.push_back(nodes_[r].high);
  }
  return seen.size();
}

bool BddManager::evaluate(BddRef root, const std::vector<bool>& failed) const {
  while (!is_terminal(root)) {
    const auto& n = nodes_[root];
    root = failed.at(n.var) ? n.high : n.low;
  }
  return root == kBddTrue;
}

double BddManager::probability(BddRef root, std::span<const double> p) const {
  std::vector<double> memo(nodes_.size(), -1.0);
  memo[kBddFalse] = 0.0;
  memo[kBddTrue] = 1.0;
  // Explicit post-order so deep diagrams cannot exhaust the call stack.
  std::vector<BddRef> stack{root};
  while (!stack.empty()) {
    auto r = stack.back();
    if (memo[r] >= 0.0) {
      stack.pop_back();
      continue;
    }
    const auto& n = nodes_[r];
    if (memo[n.low] < 0.0 || memo[n.high] < 0.0) {
      if (memo[n.low] < 0.0) stack.push_back(n.low);
      if (memo[n.high] < 0.0) stack.push_back(n.high);
      continue;
    }
    const double q = p[n.var];
    memo[r] = q * memo[n.high] + (1.0 - q) * memo[n.low];
    stack.pop_back();
  }
  return memo[root];
}

std::optional<std::vector<bool>> BddManager::satisfying_assignment(
    BddRef root) const {
  if (root == kBddFalse) return std::nullopt;
  std::vector<bool> failed(order_.size(), false);
  // In a reduced diagram every internal node reaches the true terminal.
  while (!is_terminal(root)) {
    const auto& n = nodes_[root];
    if (n.low != kBddFalse) {
      root = n.low;
    } else {
      failed[n.var] = true;
      root = n.high;
    }
  }
  return failed;
}

std::vector<std::vector<std::uint32_t>> BddManager::minimal_solutions(
    BddRef root) const {
  using Family = std::vector<std::vector<std::uint32_t>>;
  std::map<BddRef, Family> memo;
  memo[kBddFalse] = {};
  memo[kBddTrue] = {{}};

  std::vector<BddRef> stack{root};
  while (!stack.empty()) {
    auto r = stack.back();
    if (memo.count(r)) {
      stack.pop_back();
      continue;
    }
    const auto& n = nodes_[r];
    const bool low_ready = memo.count(n.low) != 0;
    const bool high_ready = memo.count(n.high) != 0;
    if (!low_ready || !high_ready) {
      if (!low_ready) stack.push_back(n.low);
      if (!high_ready) stack.push_back(n.high);
      continue;
    }
    // minsol(x ? F1 : F0) = minsol(F0) + x * (minsol(F1) minus supersets of
    // any member of minsol(F0)), valid for monotone F (F0 <= F1).
    const Family& without = memo.at(n.low);
    const Family& with = memo.at(n.high);
    Family result = without;
    for (const auto& k : with) {
      const bool subsumed = std::any_of(
          without.begin(), without.end(), [&](const auto& l) {
            return std::includes(k.begin(), k.end(), l.begin(), l.end());
          });
      if (subsumed) continue;
      std::vector<std::uint32_t> set;
      set.reserve(k.size() + 1);
      set.push_back(n.var);
      set.insert(set.end(), k.begin(), k.end());  // k holds larger indices
      result.push_back(std::move(set));
    }
    memo.emplace(r, std::move(result));
    stack.pop_back();
  }
  return memo.at(root);
}

bool BddManager::is_reduced_and_ordered(BddRef root) const {
  std::set<BddRef> seen;
  std::set<std::tuple<std::uint32_t, BddRef, BddRef>> triples;
  std::vector<BddRef> stack{root};
  while (!stack.empty()) {
    auto r = stack.back();
    stack.pop_back();
    if (is_terminal(r) || !seen.insert(r).second) continue;
    const auto& n = nodes_[r];
    if (n.low == n.high) return false;
    if (!triples.emplace(n.var, n.low, n.high).second) return false;
    if (var_of(n.low) <= n.var || var_of(n.high) <= n.var) return false;
    stack.push_back(n.low);
    stack.push_back(n.high);
  }
  return true;
}

bool Bdd::evaluate(const Scenario& scenario) const {
  std::vector<bool> failed(manager_.order().size(), false);
  for (const auto& name : scenario.failed) {
    auto var = manager_.var_index(name);
    if (!var) throw UnknownNameError("unknown basic event '" + name + "'");
    failed[*var] = true;
  }
  return manager_.evaluate(root_, failed);
}

Bdd build_bdd(const FaultTree& ft, std::string_view top,
              std::optional<std::vector<std::string>> order) {
  const auto root = ft.root(top);
  std::vector<std::string> vars;
  if (order) {
    auto expected = ft.event_names();
    auto given = *order;
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    if (expected != given)
      throw InvalidOrder(
          "variable order is not a permutation of the tree's basic events");
    vars = std::move(*order);
  } else {
    vars = ft.first_occurrence_order(root);
    std::set<std::string> placed(vars.begin(), vars.end());
    for (auto& name : ft.event_names())
      if (!placed.count(name)) vars.push_back(std::move(name));
  }
  BddManager manager(std::move(vars));
  const auto ref = manager.from_tree(ft, root);
  return Bdd(std::move(manager), ref);
}

}  // namespace cft
