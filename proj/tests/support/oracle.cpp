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

#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cft::testing {

bool oracle_eval(const FaultTree& ft, NodeId node,
                 const std::set<std::string>& failed) {
  const auto& n = ft.node(node);
  if (n.is_event()) return failed.count(n.name) > 0;
  switch (n.op) {
    case GateOp::And:
      for (auto c : n.children)
        if (!oracle_eval(ft, c, failed)) return false;
      return true;
    case GateOp::Or:
      for (auto c : n.children)
        if (oracle_eval(ft, c, failed)) return true;
      return false;
    case GateOp::Xor:
      return oracle_eval(ft, n.children[0], failed) !=
             oracle_eval(ft, n.children[1], failed);
  }
  return false;
}

namespace {

bool eval_output(const SystemModel& sys, const std::string& inst,
                 const std::string& port, const std::string& mode,
                 const std::set<std::string>& failed, int depth);

bool eval_expr(const SystemModel& sys, const std::string& inst,
               const Expr& e, const std::set<std::string>& failed, int depth) {
  if (!e.is_ref()) {
    const auto& ops = e.operands();
    switch (e.op()) {
      case GateOp::And:
        return std::all_of(ops.begin(), ops.end(), [&](const Expr& x) {
          return eval_expr(sys, inst, x, failed, depth);
        });
      case GateOp::Or:
        return std::any_of(ops.begin(), ops.end(), [&](const Expr& x) {
          return eval_expr(sys, inst, x, failed, depth);
        });
      case GateOp::Xor:
        return eval_expr(sys, inst, ops[0], failed, depth) !=
               eval_expr(sys, inst, ops[1], failed, depth);
    }
  }
  const auto& name = e.name();
  const auto dot = name.find('.');
  if (dot == std::string::npos) return failed.count(inst + "." + name) > 0;
  const auto port = name.substr(0, dot);
  const auto mode = name.substr(dot + 1);
  for (const auto& c : sys.connections)
    if (c.target.instance == inst && c.target.port == port)
      return eval_output(sys, c.source.instance, c.source.port, mode, failed,
                         depth + 1);
  throw std::logic_error("undriven input " + inst + "." + port);
}

bool eval_output(const SystemModel& sys, const std::string& inst,
                 const std::string& port, const std::string& mode,
                 const std::set<std::string>& failed, int depth) {
  if (depth > 10000) throw std::logic_error("propagation does not terminate");
  const auto* i = sys.find_instance(inst);
  const auto* def = sys.find_definition(i->definition);
  const auto* out = def->find_output(port, mode);
  if (!out) throw std::logic_error("no logic for " + inst + "." + port + "." + mode);
  return eval_expr(sys, inst, out->expr, failed, depth);
}

}  // namespace

bool oracle_eval(const SystemModel& sys, const std::string& top,
                 const std::set<std::string>& failed) {
  const auto* t = sys.find_top(top);
  if (!t) throw std::logic_error("no top " + top);
  return eval_output(sys, t->instance, t->port, t->mode, failed, 0);
}

std::vector<std::string> oracle_events(const FaultTree& ft,
                                       const std::string& top) {
  std::set<std::string> names;
  std::vector<NodeId> stack = {ft.root(top)};
  while (!stack.empty()) {
    const auto id = stack.back();
    stack.pop_back();
    const auto& n = ft.node(id);
    if (n.is_event())
      names.insert(n.name);
    else
      stack.insert(stack.end(), n.children.begin(), n.children.end());
  }
  return {names.begin(), names.end()};
}

std::set<std::string> scenario_of(const std::vector<std::string>& events,
                                  std::uint64_t mask) {
  std::set<std::string> s;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (mask >> i & 1) s.insert(events[i]);
  return s;
}

long double oracle_probability(const FaultTree& ft, const std::string& top) {
  const auto events = oracle_events(ft, top);
  std::vector<long double> p;
  for (const auto& e : events)
    p.push_back(*ft.node(*ft.find_event(e)).probability);
  const NodeId root = ft.root(top);
  long double total = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << events.size()); ++m) {
    if (!oracle_eval(ft, root, scenario_of(events, m))) continue;
    long double w = 1;
    for (std::size_t i = 0; i < events.size(); ++i)
      w *= (m >> i & 1) ? p[i] : 1 - p[i];
    total += w;
  }
  return total;
}

std::vector<std::vector<std::string>> oracle_cut_sets(const FaultTree& ft,
                                                      const std::string& top) {
  const auto events = oracle_events(ft, top);
  const NodeId root = ft.root(top);
  const std::uint64_t all = std::uint64_t{1} << events.size();
  std::vector<bool> sat(all);
  for (std::uint64_t m = 0; m < all; ++m)
    sat[m] = oracle_eval(ft, root, scenario_of(events, m));
  std::vector<std::vector<std::string>> out;
  for (std::uint64_t m = 0; m < all; ++m) {
    if (!sat[m]) continue;
    bool minimal = true;
    // Any satisfying proper subset disqualifies m.
    for (std::uint64_t sub = (m - 1) & m; minimal; sub = (sub - 1) & m) {
      if (sub != m && sat[sub]) minimal = false;
      if (sub == 0) break;
    }
    if (!minimal) continue;
    const auto s = scenario_of(events, m);
    out.emplace_back(s.begin(), s.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace cft::testing
