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

#include "cft/evaluate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "cft/bitslice.hpp"
#include "cft/validate.hpp"

namespace cft {

bool evaluate_scenario(const FaultTree& ft, const Scenario& scenario,
                       std::string_view top) {
  const auto root = ft.root(top);
  std::vector<char> value(ft.size(), 0);
  for (const auto& name : scenario.failed) {
    auto id = ft.find_event(name);
    if (!id) throw UnknownNameError("unknown basic event '" + name + "'");
    value[*id] = 1;
  }
  for (auto id : ft.cone(root)) {
    const auto& n = ft.node(id);
    if (n.is_event()) continue;
    bool v = n.op == GateOp::And;
    for (auto c : n.children) {
      switch (n.op) {
        case GateOp::And:
          v = v && value[c];
          break;
        case GateOp::Or:
          v = v || value[c];
          break;
        case GateOp::Xor:
          v = v != static_cast<bool>(value[c]);
          break;
      }
    }
    value[id] = v;
  }
  return value[root] != 0;
}

struct SystemEvaluator::Impl {
  struct Node {
    enum class Kind { Event, Output, Gate };
    Kind kind;
    std::uint32_t index = 0;  // event or output slot
    GateOp op = GateOp::Or;
    std::vector<std::uint32_t> children;
  };

  std::vector<std::string> events;
  std::vector<std::string> top_names;
  std::vector<std::uint32_t> top_slots;
  std::vector<Node> nodes;
  std::vector<std::uint32_t> slot_roots;

  explicit Impl(const SystemModel& sys) {
    auto report = validate_system(sys);
    if (!report.ok()) throw ValidationError(std::move(report));

    std::map<std::string, std::uint32_t> event_index;
    std::map<std::string, std::uint32_t> slot_index;  // inst.port.mode
    std::map<std::string, PortRef> drivers;
    for (const auto& c : sys.connections) drivers[c.target.str()] = c.source;
    for (const auto& inst : sys.instances) {
      const auto* def = sys.find_definition(inst.definition);
      for (const auto& ev : def->events) {
        event_index[inst.name + "." + ev.name] =
            static_cast<std::uint32_t>(events.size());
        events.push_back(inst.name + "." + ev.name);
      }
      for (const auto& out : def->outputs)
        slot_index[inst.name + "." + out.port + "." + out.mode] =
            static_cast<std::uint32_t>(slot_index.size());
    }
    slot_roots.resize(slot_index.size());
    for (const auto& inst : sys.instances) {
      const auto* def = sys.find_definition(inst.definition);
      for (const auto& out : def->outputs) {
        auto slot = slot_index.at(inst.name + "." + out.port + "." + out.mode);
        slot_roots[slot] =
            compile(out.expr, inst.name, event_index, slot_index, drivers);
      }
    }
    for (const auto& top : sys.tops) {
      top_names.push_back(top.name);
      top_slots.push_back(
          slot_index.at(top.instance + "." + top.port + "." + top.mode));
    }
  }

  std::uint32_t compile(const Expr& e, const std::string& inst,
                        const std::map<std::string, std::uint32_t>& event_index,
                        const std::map<std::string, std::uint32_t>& slot_index,
                        const std::map<std::string, PortRef>& drivers) {
    Node n;
    if (e.is_ref()) {
      auto parts = split_path(e.name());
      if (parts.size() == 1) {
        n.kind = Node::Kind::Event;
        n.index = event_index.at(inst + "." + e.name());
      } else {
        const auto& src = drivers.at(inst + "." + std::string(parts[0]));
        n.kind = Node::Kind::Output;
        n.index = slot_index.at(src.str() + "." + std::string(parts[1]));
      }
    } else {
      n.kind = Node::Kind::Gate;
      n.op = e.op();
      for (const auto& child : e.operands())
        n.children.push_back(
            compile(child, inst, event_index, slot_index, drivers));
    }
    nodes.push_back(std::move(n));
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }

  std::uint64_t eval(std::uint32_t node, std::span<const std::uint64_t> ev,
                     std::vector<std::optional<std::uint64_t>>& memo) const {
    const auto& n = nodes[node];
    switch (n.kind) {
      case Node::Kind::Event:
        return ev[n.index];
      case Node::Kind::Output:
        return eval_slot(n.index, ev, memo);
      case Node::Kind::Gate:
        break;
    }
    std::uint64_t acc = eval(n.children.front(), ev, memo);
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      auto v = eval(n.children[i], ev, memo);
      switch (n.op) {
        case GateOp::And:
          acc &= v;
          break;
        case GateOp::Or:
          acc |= v;
          break;
        case GateOp::Xor:
          acc ^= v;
          break;
      }
    }
    return acc;
  }

  std::uint64_t eval_slot(std::uint32_t slot, std::span<const std::uint64_t> ev,
                          std::vector<std::optional<std::uint64_t>>& memo) const {
    if (!memo[slot]) memo[slot] = eval(slot_roots[slot], ev, memo);
    return *memo[slot];
  }

  std::size_t top_index(std::string_view top) const {
    for (std::size_t i = 0; i < top_names.size(); ++i)
      if (top_names[i] == top) return i;
    throw UnknownNameError("unknown top event '" + std::string(top) + "'");
  }
};

SystemEvaluator::SystemEvaluator(const SystemModel& sys)
    : impl_(std::make_unique<Impl>(sys)) {}
SystemEvaluator::~SystemEvaluator() = default;
SystemEvaluator::SystemEvaluator(SystemEvaluator&&) noexcept = default;
SystemEvaluator& SystemEvaluator::operator=(SystemEvaluator&&) noexcept =
    default;

const std::vector<std::string>& SystemEvaluator::events() const {
  return impl_->events;
}

const std::vector<std::string>& SystemEvaluator::tops() const {
  return impl_->top_names;
}

std::uint64_t SystemEvaluator::evaluate(
    std::span<const std::uint64_t> event_words, std::size_t top) const {
  if (event_words.size() != impl_->events.size())
    throw std::invalid_argument("one word per basic event expected");
  std::vector<std::optional<std::uint64_t>> memo(impl_->slot_roots.size());
  return impl_->eval_slot(impl_->top_slots.at(top), event_words, memo);
}

std::vector<std::uint64_t> SystemEvaluator::truth_table(
    std::string_view top, std::span<const std::string> vars) const {
  if (vars.size() > kMaxExhaustiveVariables)
    throw TooManyEvents("truth table limited to " +
                        std::to_string(kMaxExhaustiveVariables) + " variables");
  const auto t = impl_->top_index(top);
  std::vector<std::size_t> var_event;
  for (const auto& v : vars) {
    auto it = std::find(impl_->events.begin(), impl_->events.end(), v);
    if (it == impl_->events.end())
      throw UnknownNameError("unknown basic event '" + v + "'");
    var_event.push_back(static_cast<std::size_t>(it - impl_->events.begin()));
  }
  const auto words = truth_table_words(vars.size());
  std::vector<std::uint64_t> table(words);
  std::vector<std::uint64_t> ev(impl_->events.size(), 0);
  std::uint64_t row = 0;
  for (std::uint64_t w = 0; w < words; ++w) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      fill_variable_row(i, w, std::span<std::uint64_t>(&row, 1));
      ev[var_event[i]] = row;
    }
    table[w] = evaluate(ev, t);
  }
  if (vars.size() < 6) table[0] &= (std::uint64_t{1} << (1u << vars.size())) - 1;
  return table;
}

bool evaluate_scenario(const SystemModel& sys, const Scenario& scenario,
                       std::string_view top) {
  SystemEvaluator evaluator(sys);
  const auto& events = evaluator.events();
  std::vector<std::uint64_t> ev(events.size(), 0);
  for (const auto& name : scenario.failed) {
    auto it = std::find(events.begin(), events.end(), name);
    if (it == events.end())
      throw UnknownNameError("unknown basic event '" + name + "'");
    ev[static_cast<std::size_t>(it - events.begin())] = 1;
  }
  const auto& tops = evaluator.tops();
  auto it = std::find(tops.begin(), tops.end(), top);
  if (it == tops.end())
    throw UnknownNameError("unknown top event '" + std::string(top) + "'");
  return (evaluator.evaluate(ev, static_cast<std::size_t>(it - tops.begin())) &
          1) != 0;
}

}  // namespace cft
