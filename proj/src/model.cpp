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

#include "cft/model.hpp"

#include <algorithm>
#include <array>

namespace cft {

std::string_view to_string(GateOp op) {
  switch (op) {
    case GateOp::And:
      return "and";
    case GateOp::Or:
      return "or";
    case GateOp::Xor:
      return "xor";
  }
  return "?";
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return alpha(c) || digit(c); });
}

bool is_reserved_word(std::string_view text) {
  static constexpr std::array<std::string_view, 10> kWords = {
      "component", "system", "tree",    "in",  "out",
      "event",     "inst",   "connect", "top", "as"};
  return std::find(kWords.begin(), kWords.end(), text) != kWords.end();
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto dot = path.find('.', start);
    if (dot == std::string_view::npos) {
      parts.push_back(path.substr(start));
      return parts;
    }
    parts.push_back(path.substr(start, dot - start));
    start = dot + 1;
  }
}

Expr Expr::ref(std::string name) {
  Expr e;
  e.kind_ = Kind::Ref;
  e.name_ = std::move(name);
  return e;
}

Expr Expr::ref(std::string_view port, std::string_view mode) {
  std::string name;
  name.reserve(port.size() + mode.size() + 1);
  name.append(port).append(".").append(mode);
  return ref(std::move(name));
}

Expr Expr::gate(GateOp op, std::vector<Expr> operands) {
  Expr e;
  e.kind_ = Kind::Gate;
  e.op_ = op;
  e.operands_ = std::move(operands);
  return e;
}

Expr Expr::xor_of(Expr lhs, Expr rhs) {
  std::vector<Expr> operands;
  operands.push_back(std::move(lhs));
  operands.push_back(std::move(rhs));
  return gate(GateOp::Xor, std::move(operands));
}

std::size_t Expr::gate_count() const {
  if (is_ref()) return 0;
  std::size_t n = 1;
  for (const auto& child : operands_) n += child.gate_count();
  return n;
}

void Expr::collect_refs(std::vector<std::string>& out) const {
  if (is_ref()) {
    out.push_back(name_);
    return;
  }
  for (const auto& child : operands_) child.collect_refs(out);
}

bool Port::has_mode(std::string_view mode) const {
  return std::find(modes.begin(), modes.end(), mode) != modes.end();
}

const Port* ComponentDefinition::find_port(std::string_view port) const {
  for (const auto& p : ports)
    if (p.name == port) return &p;
  return nullptr;
}

const BasicEvent* ComponentDefinition::find_event(
    std::string_view event) const {
  for (const auto& e : events)
    if (e.name == event) return &e;
  return nullptr;
}

const OutputLogic* ComponentDefinition::find_output(
    std::string_view port, std::string_view mode) const {
  for (const auto& o : outputs)
    if (o.port == port && o.mode == mode) return &o;
  return nullptr;
}

const ComponentDefinition* SystemModel::find_definition(
    std::string_view name) const {
  for (const auto& d : definitions)
    if (d.name == name) return &d;
  return nullptr;
}

const Instance* SystemModel::find_instance(std::string_view name) const {
  for (const auto& i : instances)
    if (i.name == name) return &i;
  return nullptr;
}

const TopEvent* SystemModel::find_top(std::string_view name) const {
  for (const auto& t : tops)
    if (t.name == name) return &t;
  return nullptr;
}

std::vector<std::string> SystemModel::qualified_events() const {
  std::vector<std::string> names;
  for (const auto& inst : instances) {
    const auto* def = find_definition(inst.definition);
    if (def == nullptr) continue;
    for (const auto& ev : def->events) names.push_back(inst.name + "." + ev.name);
  }
  return names;
}

}  // namespace cft
