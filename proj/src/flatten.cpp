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

#include "cft/flatten.hpp"

#include <map>

#include "cft/validate.hpp"

namespace cft {
namespace {

class Flattener {
 public:
  explicit Flattener(const SystemModel& sys) : sys_(sys) {
    for (const auto& inst : sys.instances) {
      const auto* def = sys.find_definition(inst.definition);
      defs_[inst.name] = def;
      for (const auto& ev : def->events) {
        auto name = inst.name + "." + ev.name;
        events_[name] = tree_.add_event(name, ev.probability);
      }
    }
    for (const auto& c : sys.connections) drivers_[c.target.str()] = c.source;
  }

  FaultTree run() && {
    for (const auto& top : sys_.tops)
      tree_.add_root(top.name, expand_output(top.instance, top.port, top.mode));
    return std::move(tree_);
  }

 private:
  NodeId expand_output(const std::string& inst, const std::string& port,
                       const std::string& mode) {
    auto key = inst + "." + port + "." + mode;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto* logic = defs_.at(inst)->find_output(port, mode);
    auto id = expand(inst, logic->expr, key);
    memo_.emplace(std::move(key), id);
    return id;
  }

  NodeId expand(const std::string& inst, const Expr& e,
                const std::string& label) {
    if (e.is_ref()) {
      auto parts = split_path(e.name());
      if (parts.size() == 1) return events_.at(inst + "." + e.name());
      const auto& src = drivers_.at(inst + "." + std::string(parts[0]));
      return expand_output(src.instance, src.port, std::string(parts[1]));
    }
    std::vector<NodeId> children;
    children.reserve(e.operands().size());
    for (const auto& child : e.operands()) children.push_back(expand(inst, child, {}));
    return tree_.add_gate(e.op(), std::move(children), label);
  }

  const SystemModel& sys_;
  FaultTree tree_;
  std::map<std::string, const ComponentDefinition*> defs_;
  std::map<std::string, NodeId> events_;
  std::map<std::string, PortRef> drivers_;
  std::map<std::string, NodeId> memo_;
};

}  // namespace

FaultTree flatten(const SystemModel& sys) {
  auto report = validate_system(sys);
  if (!report.ok()) throw ValidationError(std::move(report));
  return Flattener(sys).run();
}

}  // namespace cft
