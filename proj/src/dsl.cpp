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

// Serialization of source models and conversion to and from core types.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cft/dsl.hpp"
#include "cft/export.hpp"

namespace cft {
namespace {

int precedence(const Expr& e) {
  if (e.is_ref()) return 4;
  switch (e.op()) {
    case GateOp::Or:
      return 1;
    case GateOp::Xor:
      return 2;
    case GateOp::And:
      return 3;
  }
  return 0;
}

std::string_view symbol(GateOp op) {
  switch (op) {
    case GateOp::And:
      return " & ";
    case GateOp::Or:
      return " | ";
    case GateOp::Xor:
      return " ^ ";
  }
  return " ? ";
}

void write_expr(std::ostream& os, const Expr& e) {
  if (e.is_ref()) {
    os << e.name();
    return;
  }
  const int mine = precedence(e);
  bool first = true;
  for (const auto& child : e.operands()) {
    if (!first) os << symbol(e.op());
    first = false;
    // Equal precedence needs parentheses too: an unparenthesized same-op
    // child would be read back as part of this gate.
    const bool parens = !child.is_ref() && precedence(child) <= mine;
    if (parens) os << '(';
    write_expr(os, child);
    if (parens) os << ')';
  }
}

void write_modes(std::ostream& os, const std::vector<std::string>& modes) {
  for (std::size_t i = 0; i < modes.size(); ++i) os << (i ? ", " : "") << modes[i];
}

void write_event(std::ostream& os, const BasicEvent& ev) {
  if (!ev.probability)
    throw ModelError("event '" + ev.name +
                     "' has no probability; the model language requires one");
  os << "  event " << ev.name << " p=" << format_probability(*ev.probability)
     << '\n';
}

void write(std::ostream& os, const ComponentDefinition& def) {
  os << "component " << def.name << " {\n";
  for (const auto& port : def.ports) {
    os << (port.direction == Direction::Input ? "  in " : "  out ") << port.name
       << ": ";
    write_modes(os, port.modes);
    os << '\n';
  }
  for (const auto& ev : def.events) write_event(os, ev);
  for (const auto& out : def.outputs) {
    os << "  " << out.port << '.' << out.mode << " = ";
    write_expr(os, out.expr);
    os << '\n';
  }
  os << "}\n";
}

void write(std::ostream& os, const SystemBlock& sys) {
  os << "system " << sys.name << " {\n";
  for (const auto& inst : sys.instances)
    os << "  inst " << inst.name << ": " << inst.definition << '\n';
  for (const auto& c : sys.connections)
    os << "  connect " << c.source.str() << " -> " << c.target.str() << '\n';
  for (const auto& top : sys.tops)
    os << "  top " << top.instance << '.' << top.port << '.' << top.mode
       << " as \"" << top.name << "\"\n";
  os << "}\n";
}

void write(std::ostream& os, const TreeBlock& tree) {
  os << "tree " << tree.name << " {\n";
  for (const auto& ev : tree.events) write_event(os, ev);
  for (const auto& node : tree.nodes) {
    os << "  " << node.name << " = ";
    write_expr(os, node.expr);
    os << '\n';
  }
  for (const auto& top : tree.tops)
    os << "  top " << top.node << " as \"" << top.name << "\"\n";
  os << "}\n";
}

template <typename T>
const T* find_decl(const SourceModel& model, std::string_view name) {
  for (const auto& decl : model.declarations)
    if (const auto* d = std::get_if<T>(&decl); d && d->name == name) return d;
  return nullptr;
}

class TreeBuilder {
 public:
  explicit TreeBuilder(const TreeBlock& block) : block_(block) {}

  FaultTree build() && {
    for (const auto& ev : block_.events) {
      if (names_.count(ev.name))
        throw ModelError("duplicate name '" + ev.name + "'", ev.loc);
      names_.insert(ev.name);
      try {
        resolved_[ev.name] = tree_.add_event(ev.name, ev.probability);
      } catch (const ModelError& e) {
        throw ModelError(e.what(), ev.loc);
      }
    }
    for (std::size_t i = 0; i < block_.nodes.size(); ++i) {
      const auto& node = block_.nodes[i];
      if (!names_.insert(node.name).second)
        throw ModelError("duplicate name '" + node.name + "'", node.loc);
      defs_[node.name] = i;
    }
    for (const auto& node : block_.nodes) resolve(node.name, node.loc);
    for (const auto& top : block_.tops) {
      auto it = resolved_.find(top.node);
      if (it == resolved_.end())
        throw ModelError("top refers to unknown node '" + top.node + "'", top.loc);
      try {
        tree_.add_root(top.name, it->second);
      } catch (const ModelError& e) {
        throw ModelError(e.what(), top.loc);
      }
    }
    return std::move(tree_);
  }

 private:
  NodeId resolve(const std::string& name, SourceLoc use) {
    if (auto it = resolved_.find(name); it != resolved_.end()) return it->second;
    auto def = defs_.find(name);
    if (def == defs_.end())
      throw ModelError("unresolved reference " + name, use);
    const auto& node = block_.nodes[def->second];
    if (std::find(active_.begin(), active_.end(), name) != active_.end()) {
      std::string path;
      for (auto it = std::find(active_.begin(), active_.end(), name);
           it != active_.end(); ++it)
        path += *it + " -> ";
      throw ModelError("cyclic node definition: " + path + name, node.loc);
    }
    active_.push_back(name);
    const auto id = expand(node.expr, node.name, node.loc);
    active_.pop_back();
    resolved_[name] = id;
    return id;
  }

  NodeId expand(const Expr& e, const std::string& label, SourceLoc loc) {
    if (e.is_ref()) return resolve(e.name(), loc);
    std::vector<NodeId> children;
    for (const auto& child : e.operands()) children.push_back(expand(child, {}, loc));
    try {
      return tree_.add_gate(e.op(), std::move(children), label);
    } catch (const ModelError& err) {
      throw ModelError(err.what(), loc);
    }
  }

  const TreeBlock& block_;
  FaultTree tree_;
  std::set<std::string> names_;
  std::map<std::string, std::size_t> defs_;
  std::map<std::string, NodeId> resolved_;
  std::vector<std::string> active_;
};

}  // namespace

const ComponentDefinition* SourceModel::find_component(std::string_view name) const {
  return find_decl<ComponentDefinition>(*this, name);
}

const SystemBlock* SourceModel::find_system(std::string_view name) const {
  return find_decl<SystemBlock>(*this, name);
}

const TreeBlock* SourceModel::find_tree(std::string_view name) const {
  return find_decl<TreeBlock>(*this, name);
}

std::string serialize_model(const SourceModel& model) {
  std::ostringstream os;
  bool first = true;
  for (const auto& decl : model.declarations) {
    if (!first) os << '\n';
    first = false;
    std::visit([&](const auto& d) { write(os, d); }, decl);
  }
  return os.str();
}

SystemModel to_system_model(const SourceModel& model, std::string_view system) {
  const auto* block = model.find_system(system);
  if (block == nullptr)
    throw UnknownNameError("unknown system '" + std::string(system) + "'");
  SystemModel sys;
  sys.name = block->name;
  sys.instances = block->instances;
  sys.connections = block->connections;
  sys.tops = block->tops;
  std::set<std::string> used;
  for (const auto& inst : block->instances) used.insert(inst.definition);
  std::set<std::string> taken;
  for (const auto& decl : model.declarations) {
    const auto* def = std::get_if<ComponentDefinition>(&decl);
    if (def && used.count(def->name) && taken.insert(def->name).second)
      sys.definitions.push_back(*def);
  }
  return sys;
}

FaultTree to_fault_tree(const TreeBlock& tree) { return TreeBuilder(tree).build(); }

FaultTree to_fault_tree(const SourceModel& model, std::string_view tree) {
  const auto* block = model.find_tree(tree);
  if (block == nullptr)
    throw UnknownNameError("unknown tree '" + std::string(tree) + "'");
  return to_fault_tree(*block);
}

TreeBlock to_tree_block(const FaultTree& ft, std::string name) {
  TreeBlock block;
  block.name = std::move(name);

  std::vector<std::size_t> parents(ft.size(), 0);
  for (const auto& n : ft.nodes())
    for (auto c : n.children) ++parents[c];
  std::vector<char> is_root(ft.size(), 0);
  for (const auto& [top, id] : ft.roots()) is_root[id] = 1;

  std::set<std::string> taken;
  for (const auto& n : ft.nodes())
    if (!n.name.empty()) taken.insert(n.name);
  std::vector<std::string> names(ft.size());
  for (NodeId id = 0; id < ft.size(); ++id) {
    const auto& n = ft.node(id);
    if (!n.name.empty()) {
      names[id] = n.name;
    } else if (is_root[id] || parents[id] > 1) {
      std::string candidate = "g" + std::to_string(id);
      while (taken.count(candidate)) candidate += "_";
      taken.insert(candidate);
      names[id] = candidate;
    }
  }

  // Named nodes are referenced; anonymous gates are inlined.
  auto to_expr = [&](auto&& self, NodeId id, bool top_level) -> Expr {
    const auto& n = ft.node(id);
    if (!top_level && !names[id].empty()) return Expr::ref(names[id]);
    std::vector<Expr> operands;
    for (auto c : n.children) operands.push_back(self(self, c, false));
    return Expr::gate(n.op, std::move(operands));
  };

  for (NodeId id = 0; id < ft.size(); ++id) {
    const auto& n = ft.node(id);
    if (n.is_event()) {
      if (!n.probability)
        throw ModelError("event '" + n.name +
                         "' has no probability; the model language requires one");
      block.events.push_back({n.name, n.probability, {}});
    } else if (!names[id].empty()) {
      block.nodes.push_back({names[id], to_expr(to_expr, id, true), {}});
    }
  }
  for (const auto& [top, id] : ft.roots()) block.tops.push_back({names[id], top, {}});
  return block;
}

ValidationReport validate_source(const SourceModel& model) {
  ValidationReport r;
  std::set<std::string> components, systems, trees;
  for (const auto& decl : model.declarations) {
    if (const auto* def = std::get_if<ComponentDefinition>(&decl)) {
      if (!components.insert(def->name).second)
        r.add(Severity::Error, def->name, "duplicate component " + def->name,
              def->loc);
      r.append(validate_definition(*def));
    } else if (const auto* sys = std::get_if<SystemBlock>(&decl)) {
      if (!systems.insert(sys->name).second) {
        r.add(Severity::Error, sys->name, "duplicate system " + sys->name,
              sys->loc);
        continue;
      }
      r.append(validate_composition(to_system_model(model, sys->name)));
    } else if (const auto* tree = std::get_if<TreeBlock>(&decl)) {
      if (!trees.insert(tree->name).second) {
        r.add(Severity::Error, tree->name, "duplicate tree " + tree->name,
              tree->loc);
        continue;
      }
      try {
        to_fault_tree(*tree);
      } catch (const ModelError& e) {
        r.add(Severity::Error, tree->name, e.what(), e.loc());
      }
    }
  }
  return r;
}

}  // namespace cft
