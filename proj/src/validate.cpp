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

#include "cft/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cft {

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [](const Diagnostic& d) { return d.severity == Severity::Error; }));
}

std::size_t ValidationReport::warning_count() const {
  return diagnostics.size() - error_count();
}

void ValidationReport::add(Severity severity, std::string where,
                           std::string message, SourceLoc loc) {
  diagnostics.push_back({severity, std::move(where), std::move(message), loc});
}

void ValidationReport::append(const ValidationReport& other) {
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                     other.diagnostics.end());
}

namespace {

std::string first_error(const ValidationReport& report) {
  for (const auto& d : report.diagnostics)
    if (d.severity == Severity::Error) return d.where + ": " + d.message;
  return "invalid model";
}

void check_name(ValidationReport& r, const std::string& where,
                const std::string& kind, const std::string& name,
                SourceLoc loc) {
  if (!is_identifier(name))
    r.add(Severity::Error, where, "invalid " + kind + " name '" + name + "'", loc);
  else if (is_reserved_word(name))
    r.add(Severity::Error, where,
          kind + " name '" + name + "' is a reserved word", loc);
}

void check_expr(ValidationReport& r, const ComponentDefinition& def,
                const std::string& where, const Expr& e, SourceLoc loc,
                std::set<std::pair<std::string, std::string>>& used) {
  if (!e.is_ref()) {
    const auto n = e.operands().size();
    if (e.op() == GateOp::Xor ? n != 2 : n < 2)
      r.add(Severity::Error, where,
            std::string(to_string(e.op())) + " gate with " + std::to_string(n) +
                " operands",
            loc);
    for (const auto& child : e.operands())
      check_expr(r, def, where, child, loc, used);
    return;
  }
  auto parts = split_path(e.name());
  if (parts.size() == 1) {
    if (def.find_event(parts[0]) == nullptr)
      r.add(Severity::Error, where, "unresolved reference " + e.name(), loc);
    return;
  }
  if (parts.size() == 2) {
    const auto* port = def.find_port(parts[0]);
    if (port != nullptr && port->direction == Direction::Output) {
      r.add(Severity::Error, where,
            "output mode " + e.name() + " referenced; outputs may only "
            "depend on input modes and events",
            loc);
      return;
    }
    if (port != nullptr && port->has_mode(parts[1])) {
      used.emplace(std::string(parts[0]), std::string(parts[1]));
      return;
    }
  }
  r.add(Severity::Error, where, "unresolved reference " + e.name(), loc);
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(first_error(report)), report_(std::move(report)) {}

ValidationReport validate_definition(const ComponentDefinition& def) {
  ValidationReport r;
  const std::string& where = def.name;
  check_name(r, where, "component", def.name, def.loc);

  std::set<std::string> port_names;
  for (const auto& port : def.ports) {
    const auto pw = def.name + "." + port.name;
    check_name(r, pw, "port", port.name, port.loc);
    if (!port_names.insert(port.name).second)
      r.add(Severity::Error, pw, "duplicate port " + port.name, port.loc);
    if (port.modes.empty())
      r.add(Severity::Error, pw, "port declares no failure modes", port.loc);
    std::set<std::string> modes;
    for (const auto& mode : port.modes) {
      check_name(r, pw, "failure mode", mode, port.loc);
      if (!modes.insert(mode).second)
        r.add(Severity::Error, pw, "duplicate failure mode " + mode, port.loc);
    }
  }

  std::set<std::string> event_names;
  for (const auto& ev : def.events) {
    const auto ew = def.name + "." + ev.name;
    check_name(r, ew, "event", ev.name, ev.loc);
    if (!event_names.insert(ev.name).second)
      r.add(Severity::Error, ew, "duplicate event " + ev.name, ev.loc);
    if (ev.probability && !(*ev.probability >= 0.0 && *ev.probability <= 1.0))
      r.add(Severity::Error, ew, "probability outside [0,1]", ev.loc);
  }

  std::set<std::pair<std::string, std::string>> defined;
  std::set<std::pair<std::string, std::string>> used;
  for (const auto& out : def.outputs) {
    const auto ow = def.name + "." + out.port + "." + out.mode;
    const auto* port = def.find_port(out.port);
    if (port == nullptr || port->direction != Direction::Output) {
      r.add(Severity::Error, ow, "logic for unknown output port " + out.port,
            out.loc);
    } else if (!port->has_mode(out.mode)) {
      r.add(Severity::Error, ow,
            "logic for unknown failure mode " + out.port + "." + out.mode,
            out.loc);
    } else if (!defined.emplace(out.port, out.mode).second) {
      r.add(Severity::Error, ow,
            "duplicate logic for " + out.port + "." + out.mode, out.loc);
    }
    check_expr(r, def, ow, out.expr, out.loc, used);
  }

  for (const auto& port : def.ports) {
    for (const auto& mode : port.modes) {
      const auto mw = def.name + "." + port.name + "." + mode;
      if (port.direction == Direction::Output) {
        if (!defined.count({port.name, mode}))
          r.add(Severity::Error, mw,
                "missing logic for output mode " + port.name + "." + mode,
                port.loc);
      } else if (!used.count({port.name, mode})) {
        r.add(Severity::Warning, mw,
              "unused input mode " + port.name + "." + mode, port.loc);
      }
    }
  }
  return r;
}

namespace {

// Dependency graph over (instance, port, mode) triples.
class ModeGraph {
 public:
  std::size_t node(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, names_.size());
    if (inserted) {
      names_.push_back(name);
      edges_.emplace_back();
    }
    return it->second;
  }

  void edge(std::size_t from, std::size_t to) { edges_[from].push_back(to); }

  // Every cycle closed by a back edge of one deterministic DFS.
  std::vector<std::vector<std::string>> cycles() const {
    enum : char { kWhite, kGrey, kBlack };
    std::vector<char> color(names_.size(), kWhite);
    std::vector<std::vector<std::string>> found;
    std::vector<std::size_t> path;
    std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next edge

    for (std::size_t start = 0; start < names_.size(); ++start) {
      if (color[start] != kWhite) continue;
      stack.emplace_back(start, 0);
      path.push_back(start);
      color[start] = kGrey;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next == edges_[v].size()) {
          color[v] = kBlack;
          stack.pop_back();
          path.pop_back();
          continue;
        }
        auto w = edges_[v][next++];
        if (color[w] == kWhite) {
          color[w] = kGrey;
          stack.emplace_back(w, 0);
          path.push_back(w);
        } else if (color[w] == kGrey) {
          auto pos = std::find(path.begin(), path.end(), w);
          std::vector<std::string> cycle;
          for (auto it = pos; it != path.end(); ++it) cycle.push_back(names_[*it]);
          // Start at the smallest name so the report does not depend on
          // where the search entered the cycle.
          std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                      cycle.end());
          cycle.push_back(cycle.front());
          found.push_back(std::move(cycle));
        }
      }
    }
    return found;
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> edges_;
};

std::string join_path(const std::vector<std::string>& nodes) {
  std::string out;
  for (const auto& n : nodes) {
    if (!out.empty()) out += " -> ";
    out += n;
  }
  return out;
}

}  // namespace

ValidationReport validate_system(const SystemModel& sys) {
  ValidationReport r;
  for (const auto& def : sys.definitions) r.append(validate_definition(def));
  r.append(validate_composition(sys));
  return r;
}

ValidationReport validate_composition(const SystemModel& sys) {
  ValidationReport r;

  std::set<std::string> def_names;
  for (const auto& def : sys.definitions)
    if (!def_names.insert(def.name).second)
      r.add(Severity::Error, def.name, "duplicate component " + def.name, def.loc);

  std::map<std::string, const ComponentDefinition*> inst_defs;
  for (const auto& inst : sys.instances) {
    check_name(r, inst.name, "instance", inst.name, inst.loc);
    const auto* def = sys.find_definition(inst.definition);
    if (def == nullptr)
      r.add(Severity::Error, inst.name,
            "unknown component " + inst.definition, inst.loc);
    if (!inst_defs.emplace(inst.name, def).second)
      r.add(Severity::Error, inst.name, "duplicate instance " + inst.name,
            inst.loc);
  }

  auto resolve = [&](const PortRef& ref, Direction dir, SourceLoc loc,
                     const std::string& where) -> const Port* {
    auto it = inst_defs.find(ref.instance);
    if (it == inst_defs.end()) {
      r.add(Severity::Error, where, "unknown instance " + ref.instance, loc);
      return nullptr;
    }
    if (it->second == nullptr) return nullptr;
    const auto* port = it->second->find_port(ref.port);
    if (port == nullptr) {
      r.add(Severity::Error, where, "unknown port " + ref.str(), loc);
      return nullptr;
    }
    if (port->direction != dir) {
      r.add(Severity::Error, where,
            ref.str() + (dir == Direction::Output ? " is not an output port"
                                                  : " is not an input port"),
            loc);
      return nullptr;
    }
    return port;
  };

  ModeGraph graph;
  for (const auto& inst : sys.instances) {
    const auto* def = inst_defs[inst.name];
    if (def == nullptr) continue;
    for (const auto& port : def->ports)
      for (const auto& mode : port.modes)
        graph.node(inst.name + "." + port.name + "." + mode);
  }

  std::map<std::pair<std::string, std::string>, std::size_t> driven;
  for (const auto& c : sys.connections) {
    const auto where = c.source.str() + " -> " + c.target.str();
    const auto* src = resolve(c.source, Direction::Output, c.loc, where);
    const auto* dst = resolve(c.target, Direction::Input, c.loc, where);
    if (dst != nullptr) ++driven[{c.target.instance, c.target.port}];
    if (src == nullptr || dst == nullptr) continue;
    if (src->modes != dst->modes) {
      r.add(Severity::Error, where,
            "failure mode mismatch between " + c.source.str() + " and " +
                c.target.str(),
            c.loc);
      continue;
    }
    for (const auto& mode : src->modes)
      graph.edge(graph.node(c.source.str() + "." + mode),
                 graph.node(c.target.str() + "." + mode));
  }

  for (const auto& inst : sys.instances) {
    const auto* def = inst_defs[inst.name];
    if (def == nullptr) continue;
    for (const auto& port : def->ports) {
      if (port.direction != Direction::Input) continue;
      auto count = driven[{inst.name, port.name}];
      const auto pw = inst.name + "." + port.name;
      if (count == 0) {
        for (const auto& mode : port.modes)
          r.add(Severity::Error, pw + "." + mode,
                "undriven input mode " + pw + "." + mode, inst.loc);
      } else if (count > 1) {
        r.add(Severity::Error, pw,
              "input port " + pw + " driven by " + std::to_string(count) +
                  " connections",
              inst.loc);
      }
    }
    for (const auto& out : def->outputs) {
      const auto* port = def->find_port(out.port);
      if (port == nullptr || !port->has_mode(out.mode)) continue;
      const auto to = graph.node(inst.name + "." + out.port + "." + out.mode);
      std::vector<std::string> refs;
      out.expr.collect_refs(refs);
      for (const auto& ref : refs) {
        auto parts = split_path(ref);
        if (parts.size() != 2) continue;
        const auto* in = def->find_port(parts[0]);
        if (in == nullptr || in->direction != Direction::Input ||
            !in->has_mode(parts[1]))
          continue;
        graph.edge(graph.node(inst.name + "." + ref), to);
      }
    }
  }

  std::set<std::string> top_names;
  for (const auto& top : sys.tops) {
    const auto where = "top \"" + top.name + "\"";
    if (top.name.empty())
      r.add(Severity::Error, where, "empty top event name", top.loc);
    if (!top_names.insert(top.name).second)
      r.add(Severity::Error, where, "duplicate top event " + top.name, top.loc);
    auto port = resolve({top.instance, top.port}, Direction::Output, top.loc,
                        where);
    if (port != nullptr && !port->has_mode(top.mode))
      r.add(Severity::Error, where,
            "unknown failure mode " + top.instance + "." + top.port + "." +
                top.mode,
            top.loc);
  }

  for (const auto& cycle : graph.cycles())
    r.add(Severity::Error, cycle.front(),
          "dependency cycle: " + join_path(cycle));
  return r;
}

}  // namespace cft
