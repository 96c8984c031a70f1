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

#include "cft/export.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace cft {
namespace {

using Json = nlohmann::ordered_json;

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string_view dot_shape(GateOp op) {
  switch (op) {
    case GateOp::And:
      return "invtrapezium";
    case GateOp::Or:
      return "ellipse";
    case GateOp::Xor:
      return "diamond";
  }
  return "ellipse";
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(c - ('a' <= c && c <= 'z' ? 32 : 0));
  return out;
}

Json to_json(const Scenario& s) {
  Json failed = Json::array();
  for (const auto& name : s.failed) failed.push_back(name);
  return failed;
}

Json to_json(const ProbabilityResult& r) {
  Json j;
  j["kind"] = "probability";
  j["top"] = r.top;
  j["exact"] = r.exact;
  if (r.rare_event_upper_bound)
    j["rare_event_upper_bound"] = *r.rare_event_upper_bound;
  return j;
}

Json to_json(const CutSetReport& r) {
  Json j;
  j["kind"] = "cut_sets";
  j["top"] = r.top;
  j["count"] = r.cut_sets.size();
  Json sets = Json::array();
  for (const auto& set : r.cut_sets) sets.push_back(set);
  j["cut_sets"] = std::move(sets);
  return j;
}

Json to_json(const EquivalenceVerdict& v) {
  Json j;
  j["kind"] = "equivalence";
  j["left"] = v.left_top;
  j["right"] = v.right_top;
  j["equivalent"] = v.equivalent;
  if (v.witness) {
    Json w;
    w["failed"] = to_json(v.witness->scenario);
    w["left"] = v.witness->left;
    w["right"] = v.witness->right;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const MetricsReport& m) {
  Json j;
  j["kind"] = "metrics";
  j["system"] = m.system;
  Json defs = Json::array();
  for (const auto& d : m.definitions) {
    Json dj;
    dj["name"] = d.name;
    dj["ports"] = d.ports;
    dj["modes"] = d.modes;
    dj["events"] = d.events;
    dj["gates"] = d.gates;
    dj["output_modes"] = d.output_modes;
    dj["reuse"] = d.reuse;
    dj["declared_output_modes"] = d.declared_output_modes;
    defs.push_back(std::move(dj));
  }
  j["definitions"] = std::move(defs);
  j["instances"] = m.instances;
  j["top_events"] = m.top_events;
  j["flattened_nodes"] = m.flattened_nodes;
  j["flattened_depth"] = m.flattened_depth;
  j["shared_nodes"] = m.shared_nodes;
  return j;
}

Json to_json(const ScenarioResult& r) {
  Json j;
  j["kind"] = "evaluation";
  j["top"] = r.top;
  j["failed"] = to_json(r.scenario);
  j["value"] = r.value;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["kind"] = "validation";
  j["ok"] = r.ok();
  j["errors"] = r.error_count();
  j["warnings"] = r.warning_count();
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) {
    Json dj;
    dj["severity"] = d.severity == Severity::Error ? "error" : "warning";
    dj["where"] = d.where;
    dj["message"] = d.message;
    if (d.loc.known()) {
      dj["line"] = d.loc.line;
      dj["column"] = d.loc.column;
    }
    diags.push_back(std::move(dj));
  }
  j["diagnostics"] = std::move(diags);
  return j;
}

Json to_json(const TreeResult& t) {
  Json j;
  j["kind"] = "fault_tree";
  j["name"] = t.name;
  Json nodes = Json::array();
  for (NodeId id = 0; id < t.tree.size(); ++id) {
    const auto& n = t.tree.node(id);
    Json nj;
    nj["id"] = id;
    if (n.is_event()) {
      nj["type"] = "event";
      nj["name"] = n.name;
      if (n.probability)
        nj["p"] = *n.probability;
      else
        nj["p"] = nullptr;
    } else {
      nj["type"] = to_string(n.op);
      if (!n.name.empty()) nj["name"] = n.name;
      nj["children"] = n.children;
    }
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  Json roots = Json::array();
  for (const auto& [top, id] : t.tree.roots()) {
    Json rj;
    rj["top"] = top;
    rj["node"] = id;
    roots.push_back(std::move(rj));
  }
  j["roots"] = std::move(roots);
  return j;
}

}  // namespace

std::string format_probability(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string export_dot(const FaultTree& ft, std::string_view top) {
  const auto root = ft.root(top);
  const auto cone = ft.cone(root);
  std::map<NodeId, std::size_t> ids;
  for (auto id : cone) ids.emplace(id, ids.size());

  std::ostringstream os;
  os << "digraph \"" << dot_escape(top) << "\" {\n";
  os << "  rankdir=BT;\n";
  for (auto id : cone) {
    const auto& n = ft.node(id);
    os << "  n" << ids[id] << " [";
    if (n.is_event()) {
      os << "shape=box, label=\"" << dot_escape(n.name) << "\\np="
         << (n.probability ? format_probability(*n.probability) : "?") << "\"";
    } else {
      os << "shape=" << dot_shape(n.op) << ", label=\"";
      if (!n.name.empty()) os << dot_escape(n.name) << "\\n";
      os << upper(to_string(n.op)) << "\"";
    }
    os << "];\n";
  }
  for (auto id : cone)
    for (auto c : ft.node(id).children)
      os << "  n" << ids[c] << " -> n" << ids[id] << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_results_json(std::span<const AnalysisResult> results) {
  Json doc;
  Json list = Json::array();
  for (const auto& r : results)
    list.push_back(std::visit([](const auto& v) { return to_json(v); }, r));
  doc["results"] = std::move(list);
  return doc.dump();
}

}  // namespace cft
