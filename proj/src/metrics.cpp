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

#include "cft/metrics.hpp"

#include <algorithm>

#include "cft/flatten.hpp"

namespace cft {

MetricsReport model_metrics(const SystemModel& sys) {
  const auto tree = flatten(sys);  // validates

  MetricsReport m;
  m.system = sys.name;
  for (const auto& def : sys.definitions) {
    DefinitionMetrics d;
    d.name = def.name;
    d.ports = def.ports.size();
    for (const auto& port : def.ports) {
      d.modes += port.modes.size();
      if (port.direction == Direction::Output)
        for (const auto& mode : port.modes)
          d.declared_output_modes.push_back(port.name + "." + mode);
    }
    d.output_modes = d.declared_output_modes.size();
    d.events = def.events.size();
    for (const auto& out : def.outputs) d.gates += out.expr.gate_count();
    d.reuse = static_cast<std::size_t>(
        std::count_if(sys.instances.begin(), sys.instances.end(),
                      [&](const Instance& i) { return i.definition == def.name; }));
    m.definitions.push_back(std::move(d));
  }
  m.instances = sys.instances.size();
  m.top_events = sys.tops.size();
  m.flattened_nodes = tree.size();
  for (const auto& [top, id] : tree.roots())
    m.flattened_depth = std::max(m.flattened_depth, tree.depth(id));
  std::vector<std::size_t> parents(tree.size(), 0);
  for (const auto& n : tree.nodes())
    for (auto c : n.children) ++parents[c];
  m.shared_nodes = static_cast<std::size_t>(
      std::count_if(parents.begin(), parents.end(), [](auto p) { return p >= 2; }));
  return m;
}

}  // namespace cft
