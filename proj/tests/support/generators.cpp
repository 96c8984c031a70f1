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

#include "generators.hpp"

#include <algorithm>

namespace cft::testing {
namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

double probability(Rng& rng) {
  // Mix of round and arbitrary values so serialization sees both.
  if (chance(rng, 0.3)) return uniform(rng, 0, 100) / 100.0;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

GateOp pick_op(Rng& rng, bool allow_xor) {
  if (allow_xor && chance(rng, 0.15)) return GateOp::Xor;
  return chance(rng, 0.5) ? GateOp::And : GateOp::Or;
}

Expr random_expr(Rng& rng, const std::vector<std::string>& leaves, int depth,
                 bool allow_xor) {
  if (depth == 0 || chance(rng, 0.3))
    return Expr::ref(leaves[uniform(rng, 0, int(leaves.size()) - 1)]);
  const GateOp op = pick_op(rng, allow_xor);
  const int arity = op == GateOp::Xor ? 2 : uniform(rng, 2, 3);
  std::vector<Expr> ops;
  for (int i = 0; i < arity; ++i)
    ops.push_back(random_expr(rng, leaves, depth - 1, allow_xor));
  return Expr::gate(op, std::move(ops));
}

}  // namespace

FaultTree random_tree(Rng& rng, const TreeShape& shape) {
  FaultTree ft;
  const int n = uniform(rng, 1, shape.max_events);
  std::vector<NodeId> events;
  for (int i = 0; i < n; ++i)
    events.push_back(ft.add_event("e" + std::to_string(i), probability(rng)));

  std::vector<NodeId> gates;
  auto build = [&](auto&& self, int depth) -> NodeId {
    if (depth == 0 || chance(rng, 0.25))
      return events[uniform(rng, 0, n - 1)];
    if (!gates.empty() && chance(rng, 0.15))
      return gates[uniform(rng, 0, int(gates.size()) - 1)];
    const GateOp op = pick_op(rng, shape.allow_xor);
    const int arity = op == GateOp::Xor ? 2 : uniform(rng, 2, 4);
    std::vector<NodeId> children;
    for (int i = 0; i < arity; ++i) children.push_back(self(self, depth - 1));
    const NodeId id = ft.add_gate(op, std::move(children));
    gates.push_back(id);
    return id;
  };
  NodeId root = build(build, shape.max_depth);
  ft.add_root("top", root);
  return ft;
}

SystemModel random_system(Rng& rng, int max_events) {
  const std::vector<std::string> modes = {"m0", "m1"};
  SystemModel sys;
  sys.name = "Random";

  // Source definition: no inputs, one event per mode.
  ComponentDefinition src;
  src.name = "Src";
  src.ports.push_back({"o", Direction::Output, modes, {}});
  src.events = {{"f0", probability(rng), {}}, {"f1", probability(rng), {}}};
  src.outputs.push_back({"o", "m0", Expr::ref("f0"), {}});
  src.outputs.push_back(
      {"o", "m1",
       chance(rng, 0.5) ? Expr::ref("f1")
                        : Expr::or_of({Expr::ref("f0"), Expr::ref("f1")}),
       {}});
  sys.definitions.push_back(src);

  // Stage definitions with one or two inputs and one or two outputs.
  const int stages = uniform(rng, 1, 3);
  for (int d = 0; d < stages; ++d) {
    ComponentDefinition def;
    def.name = "Stage" + std::to_string(d);
    const int inputs = uniform(rng, 1, 2);
    const int outputs = uniform(rng, 1, 2);
    const int events = uniform(rng, 0, 1);
    std::vector<std::string> leaves;
    for (int i = 0; i < inputs; ++i) {
      const auto port = "i" + std::to_string(i);
      def.ports.push_back({port, Direction::Input, modes, {}});
      for (const auto& m : modes) leaves.push_back(port + "." + m);
    }
    for (int q = 0; q < outputs; ++q)
      def.ports.push_back({"o" + std::to_string(q), Direction::Output, modes, {}});
    for (int e = 0; e < events; ++e) {
      def.events.push_back({"x" + std::to_string(e), probability(rng), {}});
      leaves.push_back("x" + std::to_string(e));
    }
    for (int q = 0; q < outputs; ++q)
      for (const auto& m : modes)
        def.outputs.push_back({"o" + std::to_string(q), m,
                               random_expr(rng, leaves, 3, true), {}});
    sys.definitions.push_back(def);
  }

  // Layered instances: sources first, then stages fed by earlier instances.
  struct Out {
    std::string inst, port;
  };
  std::vector<Out> outs;
  int budget = max_events;
  const int sources = uniform(rng, 1, 3);
  for (int s = 0; s < sources && budget >= 2; ++s) {
    const auto name = "s" + std::to_string(s);
    sys.instances.push_back({name, "Src", {}});
    outs.push_back({name, "o"});
    budget -= 2;
  }
  const int count = uniform(rng, 1, 8);
  for (int k = 0; k < count; ++k) {
    const auto& def = sys.definitions[uniform(rng, 1, stages)];
    if (int(def.events.size()) > budget) continue;
    budget -= int(def.events.size());
    const auto name = "n" + std::to_string(k);
    sys.instances.push_back({name, def.name, {}});
    for (const auto& port : def.ports) {
      if (port.direction == Direction::Input) {
        const auto& from = outs[uniform(rng, 0, int(outs.size()) - 1)];
        sys.connections.push_back({{from.inst, from.port}, {name, port.name}, {}});
      }
    }
    for (const auto& port : def.ports)
      if (port.direction == Direction::Output) outs.push_back({name, port.name});
  }

  const int tops = uniform(rng, 1, 3);
  for (int t = 0; t < tops; ++t) {
    const auto& o = outs[outs.size() - 1 - std::min<std::size_t>(t, outs.size() - 1)];
    const auto& mode = modes[uniform(rng, 0, 1)];
    const auto name = "top" + std::to_string(t);
    sys.tops.push_back({name, o.inst, o.port, mode, {}});
  }
  return sys;
}

SourceModel random_source(Rng& rng) {
  const auto sys = random_system(rng);
  SourceModel m;
  for (const auto& def : sys.definitions) m.declarations.emplace_back(def);
  m.declarations.emplace_back(
      SystemBlock{sys.name, sys.instances, sys.connections, sys.tops, {}});
  TreeShape shape;
  shape.allow_xor = true;
  m.declarations.emplace_back(to_tree_block(random_tree(rng, shape), "RandomTree"));
  return m;
}

}  // namespace cft::testing
