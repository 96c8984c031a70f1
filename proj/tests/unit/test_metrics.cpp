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

#include <algorithm>

#include "cft/fault_tree.hpp"
#include "cft/fixtures.hpp"
#include "cft/metrics.hpp"
#include "doctest.h"

using namespace cft;

namespace {

const DefinitionMetrics& def(const MetricsReport& m, std::string_view name) {
  auto it = std::find_if(m.definitions.begin(), m.definitions.end(),
                         [&](const auto& d) { return d.name == name; });
  REQUIRE(it != m.definitions.end());
  return *it;
}

}  // namespace

TEST_CASE("situation display metrics") {
  const auto m = model_metrics(fixtures::situation_display_cft());
  CHECK(m.system == "SituationDisplay");
  CHECK(m.instances == 6);
  CHECK(m.top_events == 3);
  CHECK(def(m, "Channel").reuse == 2);
  CHECK(def(m, "Processing").declared_output_modes ==
        std::vector<std::string>{"o.lo", "o.plo", "o.err"});
  const auto declaring_plo = std::count_if(
      m.definitions.begin(), m.definitions.end(), [](const auto& d) {
        return std::find(d.declared_output_modes.begin(), d.declared_output_modes.end(),
                         "o.plo") != d.declared_output_modes.end();
      });
  CHECK(declaring_plo == 1);
  CHECK(m.shared_nodes > 0);
}

TEST_CASE("cross-link metrics") {
  const auto m = model_metrics(fixtures::crosslink_cft());
  CHECK(m.instances == 14);
  CHECK(def(m, "Actor").reuse == 4);
  CHECK(def(m, "Controller").reuse == 4);
  CHECK(def(m, "Switch").reuse == 2);
  CHECK(def(m, "CrossLink").reuse == 1);
  CHECK(def(m, "Switch").gates == 2);
  CHECK(def(m, "Switch").ports == 6);
}

TEST_CASE("the classic Lo and pLo trees differ in one gate operator") {
  const auto ft = fixtures::situation_display_classic();
  CHECK(count_operator_differences(ft, ft.root("Lo"), ft, ft.root("pLo")) == 1u);
  CHECK(count_operator_differences(ft, ft.root("Lo"), ft, ft.root("Lo")) == 0u);
  CHECK(count_operator_differences(ft, ft.root("Lo"), ft, ft.root("Err")) == std::nullopt);
}

TEST_CASE("fault tree structure helpers") {
  const auto ft = fixtures::situation_display_classic();
  CHECK(same_structure(ft, fixtures::situation_display_classic()));
  CHECK_FALSE(same_structure(ft, ft.root("Lo"), ft, ft.root("pLo")));
  CHECK(ft.depth(ft.root("Lo")) == 5);
  const auto lo = ft.restricted_to({"Lo"});
  CHECK(lo.roots().size() == 1);
  CHECK(lo.events().size() == 6);
  CHECK(same_structure(lo, lo.root("Lo"), ft, ft.root("Lo")));
  CHECK_THROWS_AS(FaultTree().add_gate(GateOp::Xor, {}), ModelError);
  FaultTree t;
  t.add_event("a", 0.5);
  CHECK_THROWS_AS(t.add_event("a", 0.5), ModelError);
  CHECK_THROWS_AS(t.add_event("b", 1.5), ModelError);
  CHECK_THROWS_AS(t.add_gate(GateOp::And, {0}), ModelError);
  CHECK_THROWS_AS(t.add_gate(GateOp::And, {0, 7}), ModelError);
}
