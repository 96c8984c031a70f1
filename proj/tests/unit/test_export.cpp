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

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "cft/analysis.hpp"
#include "cft/dsl.hpp"
#include "cft/evaluate.hpp"
#include "cft/export.hpp"
#include "cft/fixtures.hpp"
#include "cft/flatten.hpp"
#include "cft/metrics.hpp"
#include "doctest.h"

using namespace cft;

namespace {

// Compares against tests/golden/<name>; CFTKIT_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(CFTKIT_GOLDEN_DIR) + "/" + name;
  if (const char* update = std::getenv("CFTKIT_UPDATE_GOLDEN"); update && *update == '1') {
    std::ofstream(path, std::ios::binary) << actual;
  }
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK_MESSAGE(buf.str() == actual, "golden mismatch: " << name);
}

std::size_t count(const std::string& text, const std::regex& re) {
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                       std::sregex_iterator());
}

std::string bundle(const SystemModel& sys, const FaultTree& classic,
                   const Scenario& scenario, const std::string& scenario_top) {
  const auto ft = flatten(sys);
  std::vector<AnalysisResult> results;
  results.emplace_back(validate_system(sys));
  for (const auto& [top, id] : ft.roots()) {
    results.emplace_back(top_event_probability(ft, top));
    results.emplace_back(minimal_cut_sets(ft, top));
    results.emplace_back(check_equivalence(ft, classic, top, top));
  }
  results.emplace_back(model_metrics(sys));
  results.emplace_back(ScenarioResult{scenario_top, scenario,
                                      evaluate_scenario(sys, scenario, scenario_top)});
  return export_results_json(results) + "\n";
}

}  // namespace

TEST_CASE("DOT for a single gate") {
  FaultTree ft;
  const auto a = ft.add_event("a", 0.1);
  const auto b = ft.add_event("b", 0.2);
  ft.add_root("top", ft.add_gate(GateOp::And, {a, b}));
  const auto dot = export_dot(ft, "top");
  CHECK(dot.starts_with("digraph \"top\" {"));
  CHECK(count(dot, std::regex(R"(\bn\d+ \[)")) == 3);
  CHECK(count(dot, std::regex(R"(n\d+ -> n\d+)")) == 2);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("label=\"a\\np=0.1\"") != std::string::npos);
  CHECK(dot.find("AND") != std::string::npos);
  CHECK_THROWS_AS(export_dot(ft, "nope"), UnknownNameError);
}

TEST_CASE("DOT renders shared nodes once") {
  const auto ft = flatten(fixtures::crosslink_cft());
  const auto dot = export_dot(ft, "loss_of_actuation");
  const auto cl = ft.find_event("crosslink.cl_int");
  REQUIRE(cl);
  const std::string id = "n" + std::to_string(*cl);
  CHECK(count(dot, std::regex("\\b" + id + " \\[")) == 1);
  CHECK(count(dot, std::regex("\\b" + id + " -> ")) >= 2);
  CHECK(export_dot(ft, "loss_of_actuation") == dot);
}

TEST_CASE("JSON results") {
  CHECK(export_results_json({}) == R"({"results":[]})");
  const std::vector<AnalysisResult> one = {ProbabilityResult{"T", 0.01, std::nullopt}};
  const auto text = export_results_json(one);
  CHECK(text.find(R"("top":"T","exact":0.01)") != std::string::npos);
  CHECK(format_probability(0.1 + 0.2) == "0.30000000000000004");
  CHECK(format_probability(0.375) == "0.375");
  CHECK(format_probability(0.0) == "0");
}

TEST_CASE("golden DOT files") {
  const auto sd = flatten(fixtures::situation_display_cft());
  for (auto top : {"Lo", "pLo", "Err"})
    check_golden(std::string("situation_display_") + top + ".dot", export_dot(sd, top));
  check_golden("situation_display_classic_Lo.dot",
               export_dot(fixtures::situation_display_classic(), "Lo"));
  const auto cl = flatten(fixtures::crosslink_cft());
  check_golden("crosslink.dot", export_dot(cl, "loss_of_actuation"));
  check_golden("crosslink_classic.dot",
               export_dot(fixtures::crosslink_classic(), "loss_of_actuation"));
}

TEST_CASE("golden analysis bundles") {
  const Scenario available{{"ecu_A.fail", "ccu_A.fail", "actor1_B.act_fail",
                            "actor2_B.act_fail"}};
  const auto cl = bundle(fixtures::crosslink_cft(), fixtures::crosslink_classic(),
                         available, "loss_of_actuation");
  check_golden("crosslink_bundle.json", cl);
  CHECK(cl == bundle(fixtures::crosslink_cft(), fixtures::crosslink_classic(),
                     available, "loss_of_actuation"));
  check_golden("situation_display_bundle.json",
               bundle(fixtures::situation_display_cft(),
                      fixtures::situation_display_classic(),
                      Scenario{{"sensor.s_loss", "gps.g_loss"}}, "Lo"));
}

TEST_CASE("canonical text ignores layout") {
  const std::string a = std::string(fixtures::crosslink_source());
  std::string b;
  for (char c : a) {
    b += c;
    if (c == '\n') b += "   \n\t";
  }
  CHECK(serialize_model(parse_model(a)) == serialize_model(parse_model(b)));
}
