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

#include <fstream>
#include <sstream>

#include "../support/oracle.hpp"
#include "cft/dsl.hpp"
#include "cft/evaluate.hpp"
#include "cft/fixtures.hpp"
#include "cft/flatten.hpp"
#include "doctest.h"

using namespace cft;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("embedded sources match the shipped files") {
  for (const auto& f : fixtures::source_files())
    CHECK(read(std::string(CFTKIT_FIXTURE_DIR) + "/" + std::string(f.file_name)) == f.text);
  CHECK(read(std::string(CFTKIT_FIXTURE_DIR) + "/scenarios.json") ==
        fixtures::scenario_catalog_json());
}

TEST_CASE("scenario catalog holds on every representation") {
  for (const auto& s : fixtures::scenario_catalog()) {
    const bool cl = s.fixture == "crosslink.cft";
    const auto sys = cl ? fixtures::crosslink_cft() : fixtures::situation_display_cft();
    const auto classic = cl ? fixtures::crosslink_classic() : fixtures::situation_display_classic();
    const auto text = cl ? fixtures::crosslink_source() : fixtures::situation_display_source();
    const auto parsed = parse_model(text);
    const auto parsed_tree = to_fault_tree(parsed, cl ? fixtures::kCrossLinkTree
                                                      : fixtures::kSituationDisplayTree);
    const Scenario scenario{{s.failed.begin(), s.failed.end()}};
    INFO(s.fixture << " " << s.top << " " << s.note);
    CHECK(evaluate_scenario(sys, scenario, s.top) == s.expected);
    CHECK(evaluate_scenario(flatten(sys), scenario, s.top) == s.expected);
    CHECK(evaluate_scenario(classic, scenario, s.top) == s.expected);
    CHECK(evaluate_scenario(parsed_tree, scenario, s.top) == s.expected);
    CHECK(testing::oracle_eval(sys, s.top, scenario.failed) == s.expected);
  }
}

TEST_CASE("self-feeding variant differs only in switch A") {
  const auto good = fixtures::crosslink_cft();
  const auto bad = fixtures::crosslink_self_feeding();
  CHECK(bad.definitions.size() == good.definitions.size() + 1);
  CHECK(bad.find_instance("sw_A")->definition == "SwitchLoopback");
  CHECK(bad.find_instance("sw_B")->definition == "Switch");
  int differing = 0;
  for (std::size_t i = 0; i < good.connections.size(); ++i)
    differing += !(good.connections[i] == bad.connections[i]);
  CHECK(differing == 1);
}
