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

/// @file export.hpp
/// DOT rendering of fault trees and the JSON results document.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "cft/analysis.hpp"
#include "cft/fault_tree.hpp"
#include "cft/metrics.hpp"
#include "cft/validate.hpp"

namespace cft {

/// Outcome of one scenario evaluation.
struct ScenarioResult {
  std::string top;
  Scenario scenario;
  bool value = false;
};

/// A flattened or parsed tree, exported as nodes and roots.
struct TreeResult {
  std::string name;
  FaultTree tree;
};

using AnalysisResult =
    std::variant<ProbabilityResult, CutSetReport, EquivalenceVerdict,
                 MetricsReport, ScenarioResult, ValidationReport, TreeResult>;

/// Graphviz digraph of the top's cone: events as boxes labelled
/// `name\np=<prob>`, gates shaped by operator, edges child -> parent, each
/// shared node emitted once. Throws UnknownNameError for an unknown top.
std::string export_dot(const FaultTree& ft, std::string_view top);

/// `{"results":[...]}` with insertion-ordered keys and shortest round-trip
/// decimals.
std::string export_results_json(std::span<const AnalysisResult> results);

/// Shortest decimal text that reads back as the same double.
std::string format_probability(double value);

}  // namespace cft
