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

/// @file fixtures.hpp
/// The two bundled case studies, each as a component composition and as a
/// hand-written classic tree, with their scenario catalog.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cft/fault_tree.hpp"
#include "cft/model.hpp"

namespace cft::fixtures {

inline constexpr double kDefaultProbability = 0.01;

/// Situation display: sensor and GPS data, the GPS feed carried over two
/// redundant channels into a channel interface, combined in processing.
/// Tops "Lo", "pLo", "Err".
SystemModel situation_display_cft();
FaultTree situation_display_classic();

/// Cross-link redundancy: two channels whose switches exchange controller
/// losses through one cross link. Top "loss_of_actuation".
SystemModel crosslink_cft();
FaultTree crosslink_classic();

/// Cross-link variant in which switch A's channel output feeds back into
/// its own communication input.
SystemModel crosslink_self_feeding();

/// Names of the shipped source files and their contents.
struct SourceFile {
  std::string_view file_name;
  std::string_view text;
};
std::vector<SourceFile> source_files();
std::string_view situation_display_source();
std::string_view crosslink_source();

/// Block names inside the source files.
inline constexpr std::string_view kSituationDisplaySystem = "SituationDisplay";
inline constexpr std::string_view kSituationDisplayTree =
    "ClassicSituationDisplay";
inline constexpr std::string_view kCrossLinkSystem = "CrossLink";
inline constexpr std::string_view kCrossLinkTree = "ClassicCrossLink";

struct CatalogScenario {
  std::string fixture;  // source file name
  std::string top;
  std::vector<std::string> failed;
  bool expected = false;
  /// "case-study" (stated in the case-study description), "derived" (hand
  /// traced and checked by the oracles) or "construction".
  std::string provenance;
  std::string note;
};

const std::vector<CatalogScenario>& scenario_catalog();

/// The catalog as a JSON document (the shipped scenarios.json).
std::string scenario_catalog_json();

}  // namespace cft::fixtures
