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

/// @file metrics.hpp
/// Size and reuse figures of a composed system.

#pragma once

#include <string>
#include <vector>

#include "cft/model.hpp"

namespace cft {

struct DefinitionMetrics {
  std::string name;
  std::size_t ports = 0;
  std::size_t modes = 0;  // summed over all ports
  std::size_t events = 0;
  std::size_t gates = 0;
  std::size_t output_modes = 0;
  std::size_t reuse = 0;  // number of instances
  /// `port.mode` of every output mode, declaration order.
  std::vector<std::string> declared_output_modes;

  friend bool operator==(const DefinitionMetrics&,
                         const DefinitionMetrics&) = default;
};

struct MetricsReport {
  std::string system;
  std::vector<DefinitionMetrics> definitions;
  std::size_t instances = 0;
  std::size_t top_events = 0;
  std::size_t flattened_nodes = 0;
  std::size_t flattened_depth = 0;   // max over roots, in edges
  std::size_t shared_nodes = 0;      // nodes referenced by >= 2 gate edges

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Throws ValidationError for invalid systems.
MetricsReport model_metrics(const SystemModel& sys);

}  // namespace cft
