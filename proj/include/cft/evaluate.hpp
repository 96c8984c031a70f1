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

/// @file evaluate.hpp
/// Scenario evaluation on systems and fault trees.

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cft/fault_tree.hpp"
#include "cft/model.hpp"

namespace cft {

/// Value of the top event with the scenario's events failed and all others
/// working. Throws UnknownNameError for an unknown top or event name.
bool evaluate_scenario(const FaultTree& ft, const Scenario& scenario,
                       std::string_view top);

/// Same contract on a system, evaluated directly on the component logic and
/// connections (no flattening). Throws ValidationError for invalid systems.
bool evaluate_scenario(const SystemModel& sys, const Scenario& scenario,
                       std::string_view top);

/// Bit-parallel evaluator over a validated system: each 64-bit word carries
/// 64 independent scenarios.
class SystemEvaluator {
 public:
  explicit SystemEvaluator(const SystemModel& sys);
  ~SystemEvaluator();
  SystemEvaluator(SystemEvaluator&&) noexcept;
  SystemEvaluator& operator=(SystemEvaluator&&) noexcept;

  /// Qualified event names; index i selects `event_words[i]` below.
  const std::vector<std::string>& events() const;
  const std::vector<std::string>& tops() const;

  /// Evaluates one top event for 64 scenarios at once.
  std::uint64_t evaluate(std::span<const std::uint64_t> event_words,
                         std::size_t top) const;

  /// Truth table over the given variables: bit k of the result is the top
  /// value when variable i is failed iff bit i of k is set. Events not in
  /// `vars` stay working. At most 24 variables.
  std::vector<std::uint64_t> truth_table(
      std::string_view top, std::span<const std::string> vars) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cft
