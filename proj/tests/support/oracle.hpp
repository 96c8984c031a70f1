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

// Reference implementations used to check the library. They share no code
// with the library beyond the model types and favour obviousness over speed.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "cft/fault_tree.hpp"
#include "cft/model.hpp"

namespace cft::testing {

/// Recursive evaluation of a tree node.
bool oracle_eval(const FaultTree& ft, NodeId node,
                 const std::set<std::string>& failed);

/// Direct interpretation of a composed system: follows connections from the
/// top event's output mode back to basic events, without flattening.
bool oracle_eval(const SystemModel& sys, const std::string& top,
                 const std::set<std::string>& failed);

/// Sorted event names in the cone of `top`.
std::vector<std::string> oracle_events(const FaultTree& ft,
                                       const std::string& top);

/// Sum over all 2^n assignments of the cone events, in long double.
long double oracle_probability(const FaultTree& ft, const std::string& top);

/// Minimal cut sets by enumerating every subset and keeping the minimal
/// satisfying ones. Sorted like cft::sort_cut_sets.
std::vector<std::vector<std::string>> oracle_cut_sets(const FaultTree& ft,
                                                      const std::string& top);

/// Scenario made of the events whose bit is set in `mask`.
std::set<std::string> scenario_of(const std::vector<std::string>& events,
                                  std::uint64_t mask);

}  // namespace cft::testing
