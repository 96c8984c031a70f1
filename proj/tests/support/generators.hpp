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

// Random model generators for property tests.

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "cft/dsl.hpp"
#include "cft/fault_tree.hpp"
#include "cft/model.hpp"

namespace cft::testing {

using Rng = std::mt19937_64;

struct TreeShape {
  int max_events = 10;
  int max_depth = 5;
  bool allow_xor = false;
};

/// Random DAG tree with one top "top". Events are e0..e(n-1); subtrees and
/// events are reused at random so repeated events are common.
FaultTree random_tree(Rng& rng, const TreeShape& shape = {});

/// Random layered, valid system with at most `max_events` basic events and
/// one to three top events. Contains an occasional XOR.
SystemModel random_system(Rng& rng, int max_events = 16);

/// Random source file: the components and system of a random system plus one
/// tree block.
SourceModel random_source(Rng& rng);

}  // namespace cft::testing
