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

/// @file flatten.hpp

#pragma once

#include "cft/fault_tree.hpp"
#include "cft/model.hpp"

namespace cft {

/// Expands a system into a classic fault tree by tracing every top event
/// back through the failure propagation network.
///
/// Every basic event of every instance becomes an event node named
/// `instance.event` (instance order, then event order). Each reached
/// (instance, output port, mode) is expanded once and shared by all its
/// consumers; its top-level gate is labelled `instance.port.mode`. Outputs
/// whose logic is a bare reference map onto the referenced node.
///
/// Throws ValidationError when validate_system reports errors.
FaultTree flatten(const SystemModel& sys);

}  // namespace cft
