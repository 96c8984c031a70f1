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

/// @file validate.hpp
/// Structural checks for component definitions and system models.

#pragma once

#include <string>
#include <vector>

#include "cft/error.hpp"
#include "cft/model.hpp"

namespace cft {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  /// Model element the finding is about, e.g. `Channel` or `ch1.i.loss`.
  std::string where;
  std::string message;
  SourceLoc loc;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return error_count() == 0; }
  std::size_t error_count() const;
  std::size_t warning_count() const;
  void add(Severity severity, std::string where, std::string message,
           SourceLoc loc = {});
  void append(const ValidationReport& other);
};

/// Raised by operations that require a valid model.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Errors for broken definition invariants; warnings for unused input modes.
ValidationReport validate_definition(const ComponentDefinition& def);

/// Checks wiring, top events, and acyclicity of the (instance, port, mode)
/// dependency graph. Instance-level cycles are allowed as long as no mode
/// depends on itself; a cycle is reported with its full path.
ValidationReport validate_system(const SystemModel& sys);

/// The system-level part of validate_system alone: duplicate definitions,
/// instances, wiring, top events and cycles. Definitions themselves are not
/// re-checked.
ValidationReport validate_composition(const SystemModel& sys);

}  // namespace cft
