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

/// @file dsl.hpp
/// The `.cft` model language.
///
///     component <Name> {
///       in  <port>: <mode>(, <mode>)*
///       out <port>: <mode>(, <mode>)*
///       event <name> p=<decimal>
///       <port>.<mode> = <expr>
///     }
///     system <Name> {
///       inst <name>: <ComponentName>
///       connect <inst>.<port> -> <inst>.<port>
///       top <inst>.<port>.<mode> as "<top-event-name>"
///     }
///     tree <Name> {
///       event <name> p=<decimal>
///       <node> = <expr>
///       top <node> as "<top-event-name>"
///     }
///
/// `#` starts a comment. Line breaks are ordinary whitespace: statements are
/// delimited by their leading keyword or by the end of an expression. Names
/// in tree blocks may be dotted (`ecu_A.fail`). Expression operators are
/// `&` (AND) over `^` (binary XOR) over `|` (OR), with parentheses.

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cft/fault_tree.hpp"
#include "cft/model.hpp"
#include "cft/validate.hpp"

namespace cft {

struct SystemBlock {
  std::string name;
  std::vector<Instance> instances;
  std::vector<Connection> connections;
  std::vector<TopEvent> tops;
  SourceLoc loc;

  friend bool operator==(const SystemBlock&, const SystemBlock&) = default;
};

struct TreeNodeDef {
  std::string name;
  Expr expr = Expr::ref("");
  SourceLoc loc;

  friend bool operator==(const TreeNodeDef&, const TreeNodeDef&) = default;
};

struct TreeTop {
  std::string node;
  std::string name;
  SourceLoc loc;

  friend bool operator==(const TreeTop&, const TreeTop&) = default;
};

struct TreeBlock {
  std::string name;
  std::vector<BasicEvent> events;
  std::vector<TreeNodeDef> nodes;
  std::vector<TreeTop> tops;
  SourceLoc loc;

  friend bool operator==(const TreeBlock&, const TreeBlock&) = default;
};

using Declaration = std::variant<ComponentDefinition, SystemBlock, TreeBlock>;

struct SourceModel {
  std::vector<Declaration> declarations;

  const ComponentDefinition* find_component(std::string_view name) const;
  const SystemBlock* find_system(std::string_view name) const;
  const TreeBlock* find_tree(std::string_view name) const;

  friend bool operator==(const SourceModel&, const SourceModel&) = default;
};

/// Throws ParseError at the first offending token.
SourceModel parse_model(std::string_view text);

/// Canonical text: declaration order kept, ports then events then logic
/// inside components, two-space indentation, one blank line between blocks.
std::string serialize_model(const SourceModel& model);

/// Resolves a system block against the components of the same file. Only
/// referenced definitions are included, in file order; unknown ones are left
/// for validate_system to report. Throws UnknownNameError for an unknown
/// system name.
SystemModel to_system_model(const SourceModel& model, std::string_view system);

/// Builds the tree; nodes may be declared in any order. Throws ModelError
/// with a location for unresolved names, cyclic node definitions, duplicate
/// names and malformed gates.
FaultTree to_fault_tree(const TreeBlock& tree);
FaultTree to_fault_tree(const SourceModel& model, std::string_view tree);

/// Tree block for a fault tree. Labelled gates become named nodes; other
/// gates are inlined unless they are roots or shared, in which case they get
/// a generated `g<id>` name.
/// Throws ModelError if an event has no probability.
TreeBlock to_tree_block(const FaultTree& ft, std::string name);

/// Duplicate declaration names, each component, each system and each tree.
ValidationReport validate_source(const SourceModel& model);

}  // namespace cft
