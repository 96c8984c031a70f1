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

/// @file model.hpp
/// Component fault tree definitions and their composition into systems.
///
/// A ComponentDefinition is a reusable failure model: it declares typed
/// failure-mode ports, internal basic events, and one gate expression per
/// (output port, mode) pair. A SystemModel instantiates definitions and wires
/// output ports to input ports; failure modes travel along those wires.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cft/error.hpp"

namespace cft {

enum class GateOp { And, Or, Xor };

std::string_view to_string(GateOp op);

/// True for `[A-Za-z_][A-Za-z0-9_]*`.
bool is_identifier(std::string_view text);

/// True for words the model language reserves (`component`, `in`, ...).
bool is_reserved_word(std::string_view text);

/// Splits a dotted name into its segments; "a.b" -> {"a", "b"}.
std::vector<std::string_view> split_path(std::string_view path);

/// Gate expression over named references.
///
/// A reference names a basic event (`e`), an input-port mode (`port.mode`)
/// or, inside classic trees, an event or node by its (possibly dotted) name.
/// What a reference resolves to is decided by the context that owns it.
class Expr {
 public:
  enum class Kind { Ref, Gate };

  static Expr ref(std::string name);
  static Expr ref(std::string_view port, std::string_view mode);
  static Expr gate(GateOp op, std::vector<Expr> operands);
  static Expr and_of(std::vector<Expr> operands) {
    return gate(GateOp::And, std::move(operands));
  }
  static Expr or_of(std::vector<Expr> operands) {
    return gate(GateOp::Or, std::move(operands));
  }
  static Expr xor_of(Expr lhs, Expr rhs);

  Kind kind() const { return kind_; }
  bool is_ref() const { return kind_ == Kind::Ref; }
  /// Referenced name; only meaningful for Kind::Ref.
  const std::string& name() const { return name_; }
  /// Gate operator; only meaningful for Kind::Gate.
  GateOp op() const { return op_; }
  const std::vector<Expr>& operands() const { return operands_; }

  /// Number of gate operators in the expression.
  std::size_t gate_count() const;
  /// Appends every reference name, in left-to-right order.
  void collect_refs(std::vector<std::string>& out) const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  Expr() = default;

  Kind kind_ = Kind::Ref;
  std::string name_;
  GateOp op_ = GateOp::Or;
  std::vector<Expr> operands_;
};

enum class Direction { Input, Output };

struct Port {
  std::string name;
  Direction direction = Direction::Input;
  std::vector<std::string> modes;
  SourceLoc loc;

  bool has_mode(std::string_view mode) const;
  friend bool operator==(const Port&, const Port&) = default;
};

/// Atomic failure cause. The probability is per demand; events are
/// mutually independent.
struct BasicEvent {
  std::string name;
  std::optional<double> probability;
  SourceLoc loc;

  friend bool operator==(const BasicEvent&, const BasicEvent&) = default;
};

/// Gate logic of one (output port, mode) pair.
struct OutputLogic {
  std::string port;
  std::string mode;
  Expr expr = Expr::ref("");
  SourceLoc loc;

  friend bool operator==(const OutputLogic&, const OutputLogic&) = default;
};

struct ComponentDefinition {
  std::string name;
  std::vector<Port> ports;
  std::vector<BasicEvent> events;
  std::vector<OutputLogic> outputs;
  SourceLoc loc;

  const Port* find_port(std::string_view port) const;
  const BasicEvent* find_event(std::string_view event) const;
  const OutputLogic* find_output(std::string_view port,
                                 std::string_view mode) const;

  friend bool operator==(const ComponentDefinition&,
                         const ComponentDefinition&) = default;
};

struct Instance {
  std::string name;
  std::string definition;
  SourceLoc loc;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct PortRef {
  std::string instance;
  std::string port;

  std::string str() const { return instance + "." + port; }
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

/// Failure propagation wire from an output port to an input port.
struct Connection {
  PortRef source;
  PortRef target;
  SourceLoc loc;

  friend bool operator==(const Connection&, const Connection&) = default;
};

/// A named system-level top event bound to one output mode of one instance.
struct TopEvent {
  std::string name;
  std::string instance;
  std::string port;
  std::string mode;
  SourceLoc loc;

  friend bool operator==(const TopEvent&, const TopEvent&) = default;
};

struct SystemModel {
  std::string name;
  std::vector<ComponentDefinition> definitions;
  std::vector<Instance> instances;
  std::vector<Connection> connections;
  std::vector<TopEvent> tops;

  const ComponentDefinition* find_definition(std::string_view name) const;
  const Instance* find_instance(std::string_view name) const;
  const TopEvent* find_top(std::string_view name) const;

  /// Qualified names `instance.event` of every basic event, in instance
  /// then event declaration order.
  std::vector<std::string> qualified_events() const;

  friend bool operator==(const SystemModel&, const SystemModel&) = default;
};

/// A set of failed basic events, identified by qualified name.
struct Scenario {
  std::set<std::string> failed;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace cft
