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

/// @file error.hpp
/// Exception types thrown by the library.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cft {

/// Position in model source text. Line and column are 1-based; 0 means unknown.
struct SourceLoc {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  bool known() const { return line != 0; }

  // Locations never participate in structural equality of model objects.
  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

/// Base of every error raised by cftkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in model text; carries the position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceLoc loc);

  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  SourceLoc loc_;
};

/// Semantic error while converting or building a model (unresolved node,
/// duplicate name, malformed gate).
class ModelError : public Error {
 public:
  explicit ModelError(const std::string& message, SourceLoc loc = {})
      : Error(message), loc_(loc) {}

  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

/// Reference to a top event or basic event that does not exist.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// Qualitative analysis requested on a cone that contains an XOR gate.
class NonCoherentTree : public Error {
 public:
  using Error::Error;
};

/// A basic event in the analysed cone has no probability.
class MissingProbability : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle refused to enumerate a cone that is too large.
class TooManyEvents : public Error {
 public:
  using Error::Error;
};

/// Variable order is not a permutation of the tree's basic events.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// Equivalence requested over cones with different basic-event sets.
class NamespaceMismatch : public Error {
 public:
  NamespaceMismatch(std::vector<std::string> only_left,
                    std::vector<std::string> only_right);

  const std::vector<std::string>& only_left() const { return only_left_; }
  const std::vector<std::string>& only_right() const { return only_right_; }

 private:
  std::vector<std::string> only_left_;
  std::vector<std::string> only_right_;
};

}  // namespace cft
