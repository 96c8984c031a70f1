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

/// @file bitslice.hpp
/// Exhaustive enumeration of fault tree scenarios, 64 per machine word.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cft/fault_tree.hpp"
#include "cft/simd/kernels.hpp"

namespace cft {

/// Largest variable count any exhaustive routine accepts.
inline constexpr std::size_t kMaxExhaustiveVariables = 24;

/// A top event's cone compiled to straight-line row operations.
class BitProgram {
 public:
  /// `vars` must contain every event of the cone; other tree events are
  /// treated as working. Throws UnknownNameError otherwise.
  BitProgram(const FaultTree& ft, NodeId root,
             std::span<const std::string> vars);

  std::size_t variable_count() const { return variable_count_; }
  std::size_t slot_count() const { return slot_count_; }

  /// `rows` holds slot_count() rows of `width` words. The first
  /// variable_count() rows are inputs; returns the row holding the result.
  const std::uint64_t* run(const simd::KernelTable& k,
                           std::span<std::uint64_t> rows,
                           std::size_t width) const;

 private:
  struct Step {
    GateOp op;
    std::uint32_t dst;
    std::uint32_t lhs;
    std::uint32_t rhs;
  };

  std::size_t variable_count_ = 0;
  std::size_t slot_count_ = 0;
  std::uint32_t result_ = 0;
  std::vector<Step> steps_;
};

/// Number of words in a truth table over `n` variables.
std::size_t truth_table_words(std::size_t n);

/// Fills bit-pattern rows for variable `var` covering scenarios
/// [64*first_word, 64*(first_word+width)).
void fill_variable_row(std::size_t var, std::uint64_t first_word,
                       std::span<std::uint64_t> row);

/// Bit k is the top value when variable i is failed iff bit i of k is set.
/// Bits past 2^n are zero. Throws TooManyEvents beyond
/// kMaxExhaustiveVariables.
std::vector<std::uint64_t> exhaustive_truth_table(
    const FaultTree& ft, std::string_view top,
    std::span<const std::string> vars,
    const simd::KernelTable& k = simd::active_kernels());

}  // namespace cft
