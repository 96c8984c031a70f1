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

#include "cft/bitslice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cft/error.hpp"

namespace cft {
namespace {

// Bit j of word w is set iff bit `var` of (64*w + j) is set.
constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

constexpr std::size_t kBatchWords = 64;

}  // namespace

std::size_t truth_table_words(std::size_t n) {
  return n <= 6 ? 1 : std::size_t{1} << (n - 6);
}

void fill_variable_row(std::size_t var, std::uint64_t first_word,
                       std::span<std::uint64_t> row) {
  if (var < 6) {
    std::fill(row.begin(), row.end(), kLowPatterns[var]);
    return;
  }
  for (std::size_t w = 0; w < row.size(); ++w)
    row[w] = ((first_word + w) >> (var - 6)) & 1 ? ~std::uint64_t{0} : 0;
}

BitProgram::BitProgram(const FaultTree& ft, NodeId root,
                       std::span<const std::string> vars)
    : variable_count_(vars.size()) {
  std::map<NodeId, std::uint32_t> slot;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto id = ft.find_event(vars[i]);
    if (!id) throw UnknownNameError("unknown basic event '" + vars[i] + "'");
    slot.emplace(*id, static_cast<std::uint32_t>(i));
  }
  auto next = static_cast<std::uint32_t>(vars.size());
  for (auto id : ft.cone(root)) {
    const auto& n = ft.node(id);
    if (n.is_event()) {
      if (!slot.count(id))
        throw UnknownNameError("variable list misses basic event '" + n.name +
                               "'");
      continue;
    }
    const auto dst = next++;
    steps_.push_back({n.op, dst, slot.at(n.children[0]), slot.at(n.children[1])});
    for (std::size_t c = 2; c < n.children.size(); ++c)
      steps_.push_back({n.op, dst, dst, slot.at(n.children[c])});
    slot.emplace(id, dst);
  }
  slot_count_ = next;
  result_ = slot.at(root);
}

const std::uint64_t* BitProgram::run(const simd::KernelTable& k,
                                     std::span<std::uint64_t> rows,
                                     std::size_t width) const {
  if (rows.size() < slot_count_ * width)
    throw std::invalid_argument("row buffer too small for bit program");
  auto row = [&](std::uint32_t s) { return rows.data() + s * width; };
  for (const auto& step : steps_) {
    switch (step.op) {
      case GateOp::And:
        k.and_rows(row(step.dst), row(step.lhs), row(step.rhs), width);
        break;
      case GateOp::Or:
        k.or_rows(row(step.dst), row(step.lhs), row(step.rhs), width);
        break;
      case GateOp::Xor:
        k.xor_rows(row(step.dst), row(step.lhs), row(step.rhs), width);
        break;
    }
  }
  return row(result_);
}

std::vector<std::uint64_t> exhaustive_truth_table(
    const FaultTree& ft, std::string_view top,
    std::span<const std::string> vars, const simd::KernelTable& k) {
  if (vars.size() > kMaxExhaustiveVariables)
    throw TooManyEvents("exhaustive enumeration limited to " +
                        std::to_string(kMaxExhaustiveVariables) +
                        " variables, got " + std::to_string(vars.size()));
  BitProgram program(ft, ft.root(top), vars);
  const auto words = truth_table_words(vars.size());
  const auto width = std::min(words, kBatchWords);
  std::vector<std::uint64_t> rows(program.slot_count() * width);
  std::vector<std::uint64_t> table(words);
  for (std::size_t first = 0; first < words; first += width) {
    for (std::size_t v = 0; v < vars.size(); ++v)
      fill_variable_row(v, first,
                        std::span<std::uint64_t>(rows.data() + v * width, width));
    const auto* result = program.run(k, rows, width);
    std::copy(result, result + width, table.begin() + static_cast<std::ptrdiff_t>(first));
  }
  if (vars.size() < 6)
    table[0] &= (std::uint64_t{1} << (std::uint64_t{1} << vars.size())) - 1;
  return table;
}

}  // namespace cft
