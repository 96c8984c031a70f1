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

/// @file analysis.hpp
/// Qualitative and quantitative analysis of flattened fault trees, plus the
/// brute-force oracles used to check them.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cft/bdd.hpp"
#include "cft/fault_tree.hpp"
#include "cft/model.hpp"
#include "cft/simd/kernels.hpp"

namespace cft {

/// Absolute tolerance for comparing probabilities from different routes.
inline constexpr double kProbabilityTolerance = 1e-12;

inline constexpr std::size_t kMaxBruteForceProbabilityEvents = 24;
inline constexpr std::size_t kMaxBruteForceCutSetEvents = 20;

using CutSet = std::vector<std::string>;  // sorted event names

struct CutSetReport {
  std::string top;
  /// Sorted by size, then lexicographically.
  std::vector<CutSet> cut_sets;

  friend bool operator==(const CutSetReport&, const CutSetReport&) = default;
};

struct ProbabilityResult {
  std::string top;
  double exact = 0.0;
  /// Sum of minimal cut set probabilities; coherent cones only.
  std::optional<double> rare_event_upper_bound;
};

struct EquivalenceWitness {
  Scenario scenario;
  bool left = false;
  bool right = false;
};

struct EquivalenceVerdict {
  std::string left_top;
  std::string right_top;
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
};

/// Canonical order: size first, then lexicographic.
void sort_cut_sets(std::vector<CutSet>& sets);

/// Exact probability from the BDD under the default order.
/// Throws MissingProbability if a cone event lacks a probability.
ProbabilityResult top_event_probability(const FaultTree& ft,
                                        std::string_view top);

/// Exact probability of an already built BDD, reading probabilities from ft.
double bdd_probability(const FaultTree& ft, const Bdd& bdd);

/// Throws NonCoherentTree if an XOR gate is reachable from the top.
CutSetReport minimal_cut_sets(const FaultTree& ft, std::string_view top);

/// Throws NamespaceMismatch when the two cones' event sets differ.
EquivalenceVerdict check_equivalence(const FaultTree& left,
                                     const FaultTree& right,
                                     std::string_view left_top,
                                     std::string_view right_top);

/// Sum over all 2^N assignments of the cone's events. Never approximates:
/// throws TooManyEvents above kMaxBruteForceProbabilityEvents.
double brute_force_probability(
    const FaultTree& ft, std::string_view top,
    const simd::KernelTable& k = simd::active_kernels());

/// Minimal elements among all satisfying assignments. Throws
/// NonCoherentTree or TooManyEvents (above kMaxBruteForceCutSetEvents).
CutSetReport brute_force_cut_sets(
    const FaultTree& ft, std::string_view top,
    const simd::KernelTable& k = simd::active_kernels());

}  // namespace cft
