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

#include "cft/analysis.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cft/bitslice.hpp"
#include "cft/evaluate.hpp"

namespace cft {
namespace {

std::vector<double> probabilities_in_order(const FaultTree& ft,
                                           const std::vector<std::string>& order,
                                           NodeId root) {
  std::vector<double> p(order.size(), 0.0);
  std::set<std::string> needed;
  for (auto id : ft.cone_events(root)) needed.insert(ft.node(id).name);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& n = ft.node(*ft.find_event(order[i]));
    if (n.probability) {
      p[i] = *n.probability;
    } else if (needed.count(n.name)) {
      throw MissingProbability("basic event '" + n.name +
                               "' has no probability");
    }
  }
  return p;
}

void require_coherent(const FaultTree& ft, NodeId root, std::string_view top) {
  if (!ft.is_coherent(root))
    throw NonCoherentTree("top event '" + std::string(top) +
                          "' depends on an XOR gate; minimal cut sets are "
                          "defined for AND/OR trees only");
}

std::vector<std::string> cone_event_names(const FaultTree& ft, NodeId root) {
  std::vector<std::string> names;
  for (auto id : ft.cone_events(root)) names.push_back(ft.node(id).name);
  return names;
}

double cut_set_probability(const FaultTree& ft, const CutSet& set) {
  double p = 1.0;
  for (const auto& name : set) p *= *ft.node(*ft.find_event(name)).probability;
  return p;
}

}  // namespace

void sort_cut_sets(std::vector<CutSet>& sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end(), [](const CutSet& a, const CutSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

double bdd_probability(const FaultTree& ft, const Bdd& bdd) {
  // Probabilities are only required for events the function depends on;
  // the BDD's cone is bounded by the tree's full event list.
  std::vector<double> p(bdd.order().size(), 0.0);
  std::set<std::uint32_t> used;
  std::vector<BddRef> stack{bdd.root()};
  std::set<BddRef> seen;
  while (!stack.empty()) {
    auto r = stack.back();
    stack.pop_back();
    if (BddManager::is_terminal(r) || !seen.insert(r).second) continue;
    const auto& n = bdd.manager().node(r);
    used.insert(n.var);
    stack.push_back(n.low);
    stack.push_back(n.high);
  }
  for (auto var : used) {
    const auto& name = bdd.order()[var];
    auto id = ft.find_event(name);
    if (!id) throw UnknownNameError("unknown basic event '" + name + "'");
    const auto& prob = ft.node(*id).probability;
    if (!prob)
      throw MissingProbability("basic event '" + name + "' has no probability");
    p[var] = *prob;
  }
  return bdd.manager().probability(bdd.root(), p);
}

ProbabilityResult top_event_probability(const FaultTree& ft,
                                        std::string_view top) {
  const auto root = ft.root(top);
  const auto bdd = build_bdd(ft, top);
  // Every cone event needs a probability, even one the function ignores.
  probabilities_in_order(ft, bdd.order(), root);

  ProbabilityResult result;
  result.top = std::string(top);
  result.exact = bdd_probability(ft, bdd);
  if (ft.is_coherent(root)) {
    double bound = 0.0;
    for (const auto& set : minimal_cut_sets(ft, top).cut_sets)
      bound += cut_set_probability(ft, set);
    result.rare_event_upper_bound = bound;
  }
  return result;
}

CutSetReport minimal_cut_sets(const FaultTree& ft, std::string_view top) {
  const auto root = ft.root(top);
  require_coherent(ft, root, top);
  const auto bdd = build_bdd(ft, top);
  CutSetReport report;
  report.top = std::string(top);
  for (const auto& solution : bdd.manager().minimal_solutions(bdd.root())) {
    CutSet set;
    for (auto var : solution) set.push_back(bdd.order()[var]);
    report.cut_sets.push_back(std::move(set));
  }
  sort_cut_sets(report.cut_sets);
  return report;
}

EquivalenceVerdict check_equivalence(const FaultTree& left,
                                     const FaultTree& right,
                                     std::string_view left_top,
                                     std::string_view right_top) {
  const auto left_root = left.root(left_top);
  const auto right_root = right.root(right_top);

  auto left_names = cone_event_names(left, left_root);
  auto right_names = cone_event_names(right, right_root);
  std::sort(left_names.begin(), left_names.end());
  std::sort(right_names.begin(), right_names.end());
  if (left_names != right_names) {
    std::vector<std::string> only_left, only_right;
    std::set_difference(left_names.begin(), left_names.end(),
                        right_names.begin(), right_names.end(),
                        std::back_inserter(only_left));
    std::set_difference(right_names.begin(), right_names.end(),
                        left_names.begin(), left_names.end(),
                        std::back_inserter(only_right));
    throw NamespaceMismatch(std::move(only_left), std::move(only_right));
  }

  BddManager manager(left.first_occurrence_order(left_root));
  const auto a = manager.from_tree(left, left_root);
  const auto b = manager.from_tree(right, right_root);

  EquivalenceVerdict verdict;
  verdict.left_top = std::string(left_top);
  verdict.right_top = std::string(right_top);
  verdict.equivalent = a == b;
  if (!verdict.equivalent) {
    const auto diff = manager.apply(GateOp::Xor, a, b);
    const auto assignment = *manager.satisfying_assignment(diff);
    EquivalenceWitness witness;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (assignment[i]) witness.scenario.failed.insert(manager.order()[i]);
    witness.left = evaluate_scenario(left, witness.scenario, left_top);
    witness.right = evaluate_scenario(right, witness.scenario, right_top);
    verdict.witness = std::move(witness);
  }
  return verdict;
}

double brute_force_probability(const FaultTree& ft, std::string_view top,
                               const simd::KernelTable& k) {
  const auto root = ft.root(top);
  const auto vars = cone_event_names(ft, root);
  if (vars.size() > kMaxBruteForceProbabilityEvents)
    throw TooManyEvents("brute-force probability limited to " +
                        std::to_string(kMaxBruteForceProbabilityEvents) +
                        " events, cone has " + std::to_string(vars.size()));
  const auto p = probabilities_in_order(ft, vars, root);
  const auto table = exhaustive_truth_table(ft, top, vars, k);

  // Scenario weight = product over variables of p or (1 - p). The low six
  // variables select the bit inside a word, the rest select the word.
  const std::size_t low = std::min<std::size_t>(vars.size(), 6);
  double bit_weight[64];
  for (std::size_t j = 0; j < 64; ++j) {
    double w = j < (std::size_t{1} << low) ? 1.0 : 0.0;
    for (std::size_t i = 0; i < low; ++i) w *= (j >> i) & 1 ? p[i] : 1.0 - p[i];
    bit_weight[j] = w;
  }
  std::vector<double> word_weight(table.size());
  for (std::size_t w = 0; w < table.size(); ++w) {
    double weight = 1.0;
    for (std::size_t i = 6; i < vars.size(); ++i)
      weight *= (w >> (i - 6)) & 1 ? p[i] : 1.0 - p[i];
    word_weight[w] = weight;
  }
  return k.masked_weight_sum(table.data(), word_weight.data(), table.size(),
                             bit_weight);
}

CutSetReport brute_force_cut_sets(const FaultTree& ft, std::string_view top,
                                  const simd::KernelTable& k) {
  const auto root = ft.root(top);
  require_coherent(ft, root, top);
  const auto vars = cone_event_names(ft, root);
  if (vars.size() > kMaxBruteForceCutSetEvents)
    throw TooManyEvents("brute-force cut sets limited to " +
                        std::to_string(kMaxBruteForceCutSetEvents) +
                        " events, cone has " + std::to_string(vars.size()));
  const auto table = exhaustive_truth_table(ft, top, vars, k);
  auto satisfied = [&](std::uint64_t s) {
    return (table[s >> 6] >> (s & 63)) & 1;
  };

  CutSetReport report;
  report.top = std::string(top);
  for (std::size_t w = 0; w < table.size(); ++w) {
    for (auto bits = table[w]; bits != 0; bits &= bits - 1) {
      const std::uint64_t s = (std::uint64_t{w} << 6) |
                              static_cast<std::uint64_t>(std::countr_zero(bits));
      // Monotone function: minimal iff no single removal still satisfies.
      bool minimal = true;
      for (auto rest = s; rest != 0 && minimal; rest &= rest - 1)
        if (satisfied(s & ~(rest & (~rest + 1)))) minimal = false;
      if (!minimal) continue;
      CutSet set;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if ((s >> i) & 1) set.push_back(vars[i]);
      report.cut_sets.push_back(std::move(set));
    }
  }
  sort_cut_sets(report.cut_sets);
  return report;
}

}  // namespace cft
