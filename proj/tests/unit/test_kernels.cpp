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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "../support/generators.hpp"
#include "../support/oracle.hpp"
#include "cft/analysis.hpp"
#include "cft/bitslice.hpp"
#include "cft/simd/kernels.hpp"
#include "doctest.h"

using namespace cft;
using simd::Backend;

namespace {

std::vector<std::uint64_t> random_row(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = rng();
  return v;
}

std::vector<const simd::KernelTable*> available() {
  std::vector<const simd::KernelTable*> out = {&simd::scalar_kernels()};
  if (simd::backend_available(Backend::Avx2)) out.push_back(&simd::kernels(Backend::Avx2));
  return out;
}

}  // namespace

TEST_CASE("dispatch") {
  CHECK(simd::backend_available(Backend::Scalar));
  CHECK(simd::kernels(Backend::Scalar).backend == Backend::Scalar);
  CHECK(simd::to_string(Backend::Avx2) == "avx2");
  const auto& active = simd::active_kernels();
  CHECK(simd::backend_available(active.backend));
  if (!simd::backend_available(Backend::Avx2))
    CHECK_THROWS_AS(simd::kernels(Backend::Avx2), std::invalid_argument);
  MESSAGE("active backend: " << simd::to_string(active.backend));
}

TEST_CASE("row kernels match the scalar reference") {
  std::mt19937_64 rng(3);
  const auto& ref = simd::scalar_kernels();
  for (const auto* k : available()) {
    // Odd lengths exercise the vector tails.
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 63u, 64u, 130u}) {
      const auto a = random_row(rng, n);
      const auto b = random_row(rng, n);
      std::vector<std::uint64_t> got(n), want(n);
      k->and_rows(got.data(), a.data(), b.data(), n);
      for (std::size_t i = 0; i < n; ++i) want[i] = a[i] & b[i];
      CHECK(got == want);
      k->or_rows(got.data(), a.data(), b.data(), n);
      for (std::size_t i = 0; i < n; ++i) want[i] = a[i] | b[i];
      CHECK(got == want);
      k->xor_rows(got.data(), a.data(), b.data(), n);
      for (std::size_t i = 0; i < n; ++i) want[i] = a[i] ^ b[i];
      CHECK(got == want);

      auto alias = a;
      k->and_rows(alias.data(), alias.data(), b.data(), n);
      ref.and_rows(got.data(), a.data(), b.data(), n);
      CHECK(alias == got);

      std::uint64_t pop = 0;
      for (auto x : a) pop += std::popcount(x);
      CHECK(k->popcount_rows(a.data(), n) == pop);
    }
  }
}

TEST_CASE("masked weight sum matches a direct sum") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto* k : available()) {
    for (std::size_t n : {0u, 1u, 2u, 5u, 16u, 33u}) {
      const auto mask = random_row(rng, n);
      std::vector<double> ww(n);
      for (auto& w : ww) w = u(rng);
      double bw[64];
      for (auto& w : bw) w = u(rng);
      long double want = 0;
      for (std::size_t w = 0; w < n; ++w)
        for (int j = 0; j < 64; ++j)
          if (mask[w] >> j & 1) want += static_cast<long double>(ww[w]) * bw[j];
      const double got = k->masked_weight_sum(mask.data(), ww.data(), n, bw);
      CHECK(std::abs(got - static_cast<double>(want)) <= 1e-12 * (1 + std::abs(double(want))));
    }
  }
}

TEST_CASE("variable rows") {
  std::vector<std::uint64_t> row(4);
  fill_variable_row(0, 0, row);
  CHECK(row[0] == 0xAAAAAAAAAAAAAAAAull);
  fill_variable_row(5, 0, row);
  CHECK(row[0] == 0xFFFFFFFF00000000ull);
  fill_variable_row(6, 0, row);
  CHECK(row == std::vector<std::uint64_t>{0, ~0ull, 0, ~0ull});
  fill_variable_row(7, 4, row);  // words 4..7
  CHECK(row == std::vector<std::uint64_t>{0, 0, ~0ull, ~0ull});
  CHECK(truth_table_words(3) == 1);
  CHECK(truth_table_words(6) == 1);
  CHECK(truth_table_words(10) == 16);
}

TEST_CASE("exhaustive truth tables agree across backends and with the oracle") {
  testing::Rng rng(5);
  testing::TreeShape shape;
  shape.allow_xor = true;
  for (int i = 0; i < 40; ++i) {
    const auto ft = testing::random_tree(rng, shape);
    const auto vars = ft.event_names();
    const auto ref = exhaustive_truth_table(ft, "top", vars, simd::scalar_kernels());
    for (const auto* k : available())
      CHECK(exhaustive_truth_table(ft, "top", vars, *k) == ref);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << vars.size()); ++m)
      REQUIRE(bool(ref[m / 64] >> (m % 64) & 1) ==
              testing::oracle_eval(ft, ft.root("top"), testing::scenario_of(vars, m)));
    for (const auto* k : available()) {
      CHECK(std::abs(brute_force_probability(ft, "top", *k) -
                     brute_force_probability(ft, "top", simd::scalar_kernels())) <= 1e-12);
    }
  }
}

TEST_CASE("wide truth tables span several batches") {
  FaultTree ft;
  std::vector<NodeId> ev;
  for (int i = 0; i < 20; ++i) ev.push_back(ft.add_event("e" + std::to_string(i), 0.5));
  // Majority-like function over pairs.
  std::vector<NodeId> pairs;
  for (int i = 0; i < 20; i += 2) pairs.push_back(ft.add_gate(GateOp::And, {ev[i], ev[i + 1]}));
  ft.add_root("top", ft.add_gate(GateOp::Or, pairs));
  const auto vars = ft.event_names();
  const auto ref = exhaustive_truth_table(ft, "top", vars, simd::scalar_kernels());
  for (const auto* k : available()) {
    const auto got = exhaustive_truth_table(ft, "top", vars, *k);
    CHECK(got == ref);
    // P = 1 - (3/4)^10
    CHECK(std::abs(brute_force_probability(ft, "top", *k) - (1 - std::pow(0.75, 10))) <= 1e-12);
  }
  std::uint64_t pop = 0;
  for (auto w : ref) pop += std::popcount(w);
  CHECK(pop == (1u << 20) - 59049u);  // 3^10 assignments fail
}
