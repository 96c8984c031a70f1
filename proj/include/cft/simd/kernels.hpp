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

/// @file simd/kernels.hpp
/// Row kernels for bit-sliced scenario evaluation.
///
/// A "row" is an array of 64-bit words in which bit j of word w stands for
/// scenario 64*w + j. Gate evaluation over many scenarios reduces to
/// word-wise AND/OR/XOR over rows; probability accumulation reduces to a
/// masked sum of per-scenario weights. Every backend implements the same
/// table; the scalar one is the reference.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cft::simd {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend);

struct KernelTable {
  Backend backend;

  // dst may alias a or b.
  void (*and_rows)(std::uint64_t* dst, const std::uint64_t* a,
                   const std::uint64_t* b, std::size_t n);
  void (*or_rows)(std::uint64_t* dst, const std::uint64_t* a,
                  const std::uint64_t* b, std::size_t n);
  void (*xor_rows)(std::uint64_t* dst, const std::uint64_t* a,
                   const std::uint64_t* b, std::size_t n);

  std::uint64_t (*popcount_rows)(const std::uint64_t* row, std::size_t n);

  /// sum over w < n of word_weight[w] * sum over set bits j of mask[w] of
  /// bit_weight[j]. bit_weight has 64 entries.
  double (*masked_weight_sum)(const std::uint64_t* mask,
                              const double* word_weight, std::size_t n,
                              const double* bit_weight);
};

const KernelTable& scalar_kernels();

/// Compiled in and supported by the running CPU.
bool backend_available(Backend backend);

/// Throws std::invalid_argument when the backend is unavailable.
const KernelTable& kernels(Backend backend);

/// Widest available backend, unless CFTKIT_SIMD=scalar|avx2 overrides it.
const KernelTable& active_kernels();

}  // namespace cft::simd
