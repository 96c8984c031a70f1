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

// Reference kernels. Every other backend must agree with these bit for bit
// (row operations) or within rounding (weighted sums).

#include <bit>

#include "cft/simd/kernels.hpp"

namespace cft::simd {
namespace {

void and_rows(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_rows(std::uint64_t* dst, const std::uint64_t* a,
             const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_rows(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

std::uint64_t popcount_rows(const std::uint64_t* row, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    total += static_cast<std::uint64_t>(std::popcount(row[i]));
  return total;
}

double masked_weight_sum(const std::uint64_t* mask, const double* word_weight,
                         std::size_t n, const double* bit_weight) {
  double total = 0.0;
  for (std::size_t w = 0; w < n; ++w) {
    auto bits = mask[w];
    if (bits == 0) continue;
    double word = 0.0;
    while (bits != 0) {
      word += bit_weight[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    total += word_weight[w] * word;
  }
  return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static constexpr KernelTable kTable{Backend::Scalar, and_rows, or_rows,
                                      xor_rows,        popcount_rows,
                                      masked_weight_sum};
  return kTable;
}

}  // namespace cft::simd
