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

// AVX2 kernels: four 64-bit words (256 scenarios) per instruction for the
// row operations, four doubles per lane group for the weighted sum. Built
// with -mavx2 and only entered after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "cft/simd/kernels.hpp"

namespace cft::simd {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void and_rows(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_rows(std::uint64_t* dst, const std::uint64_t* a,
             const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_rows(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    store(dst + i, _mm256_xor_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

// Nibble lookup popcount (Mula): pshufb per 4-bit half, horizontal byte sums
// via sad against zero.
std::uint64_t popcount_rows(const std::uint64_t* row, std::size_t n) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i v = load(row + i);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                          _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(row[i]));
  return total;
}

// All-ones lanes for each 4-bit selection pattern.
struct NibbleMasks {
  alignas(32) std::int64_t lanes[16][4];

  constexpr NibbleMasks() : lanes{} {
    for (int m = 0; m < 16; ++m)
      for (int j = 0; j < 4; ++j) lanes[m][j] = (m >> j) & 1 ? -1 : 0;
  }
};

constexpr NibbleMasks kNibbleMasks{};

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double masked_weight_sum(const std::uint64_t* mask, const double* word_weight,
                         std::size_t n, const double* bit_weight) {
  __m256d bw[16];
  for (int g = 0; g < 16; ++g) bw[g] = _mm256_loadu_pd(bit_weight + 4 * g);
  double total = 0.0;
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint64_t bits = mask[w];
    if (bits == 0) continue;
    __m256d acc = _mm256_setzero_pd();
    for (int g = 0; g < 16; ++g) {
      const auto nibble = static_cast<unsigned>((bits >> (4 * g)) & 0xf);
      if (nibble == 0) continue;
      const __m256d sel = _mm256_castsi256_pd(_mm256_load_si256(
          reinterpret_cast<const __m256i*>(kNibbleMasks.lanes[nibble])));
      acc = _mm256_add_pd(acc, _mm256_and_pd(sel, bw[g]));
    }
    total += word_weight[w] * hsum(acc);
  }
  return total;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static constexpr KernelTable kTable{Backend::Avx2, and_rows, or_rows,
                                      xor_rows,      popcount_rows,
                                      masked_weight_sum};
  return kTable;
}

}  // namespace cft::simd
