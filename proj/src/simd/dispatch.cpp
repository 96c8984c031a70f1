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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cft/simd/kernels.hpp"

namespace cft::simd {

#if defined(CFTKIT_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "?";
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(CFTKIT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Backend backend) {
  if (!backend_available(backend))
    throw std::invalid_argument("SIMD backend " + std::string(to_string(backend)) +
                                " is not available on this machine");
#if defined(CFTKIT_HAVE_AVX2)
  if (backend == Backend::Avx2) return avx2_kernels();
#endif
  return scalar_kernels();
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [] () -> const KernelTable& {
    if (const char* env = std::getenv("CFTKIT_SIMD")) {
      const std::string_view want(env);
      if (want == "scalar") return scalar_kernels();
      if (want == "avx2" && backend_available(Backend::Avx2))
        return kernels(Backend::Avx2);
    }
    if (backend_available(Backend::Avx2)) return kernels(Backend::Avx2);
    return scalar_kernels();
  }();
  return table;
}

}  // namespace cft::simd
