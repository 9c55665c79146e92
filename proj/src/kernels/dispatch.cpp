// Copyright 2026 The Authors.
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
#include <string_view>

#include "basemod/kernels.hpp"

namespace basemod::kernels {

#ifdef BASEMOD_HAVE_AVX2
const KernelTable* avx2_table_unchecked();
#endif

const KernelTable* avx2_table() {
#if defined(BASEMOD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_table() {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* force = std::getenv("BASEMOD_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) == "1") {
      return scalar_table();
    }
    const KernelTable* simd = avx2_table();
    return simd != nullptr ? *simd : scalar_table();
  }();
  return table;
}

}  // namespace basemod::kernels
