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

#ifndef BASEMOD_KERNELS_HPP_
#define BASEMOD_KERNELS_HPP_

#include <cstddef>
#include <span>

// Dense binary64 kernels behind the numeric solvers. Each kernel has a
// portable scalar version and, when the compiler and CPU allow, an AVX2+FMA
// version. The active table is chosen once at first use; setting the
// environment variable BASEMOD_FORCE_SCALAR=1 pins the scalar table.
namespace basemod::kernels {

struct KernelTable {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
  // y = A x with A row-major (rows x cols).
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols,
               const double* x, double* y);
  // y = A^T x with A row-major (rows x cols); y has `cols` entries.
  void (*gemv_t)(const double* a, std::size_t rows, std::size_t cols,
                 const double* x, double* y);
};

const KernelTable& scalar_table();
// nullptr when the AVX2 variant is not compiled in or the CPU lacks
// AVX2/FMA.
const KernelTable* avx2_table();
const KernelTable& active_table();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_table().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active_table().axpy(alpha, x.data(), y.data(), x.size());
}
inline double max_abs_diff(std::span<const double> a,
                           std::span<const double> b) {
  return active_table().max_abs_diff(a.data(), b.data(), a.size());
}

}  // namespace basemod::kernels

#endif  // BASEMOD_KERNELS_HPP_
