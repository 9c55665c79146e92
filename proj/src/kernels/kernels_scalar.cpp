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

#include <algorithm>
#include <cmath>

#include "basemod/kernels.hpp"

namespace basemod::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void gemv_scalar(const double* a, std::size_t rows, std::size_t cols,
                 const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_scalar(a + r * cols, x, cols);
}

void gemv_t_scalar(const double* a, std::size_t rows, std::size_t cols,
                   const double* x, double* y) {
  std::fill(y, y + cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) axpy_scalar(x[r], a + r * cols, y, cols);
}

constexpr KernelTable kScalar{"scalar", dot_scalar, axpy_scalar,
                              max_abs_diff_scalar, gemv_scalar, gemv_t_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace basemod::kernels
