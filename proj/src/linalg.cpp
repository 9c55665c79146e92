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

#include "basemod/linalg.hpp"

#include <cstddef>
#include <utility>

namespace basemod {

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[pivot_row][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] -= factor * rows[pivot_row][k];
      }
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
      b[r] -= factor * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace basemod
