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

#include "basemod/random.hpp"

#include <algorithm>
#include <string>

#include "basemod/errors.hpp"

namespace basemod {

std::vector<Edge> random_graph_edges(std::uint64_t seed, int edges) {
  if (edges < 1) throw DomainError("random_graph_edges: need at least one edge");
  InstanceRng rng(seed);
  const int vertices = std::min(edges + 1, edges / 2 + 2);
  auto name = [](long v) { return "v" + std::to_string(v); };
  std::vector<std::pair<long, long>> pairs;
  for (long v = 1; v < vertices; ++v) pairs.emplace_back(rng.between(0, v - 1), v);
  while (static_cast<int>(pairs.size()) < edges) {
    const long u = rng.between(0, vertices - 1);
    long v = rng.between(0, vertices - 2);
    if (v >= u) ++v;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[rng.below(i)]);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.push_back(Edge{name(pairs[i].first), name(pairs[i].second),
                       "e" + std::to_string(i + 1)});
  }
  return out;
}

RationalMatrix random_linear_matrix(std::uint64_t seed, int cols) {
  if (cols < 1) throw DomainError("random_linear_matrix: need at least one column");
  InstanceRng rng(seed);
  const int rows = std::max(1, cols / 2);
  RationalMatrix a(rows, std::vector<Rational>(cols, 0));
  for (int j = 0; j < cols; ++j) {
    bool nonzero = false;
    while (!nonzero) {
      for (int i = 0; i < rows; ++i) {
        a[i][j] = rng.between(-2, 2);
        nonzero = nonzero || a[i][j] != 0;
      }
    }
  }
  return a;
}

Matroid random_suite_instance(std::uint64_t seed) {
  return Matroid::graphic(random_graph_edges(seed, 3 + static_cast<int>(seed % 6)));
}

}  // namespace basemod
