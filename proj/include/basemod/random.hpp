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

#ifndef BASEMOD_RANDOM_HPP_
#define BASEMOD_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "basemod/matroid.hpp"

namespace basemod {

// Seeded generator whose output depends only on raw mt19937_64 draws, so
// instances are identical across standard libraries.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  // Integer in [lo, hi].
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

// Connected multigraph with `edges` edges: a random spanning tree on
// edges / 2 + 2 vertices (at most edges + 1) plus random extra edges.
std::vector<Edge> random_graph_edges(std::uint64_t seed, int edges);

// cols columns of small integers, max(1, cols / 2) rows, no zero column.
RationalMatrix random_linear_matrix(std::uint64_t seed, int cols);

// Graphic instance used by the fixed random suite: seed s has 3 + s % 6 edges.
Matroid random_suite_instance(std::uint64_t seed);

}  // namespace basemod

#endif  // BASEMOD_RANDOM_HPP_
