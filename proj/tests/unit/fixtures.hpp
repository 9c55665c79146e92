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

#ifndef BASEMOD_TESTS_FIXTURES_HPP_
#define BASEMOD_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "basemod/matroid.hpp"
#include "basemod/rational.hpp"

namespace basemod::testing {

// Triangle {a, b, c} with pendant edge d.
inline Matroid tp() {
  return Matroid::graphic({{"1", "2", "a"}, {"2", "3", "b"}, {"1", "3", "c"}, {"3", "4", "d"}});
}
inline Matroid u12() { return Matroid::uniform(1, 2); }
inline Matroid k4() {
  return Matroid::graphic({{"1", "2", "a"}, {"1", "3", "b"}, {"1", "4", "c"},
                           {"2", "3", "d"}, {"2", "4", "e"}, {"3", "4", "f"}});
}
inline Matroid path3() {
  return Matroid::graphic({{"1", "2", "a"}, {"2", "3", "b"}, {"3", "4", "c"}});
}

struct Named {
  std::string name;
  Matroid m;
};

inline std::vector<Named> fixtures() {
  return {{"TP", tp()}, {"U12", u12()}, {"K4", k4()}, {"PATH3", path3()}};
}


inline Rational q(long num, long den = 1) { return make_rational(num, den); }

// Graph rank by an independent route: |V(X)| minus the number of connected
// components of the subgraph spanned by X, via depth-first search.
inline int graph_rank(const std::vector<std::pair<int, int>>& edges, ElementSet x) {
  std::map<int, std::vector<int>> adj;
  for (int e : x.elements()) {
    adj[edges[e].first].push_back(edges[e].second);
    adj[edges[e].second].push_back(edges[e].first);
  }
  std::map<int, bool> seen;
  int components = 0;
  for (const auto& [v, _] : adj) {
    if (seen[v]) continue;
    ++components;
    std::vector<int> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return static_cast<int>(adj.size()) - components;
}

// Determinant by fraction-based elimination, kept separate from the library.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

// All subsets of {0..n-1} as bitmasks.
inline std::vector<ElementSet> all_subsets(int n) {
  std::vector<ElementSet> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
  return out;
}

}  // namespace basemod::testing

#endif  // BASEMOD_TESTS_FIXTURES_HPP_
