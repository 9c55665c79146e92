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
#include <numeric>
#include <optional>
#include <string>

#include "basemod/errors.hpp"
#include "basemod/kernels.hpp"
#include "basemod/modulus.hpp"

namespace basemod {
namespace {

std::vector<double> indicator(ElementSet b, int n) {
  std::vector<double> v(n, 0.0);
  for (int e : b.elements()) v[e] = 1.0;
  return v;
}

// Minimizes ||sum_i a_i q_i|| subject to sum_i a_i = 1 through the bordered
// Gram system. nullopt when the points are (numerically) affinely dependent.
std::optional<std::vector<double>> affine_minimizer(
    const std::vector<std::vector<double>>& points) {
  const std::size_t k = points.size();
  const std::size_t dim = k + 1;
  std::vector<std::vector<double>> a(dim, std::vector<double>(dim + 1, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const double g = kernels::dot(points[i], points[j]);
      a[i][j] = g;
      a[j][i] = g;
    }
    a[i][k] = 1.0;
    a[k][i] = 1.0;
  }
  a[k][dim] = 1.0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < dim; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-12) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= dim; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<double> alpha(k);
  for (std::size_t i = 0; i < k; ++i) alpha[i] = a[i][dim] / a[i][i];
  return alpha;
}

}  // namespace

ElementSet greedy_min_base(const Matroid& m, std::span<const double> weights) {
  const int n = m.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] < weights[b]; });
  const int r = m.rank();
  ElementSet base;
  for (int e : order) {
    ElementSet extended = base;
    extended.insert(e);
    if (m.rank(extended) == extended.size()) base = extended;
    if (base.size() == r) break;
  }
  return base;
}

MinNormResult min_norm_point(const Matroid& m, const MinNormOptions& options) {
  if (m.rank() < 1) throw PreconditionError("min_norm_point: rank 0");
  if (!is_loopless(m)) throw PreconditionError("min_norm_point: matroid has loops");
  const int n = m.size();

  std::vector<ElementSet> corral;
  std::vector<std::vector<double>> points;
  std::vector<double> lambda;

  const std::vector<double> zeros(n, 0.0);
  corral.push_back(greedy_min_base(m, zeros));
  points.push_back(indicator(corral.back(), n));
  lambda.push_back(1.0);
  std::vector<double> x = points.back();

  auto recompute_x = [&] {
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      kernels::axpy(lambda[i], points[i], x);
    }
  };

  MinNormResult result;
  for (int major = 0;; ++major) {
    if (major >= options.max_major_cycles) {
      throw ResourceError("min_norm_point: cycle cap reached with gap " +
                          std::to_string(result.gap));
    }
    result.major_cycles = major + 1;
    const ElementSet q = greedy_min_base(m, x);
    const std::vector<double> qv = indicator(q, n);
    result.gap = kernels::dot(x, x) - kernels::dot(x, qv);
    if (result.gap <= options.tol) break;
    if (std::find(corral.begin(), corral.end(), q) != corral.end()) break;
    corral.push_back(q);
    points.push_back(qv);
    lambda.push_back(0.0);

    while (true) {
      const auto alpha = affine_minimizer(points);
      if (!alpha) {
        // Numerically dependent corral: the new point adds nothing.
        corral.pop_back();
        points.pop_back();
        lambda.pop_back();
        break;
      }
      constexpr double kPositive = 1e-15;
      if (std::all_of(alpha->begin(), alpha->end(),
                      [](double a) { return a > kPositive; })) {
        lambda = *alpha;
        break;
      }
      // Step from lambda toward alpha until the first weight hits zero.
      double theta = 1.0;
      std::optional<std::size_t> blocking;
      for (std::size_t i = 0; i < alpha->size(); ++i) {
        if ((*alpha)[i] <= kPositive && lambda[i] > (*alpha)[i]) {
          const double t = lambda[i] / (lambda[i] - (*alpha)[i]);
          if (t <= theta) {
            theta = t;
            blocking = i;
          }
        }
      }
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        lambda[i] = theta * (*alpha)[i] + (1.0 - theta) * lambda[i];
      }
      if (blocking) lambda[*blocking] = 0.0;
      for (std::size_t i = lambda.size(); i-- > 0;) {
        if (lambda[i] <= kPositive) {
          corral.erase(corral.begin() + i);
          points.erase(points.begin() + i);
          lambda.erase(lambda.begin() + i);
        }
      }
      const double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
      for (double& l : lambda) l /= total;
    }
    recompute_x();
  }

  result.eta = x;
  result.corral = corral;
  result.weights = lambda;
  return result;
}

}  // namespace basemod
