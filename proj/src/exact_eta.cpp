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
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>

#include "basemod/errors.hpp"
#include "basemod/linalg.hpp"
#include "basemod/modulus.hpp"

namespace basemod {
namespace {

// Affine minimizer of the points 1_{B_i}: solves the bordered Gram system
// [G 1; 1^T 0] (alpha, nu) = (0, 1). nullopt if affinely dependent.
std::optional<std::vector<Rational>> affine_minimizer(
    const std::vector<ElementSet>& points) {
  const std::size_t k = points.size();
  std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = (points[i] & points[j]).size();
    a[i][k] = 1;
    a[k][i] = 1;
  }
  std::vector<Rational> rhs(k + 1, 0);
  rhs[k] = 1;
  auto sol = solve_square(std::move(a), std::move(rhs));
  if (!sol) return std::nullopt;
  sol->resize(k);
  return sol;
}

// Binary64 screen for a candidate support: false only when the exact test
// below certainly fails (singular bordered Gram system, a clearly negative
// weight, or a clearly violated KKT inequality). Gram entries are small
// integers, so a nonsingular system has pivots far above 1e-9.
bool screen_support(const std::vector<ElementSet>& support,
                    const std::vector<ElementSet>& bases, int n) {
  const std::size_t k = support.size();
  const std::size_t dim = k + 1;
  std::vector<double> a(dim * (dim + 1), 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * (dim + 1) + c]; };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) at(i, j) = (support[i] & support[j]).size();
    at(i, k) = 1.0;
    at(k, i) = 1.0;
  }
  at(k, dim) = 1.0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < dim; ++r) {
      if (std::abs(at(r, c)) > std::abs(at(p, c))) p = r;
    }
    if (std::abs(at(p, c)) < 1e-9) return false;
    for (std::size_t j = 0; j <= dim; ++j) std::swap(at(p, j), at(c, j));
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || at(r, c) == 0.0) continue;
      const double f = at(r, c) / at(c, c);
      for (std::size_t j = c; j <= dim; ++j) at(r, j) -= f * at(c, j);
    }
  }
  std::vector<double> eta(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const double alpha = at(i, dim) / at(i, i);
    if (alpha < -1e-9) return false;
    for (int e : support[i].elements()) eta[e] += alpha;
  }
  double norm = 0.0;
  for (double v : eta) norm += v * v;
  for (ElementSet b : bases) {
    double total = 0.0;
    for (int e : b.elements()) total += eta[e];
    if (total < norm - 1e-9) return false;
  }
  return true;
}

Density combine(const std::vector<ElementSet>& points,
                const std::vector<Rational>& weights, int n) {
  BasePmf pmf{points, weights};
  return pmf.usage(n);
}

// Exact active-set (Wolfe) iteration over an explicit family with a full-scan
// linear oracle. Finite in exact arithmetic.
ExactEta exact_active_set(const std::vector<ElementSet>& bases, int n) {
  std::vector<ElementSet> corral{bases.front()};
  std::vector<Rational> lambda{Rational(1)};
  Density x = combine(corral, lambda, n);
  while (true) {
    const Rational norm = x.energy();
    std::size_t best = 0;
    Rational best_value = x.sum(bases[0]);
    for (std::size_t i = 1; i < bases.size(); ++i) {
      const Rational v = x.sum(bases[i]);
      if (v < best_value) {
        best_value = v;
        best = i;
      }
    }
    if (best_value >= norm) break;
    corral.push_back(bases[best]);
    lambda.push_back(0);
    while (true) {
      const auto alpha = affine_minimizer(corral);
      if (!alpha) {
        throw ConsistencyError("exact active set: affinely dependent corral");
      }
      if (std::all_of(alpha->begin(), alpha->end(),
                      [](const Rational& a) { return a > 0; })) {
        lambda = *alpha;
        break;
      }
      std::optional<Rational> theta;
      for (std::size_t i = 0; i < alpha->size(); ++i) {
        if ((*alpha)[i] <= 0 && lambda[i] > (*alpha)[i]) {
          const Rational t = lambda[i] / (lambda[i] - (*alpha)[i]);
          if (!theta || t < *theta) theta = t;
        }
      }
      if (!theta) throw ConsistencyError("exact active set: no blocking weight");
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        lambda[i] = *theta * (*alpha)[i] + (1 - *theta) * lambda[i];
      }
      for (std::size_t i = lambda.size(); i-- > 0;) {
        if (lambda[i] <= 0) {
          corral.erase(corral.begin() + static_cast<long>(i));
          lambda.erase(lambda.begin() + static_cast<long>(i));
        }
      }
    }
    x = combine(corral, lambda, n);
  }
  return ExactEta{x, BasePmf{corral, lambda}, false};
}

}  // namespace

bool satisfies_meo_kkt(const std::vector<ElementSet>& bases,
                       const Density& eta) {
  const Rational norm = eta.energy();
  return std::all_of(bases.begin(), bases.end(),
                     [&](ElementSet b) { return eta.sum(b) >= norm; });
}

ExactEta brute_force_eta_family(const std::vector<ElementSet>& bases, int n,
                                long support_budget) {
  if (bases.empty()) throw DomainError("brute_force_eta: empty family");
  const int nb = static_cast<int>(bases.size());
  const int max_support = std::min(n + 1, nb);
  long solves = 0;
  for (int k = 1; k <= max_support; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (++solves > support_budget) return exact_active_set(bases, n);
      std::vector<ElementSet> support;
      for (int i : idx) support.push_back(bases[i]);
      const auto alpha = screen_support(support, bases, n)
                             ? affine_minimizer(support)
                             : std::nullopt;
      if (alpha && std::all_of(alpha->begin(), alpha->end(),
                               [](const Rational& a) { return a > 0; })) {
        const Density eta = combine(support, *alpha, n);
        if (satisfies_meo_kkt(bases, eta)) {
          return ExactEta{eta, BasePmf{support, *alpha}, true};
        }
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == nb - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // Carathéodory guarantees a support of size <= n + 1, so this is a bug.
  throw ConsistencyError("brute_force_eta: no KKT support found");
}

ExactEta brute_force_eta(const Matroid& m, const Caps& caps) {
  const std::vector<ElementSet> bases = enumerate_bases(m, caps);
  ExactEta result = brute_force_eta_family(bases, m.size());
  if (!satisfies_meo_kkt(bases, result.eta)) {
    throw ConsistencyError("brute_force_eta: KKT certificate failed");
  }
  return result;
}

BasePmf base_decomposition(const Matroid& m, const Density& eta,
                           const Caps& caps) {
  const int n = m.size();
  if (eta.size() != n) throw DomainError("base_decomposition: size mismatch");
  const RankTable table(m, caps);
  const std::vector<ElementSet> bases = enumerate_bases(m, caps);
  const std::uint64_t count = table.subset_count();

  Density x = eta;
  Rational mass = 1;
  std::vector<Rational> sums(count);
  auto refresh_sums = [&] {
    sums[0] = 0;
    for (std::uint64_t bits = 1; bits < count; ++bits) {
      const std::uint64_t low = bits & (~bits + 1);
      sums[bits] = sums[bits ^ low] + x[std::countr_zero(low)];
    }
  };

  refresh_sums();
  if (!x.is_nonnegative() || sums[count - 1] != table.full_rank()) {
    throw DomainError("base_decomposition: point is not in the base polytope");
  }
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    if (sums[bits] > table.rank(ElementSet(bits))) {
      throw DomainError("base_decomposition: point is not in the base polytope");
    }
  }

  BasePmf pmf;
  for (int step = 0; mass > 0; ++step) {
    if (step > n + 1) {
      throw DomainError("base_decomposition: no progress within |E|+1 steps");
    }
    std::optional<std::size_t> best;
    Rational best_step = 0;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      const ElementSet b = bases[i];
      Rational t = mass;
      for (int e : b.elements()) t = std::min(t, Rational(x[e]));
      if (t <= best_step) continue;
      // x(X) - t|B n X| <= (mass - t) r(X) for every X.
      for (std::uint64_t bits = 1; bits < count && t > best_step; ++bits) {
        const ElementSet s(bits);
        const int slack_rate = table.rank(s) - (b & s).size();
        if (slack_rate <= 0) continue;
        const Rational bound = (mass * table.rank(s) - sums[bits]) / slack_rate;
        if (bound < t) t = bound;
      }
      if (t > best_step) {
        best_step = t;
        best = i;
      }
    }
    if (!best) {
      throw DomainError("base_decomposition: stalled, point is not in co(B)");
    }
    for (int e : bases[*best].elements()) x[e] -= best_step;
    mass -= best_step;
    pmf.bases.push_back(bases[*best]);
    pmf.weights.push_back(best_step);
    refresh_sums();
  }
  if (pmf.usage(n) != eta) {
    throw ConsistencyError("base_decomposition: reconstruction mismatch");
  }
  return pmf;
}

}  // namespace basemod
