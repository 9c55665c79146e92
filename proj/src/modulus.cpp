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

#include "basemod/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "basemod/errors.hpp"
#include "basemod/kernels.hpp"
#include "basemod/lp.hpp"
#include "basemod/principal_partition.hpp"

namespace basemod {

AdmissibilityResult is_admissible(const Matroid& m, const Density& rho) {
  if (rho.size() != m.size()) throw DomainError("is_admissible: size mismatch");
  if (!rho.is_nonnegative()) throw DomainError("is_admissible: negative entry");
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rho[a] < rho[b]; });
  const int r = m.rank();
  ElementSet base;
  for (int e : order) {
    ElementSet extended = base;
    extended.insert(e);
    if (m.rank(extended) == extended.size()) base = extended;
    if (base.size() == r) break;
  }
  AdmissibilityResult result;
  result.min_base = base;
  result.min_weight = total_usage(rho, base);
  result.admissible = result.min_weight >= 1;
  return result;
}

ModulusResult mod2(const Matroid& m, const Caps& caps,
                   const MinNormOptions& options) {
  if (m.rank() < 1) throw PreconditionError("mod2: rank 0");
  if (!is_loopless(m)) throw PreconditionError("mod2: matroid has loops");

  const DeflationChain chain = deflate(m, caps);
  const ExactEta oracle = brute_force_eta(m, caps);
  if (oracle.eta != chain.eta_star) {
    throw ConsistencyError("mod2: deflation and brute-force eta* disagree");
  }

  ModulusResult result;
  result.eta_star = chain.eta_star;
  result.meo = result.eta_star.energy();
  result.mod_value = 1 / result.meo;
  result.rho_star = result.eta_star.scaled(result.mod_value);
  result.pmf = base_decomposition(m, result.eta_star, caps);
  result.fair_support = result.pmf.bases;

  const MinNormResult numeric = min_norm_point(m, options);
  result.eta_numeric = numeric.eta;
  result.numeric_tolerance = options.tol;
  const std::vector<double> exact = result.eta_star.to_doubles();
  result.numeric_max_error = kernels::max_abs_diff(exact, numeric.eta);
  if (result.numeric_max_error > options.tol) {
    throw ConsistencyError("mod2: min-norm-point differs from exact eta* by " +
                           std::to_string(result.numeric_max_error));
  }

  for (ElementSet b : result.fair_support) {
    if (total_usage(result.rho_star, b) != 1) {
      throw ConsistencyError("mod2: complementary slackness fails on support");
    }
  }
  if (result.eta_star.total() != m.rank() || result.mod_value * result.meo != 1) {
    throw ConsistencyError("mod2: result invariants violated");
  }
  return result;
}

WeightedMod1 mod1_weighted(const Matroid& m, const Density& sigma,
                           const Caps& caps) {
  const int n = m.size();
  if (sigma.size() != n) throw DomainError("mod1_weighted: size mismatch");
  for (int e = 0; e < n; ++e) {
    if (sigma[e] <= 0) throw DomainError("mod1_weighted: weights must be positive");
  }
  const std::vector<ElementSet> bases = enumerate_bases(m, caps);

  // Weighted packing: max sum lambda s.t. sum_{B ∋ e} lambda_B <= sigma(e).
  LinearProgram lp;
  lp.c.assign(bases.size(), 1);
  for (int e = 0; e < n; ++e) {
    std::vector<Rational> row(bases.size(), 0);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (bases[i].contains(e)) row[i] = 1;
    }
    lp.a.push_back(std::move(row));
    lp.sense.push_back(RowSense::kLessEqual);
    lp.b.push_back(sigma[e]);
  }
  const LpSolution sol = solve_lp(lp);
  if (!certifies_optimality(lp, sol)) {
    throw ConsistencyError("mod1_weighted: LP certificate failed");
  }
  const RatioWitness scan = weighted_strength(m, sigma, caps);
  if (scan.value != sol.value) {
    throw ConsistencyError("mod1_weighted: LP value " + to_string(sol.value) +
                           " differs from weighted strength " +
                           to_string(scan.value));
  }
  return WeightedMod1{sol.value, Density(sol.y), bases, sol.x};
}

ModPResult mod_p(const Matroid& m, const Rational& p, const Caps& caps) {
  if (p <= 1) throw DomainError("mod_p: p must exceed 1");
  const DeflationChain chain = deflate(m, caps);
  ModPResult result;
  result.p = p;
  result.q = p / (p - 1);
  const long double pd = p.get_d();
  const long double qd = result.q.get_d();

  long double block_sum = 0.0L;
  Rational exact_sum = 0;
  for (const DeflationBlock& block : chain.blocks) {
    const long double r = block.rank;
    const long double size = block.elements.size();
    block_sum += std::pow(r, qd) / std::pow(size, qd - 1.0L);
    exact_sum += make_rational(block.rank * block.rank, block.elements.size());
  }
  result.value = static_cast<double>(std::pow(block_sum, 1.0L - pd));
  if (p == 2) result.exact = 1 / exact_sum;

  // rho = eta^{q-1} / E_q(eta); sum_e eta(e)^q equals block_sum.
  result.rho.reserve(m.size());
  for (int e = 0; e < m.size(); ++e) {
    const long double eta = chain.eta_star[e].get_d();
    result.rho.push_back(static_cast<double>(std::pow(eta, qd - 1.0L) / block_sum));
  }
  return result;
}

}  // namespace basemod
