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

#ifndef BASEMOD_MODULUS_HPP_
#define BASEMOD_MODULUS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "basemod/density.hpp"
#include "basemod/matroid.hpp"

namespace basemod {

// Base-family modulus. Two independent routes compute the optimal usage
// probabilities eta*: a binary64 minimum-norm-point solver over the base
// polytope, and exact rational paths (the brute-force QP below and the
// deflation chain in principal_partition.hpp). The exact route is
// authoritative.

struct AdmissibilityResult {
  bool admissible = false;
  // A minimum rho-weight base; a violating witness when not admissible.
  ElementSet min_base;
  Rational min_weight;
};

// Greedy minimum-weight base, ties broken by element index. Throws
// DomainError on a negative entry.
AdmissibilityResult is_admissible(const Matroid& m, const Density& rho);

// Binary64 greedy minimum-weight base.
ElementSet greedy_min_base(const Matroid& m, std::span<const double> weights);

struct MinNormOptions {
  // Stop once ||x||^2 - min_B <x, 1_B> <= tol.
  double tol = 1e-9;
  int max_major_cycles = 100'000;
};

struct MinNormResult {
  std::vector<double> eta;
  double gap = 0.0;
  int major_cycles = 0;
  // Final corral and its convex weights.
  std::vector<ElementSet> corral;
  std::vector<double> weights;
};

// Wolfe's minimum-norm-point algorithm over the base polytope with the greedy
// linear oracle. Throws ResourceError (reporting the gap) when the cycle cap
// is hit, PreconditionError on loops or rank 0.
MinNormResult min_norm_point(const Matroid& m, const MinNormOptions& options = {});

struct ExactEta {
  Density eta;
  BasePmf pmf;
  // True when found by exhaustive support search, false when by the exact
  // active-set fallback.
  bool exhaustive = true;
};

// Exact minimizer of mu^T N N^T mu over pmfs on `bases` (a set family over n
// elements, all of one size). Support sets are searched by size then
// lexicographically; candidate supports are accepted only after an exact KKT
// check against every base. Beyond `support_budget` candidate solves an exact
// rational active-set iteration takes over and is certified the same way.
ExactEta brute_force_eta_family(const std::vector<ElementSet>& bases, int n,
                                long support_budget = 200'000);
ExactEta brute_force_eta(const Matroid& m, const Caps& caps = {});

// True iff <eta, 1_B> >= ||eta||^2 for every B in the family.
bool satisfies_meo_kkt(const std::vector<ElementSet>& bases, const Density& eta);

// A pmf on bases with N^T mu = eta and at most |E| + 1 bases. Each step takes
// the base admitting the largest exact step that keeps the residual inside the
// scaled base polytope. Throws DomainError if eta is not in the polytope.
BasePmf base_decomposition(const Matroid& m, const Density& eta,
                           const Caps& caps = {});

struct ModulusResult {
  Rational mod_value;
  Density rho_star;
  Density eta_star;
  Rational meo;
  BasePmf pmf;
  std::vector<ElementSet> fair_support;
  // Numeric cross-check.
  std::vector<double> eta_numeric;
  double numeric_max_error = 0.0;
  double numeric_tolerance = 0.0;
};

// Mod_2 of the base family with all certificates. Throws ConsistencyError if
// the numeric and exact routes disagree.
ModulusResult mod2(const Matroid& m, const Caps& caps = {},
                   const MinNormOptions& options = {});

struct WeightedMod1 {
  Rational value;
  // Optimal density (dual multipliers of the packing LP).
  Density rho;
  // Optimal weighted packing over `bases`.
  std::vector<ElementSet> bases;
  std::vector<Rational> packing;
};

// min sigma^T rho subject to N rho >= 1, rho >= 0, by exact simplex.
// Cross-checked against the weighted strength scan. Throws DomainError for a
// non-positive weight.
WeightedMod1 mod1_weighted(const Matroid& m, const Density& sigma,
                           const Caps& caps = {});

struct ModPResult {
  Rational p;
  Rational q;
  double value = 0.0;
  // Present when the closed form is rational (p = 2).
  std::optional<Rational> exact;
  std::vector<double> rho;
};

// Closed form from the deflation chain. Throws DomainError for p <= 1.
ModPResult mod_p(const Matroid& m, const Rational& p, const Caps& caps = {});

struct ModPNumeric {
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
  std::vector<double> rho;
  double value() const { return 0.5 * (lower + upper); }
};

// Independent numeric solve of min sum rho^p s.t. N rho >= 1 over `bases`:
// projected gradient ascent on the Lagrangian dual in the base multipliers,
// bracketed by a rescaled primal-feasible point. Runs until the relative gap
// is at most `rel_gap`. The primal bound converges like the square root of the
// dual gap, so gaps much below 1e-7 hit the binary64 floor.
ModPNumeric mod_p_projected_gradient(const std::vector<ElementSet>& bases,
                                     int n, double p, double rel_gap = 1e-7,
                                     int max_iterations = 2'000'000);

}  // namespace basemod

#endif  // BASEMOD_MODULUS_HPP_
