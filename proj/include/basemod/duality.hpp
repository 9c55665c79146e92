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

#ifndef BASEMOD_DUALITY_HPP_
#define BASEMOD_DUALITY_HPP_

#include <optional>
#include <vector>

#include "basemod/density.hpp"
#include "basemod/matroid.hpp"
#include "basemod/modulus.hpp"

namespace basemod {

// Blocker vector (1 / (r(E) - r(E - X))) 1_X of a nonempty complement-closed
// set X.
struct BlockerVector {
  ElementSet set;
  int denom = 0;
  Density vector;
};

// Nonempty complement-closed sets, ascending by bitmask.
std::vector<BlockerVector> complement_closed_family(const Matroid& m,
                                                    const Caps& caps = {});

// The subfamily whose contraction M / (E - X) is connected. These are the
// extreme points of the admissible set of the base family.
std::vector<BlockerVector> fulkerson_blocker(const Matroid& m,
                                             const Caps& caps = {});

// True iff v is a vertex of {rho >= 0 : N rho >= 1}: admissible, and the tight
// base rows together with the tight nonnegativity rows have rank |E|.
bool verify_extremity(const Matroid& m, const Density& v, const Caps& caps = {});

// All vertices of {rho >= 0 : N rho >= 1} by the tight-set rank method,
// sorted lexicographically. Returns nullopt when the number of candidate
// row systems exceeds `budget`.
std::optional<std::vector<Density>> enumerate_extreme_points(
    const Matroid& m, const Caps& caps = {}, long budget = 5'000'000);

struct DominantMembership {
  bool member = false;
  // Set maximizing r(E) - r(E - X) - eta(X); first in bitmask order on ties.
  ElementSet violating;
  Rational violation;
};

// eta(X) >= r(E) - r(E - X) for every X.
DominantMembership dominant_membership(const Matroid& m, const Density& eta,
                                       const Caps& caps = {});

struct LpValue {
  Rational value;
  std::vector<ElementSet> bases;
  // Per-base weights (lambda for packing, kappa for covering).
  std::vector<Rational> primal;
  // Per-element dual certificate.
  Density dual;
  bool certified = false;
};

// max sum lambda s.t. each element is used at most once.
LpValue packing_value(const Matroid& m, const Caps& caps = {});
// min sum kappa s.t. each element is covered at least once.
LpValue covering_value(const Matroid& m, const Caps& caps = {});

struct DualEtaIdentity {
  Density eta;
  Density eta_dual;
  Rational max_gap;
};

// eta* of M and of its dual (loops in the dual get usage 0). Requires
// 0 < r(E) < |E|; throws DomainError otherwise.
DualEtaIdentity dual_eta_identity(const Matroid& m, const Caps& caps = {});

// Optimality conditions for (rho, eta, mu): rho admissible, eta = N^T mu,
// rho = Mod_2 eta, and mu(B)(1 - rho(B)) = 0 for every base.
bool verify_meomod(const Matroid& m, const ModulusResult& result,
                   const Caps& caps = {});

struct BlockerModulusCertificate {
  // Mod_2 over the admissible set of the blocker family, i.e. ||eta*||^2.
  Rational value;
  bool eta_feasible = false;
  bool multipliers_found = false;
};

// Certifies that eta* minimizes the energy over {eta >= 0 : theta rows >= 1}
// by exact KKT multipliers on the tight blocker rows.
BlockerModulusCertificate blocker_family_mod2(const Matroid& m,
                                              const Density& eta_star,
                                              const Caps& caps = {});

}  // namespace basemod

#endif  // BASEMOD_DUALITY_HPP_
