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

#ifndef BASEMOD_PRINCIPAL_PARTITION_HPP_
#define BASEMOD_PRINCIPAL_PARTITION_HPP_

#include <vector>

#include "basemod/density.hpp"
#include "basemod/matroid.hpp"
#include "basemod/modulus.hpp"

namespace basemod {

// Exhaustive subset scans over 2^|E| sets; all values exact.

struct RatioWitness {
  Rational value;
  ElementSet witness;
};

// min |X| / (r(E) - r(E-X)) over X with r(E-X) < r(E). Witness: a minimizer of
// least cardinality, then lexicographically first.
RatioWitness strength(const Matroid& m, const Caps& caps = {});

// min sigma(X) / (r(E) - r(E-X)); same witness rule.
RatioWitness weighted_strength(const Matroid& m, const Density& sigma,
                               const Caps& caps = {});

// max |X| / r(X) over X with r(X) > 0. Witness: the union of all maximizers,
// which is itself a maximizer.
RatioWitness fractional_arboricity(const Matroid& m, const Caps& caps = {});

// |E| / r(E).
Rational density_theta(const Matroid& m);

struct ParametricMinimizers {
  Rational value;
  ElementSet min_set;
  ElementSet max_set;
};

// Minimizers of f(X) = r(X) + lambda |E - X|. Both lattice extremes are
// returned; throws ConsistencyError if the minimizers are not closed under
// union and intersection.
ParametricMinimizers parametric_minimizers(const Matroid& m,
                                           const Rational& lambda,
                                           const Caps& caps = {});

struct DeflationBlock {
  // Elements of the block (indices of the input matroid).
  ElementSet elements;
  // (M / earlier blocks) restricted to `elements`.
  Matroid minor;
  int rank = 0;
  // rank / |elements|; zero for the loop block.
  Rational eta;
};

struct DeflationChain {
  std::vector<DeflationBlock> blocks;
  Density eta_star;
};

// Repeatedly split off the inclusion-maximal densest set (max |X|/r(X)) and
// contract it. Each block is certified homogeneous through dominant
// membership of its constant usage vector. With allow_loops, loops form a
// leading block with eta = 0; otherwise loops raise PreconditionError.
DeflationChain deflate(const Matroid& m, const Caps& caps = {},
                       bool allow_loops = false);

struct PartitionLevel {
  Rational lambda;
  // E^-_lambda and E^+_lambda.
  ElementSet lower;
  ElementSet upper;
  // (M | upper) / lower.
  Matroid minor;
};

struct PartitionChain {
  std::vector<PartitionLevel> levels;

  std::vector<Rational> critical_values() const;
};

// Distinct values of eta* as critical values, each verified against the
// parametric minimizers. Every candidate fraction p/q in (0, 1] with q <= |E|
// is also checked to be non-critical unless it is an eta* value.
PartitionChain critical_values(const Matroid& m, const Caps& caps = {});

struct BeurlingCertificate {
  ElementSet set;
  Rational lhs;  // eta*(X)
  Rational rhs;  // r(E) - r(E - X)
  bool is_beurling = false;
  // When is_beurling: every supplied fair base B has |B - X| = r(E - X).
  bool fair_bases_consistent = true;
};

BeurlingCertificate is_beurling(const Matroid& m, ElementSet x,
                                const Density& eta_star,
                                const std::vector<ElementSet>& fair_support = {});

struct SerialSplit {
  Rational meo_deleted;     // MEO(M \ X)
  Rational meo_contracted;  // MEO(M / (E - X))
  Rational meo_total;       // MEO(M)
  BasePmf product;          // nu_1 (+) nu_2 on bases of M
  bool product_optimal = false;
  bool restrictions_match = false;
};

// Serial rule across a Beurling set X with {} != X != E. Throws
// PreconditionError otherwise and ConsistencyError if the split fails.
SerialSplit serial_split(const Matroid& m, ElementSet x, const Caps& caps = {});

}  // namespace basemod

#endif  // BASEMOD_PRINCIPAL_PARTITION_HPP_
