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

#include <gtest/gtest.h>

#include <vector>

#include "basemod/errors.hpp"
#include "basemod/principal_partition.hpp"
#include "basemod/random.hpp"
#include "fixtures.hpp"

namespace basemod {
namespace {

using testing::all_subsets;
using testing::q;

// Test-side ratio scans by direct enumeration.
Rational brute_strength(const Matroid& m) {
  Rational best = -1;
  for (ElementSet x : all_subsets(m.size())) {
    const int drop = m.rank() - m.rank(m.ground() - x);
    if (drop == 0) continue;
    const Rational v = testing::q(x.size(), drop);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

Rational brute_arboricity(const Matroid& m) {
  Rational best = 0;
  for (ElementSet x : all_subsets(m.size())) {
    if (m.rank(x) == 0) continue;
    best = std::max(best, testing::q(x.size(), m.rank(x)));
  }
  return best;
}

TEST(RatioScans, FixtureValuesAndWitnesses) {
  const Matroid m = testing::tp();
  const RatioWitness s = strength(m);
  EXPECT_EQ(s.value, 1);
  EXPECT_EQ(s.witness, ElementSet{3});
  const RatioWitness a = fractional_arboricity(m);
  EXPECT_EQ(a.value, q(3, 2));
  EXPECT_EQ(a.witness, (ElementSet{0, 1, 2}));
  EXPECT_EQ(density_theta(m), q(4, 3));
  EXPECT_EQ(strength(testing::k4()).value, 2);
  EXPECT_EQ(fractional_arboricity(testing::k4()).value, 2);
  EXPECT_EQ(fractional_arboricity(testing::k4()).witness, testing::k4().ground());
}

TEST(RatioScans, AgreeWithBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matroid m = random_suite_instance(seed);
    const RatioWitness s = strength(m);
    EXPECT_EQ(s.value, brute_strength(m)) << seed;
    EXPECT_EQ(q(s.witness.size(), m.rank() - m.rank(m.ground() - s.witness)), s.value) << seed;
    const RatioWitness a = fractional_arboricity(m);
    EXPECT_EQ(a.value, brute_arboricity(m)) << seed;
    EXPECT_EQ(q(a.witness.size(), m.rank(a.witness)), a.value) << seed;
    EXPECT_LE(s.value, density_theta(m));
    EXPECT_LE(density_theta(m), a.value);
  }
}

TEST(RatioScans, WeightedStrengthUnitWeights) {
  for (const auto& [name, m] : testing::fixtures()) {
    EXPECT_EQ(weighted_strength(m, Density::constant(m.size(), 1)).value, strength(m).value) << name;
  }
  const RatioWitness w = weighted_strength(testing::tp(), Density({1, 1, 1, 10}));
  EXPECT_EQ(w.value, q(3, 2));
  EXPECT_EQ(w.witness, (ElementSet{0, 1, 2}));
}

TEST(ParametricMinimizers, TrianglePendantLevels) {
  const Matroid m = testing::tp();
  const ParametricMinimizers low = parametric_minimizers(m, q(2, 3));
  EXPECT_EQ(low.value, q(8, 3));
  EXPECT_EQ(low.min_set, ElementSet{});
  EXPECT_EQ(low.max_set, (ElementSet{0, 1, 2}));
  const ParametricMinimizers high = parametric_minimizers(m, 1);
  EXPECT_EQ(high.value, 3);
  EXPECT_EQ(high.min_set, (ElementSet{0, 1, 2}));
  EXPECT_EQ(high.max_set, m.ground());
  const ParametricMinimizers mid = parametric_minimizers(m, q(4, 5));
  EXPECT_EQ(mid.min_set, mid.max_set);
  EXPECT_EQ(mid.min_set, (ElementSet{0, 1, 2}));
}

TEST(Deflation, TrianglePendantChain) {
  const DeflationChain c = deflate(testing::tp());
  ASSERT_EQ(c.blocks.size(), 2u);
  EXPECT_EQ(c.blocks[0].elements, (ElementSet{0, 1, 2}));
  EXPECT_EQ(c.blocks[0].rank, 2);
  EXPECT_EQ(c.blocks[0].eta, q(2, 3));
  EXPECT_EQ(c.blocks[1].elements, ElementSet{3});
  EXPECT_EQ(c.blocks[1].eta, 1);
  EXPECT_EQ(c.eta_star, mod2(testing::tp()).eta_star);
}

TEST(Deflation, LoopsNeedPermission) {
  const Matroid d = dual(testing::tp());
  EXPECT_THROW(deflate(d), PreconditionError);
  const DeflationChain c = deflate(d, {}, true);
  EXPECT_EQ(c.blocks.front().eta, 0);
  EXPECT_EQ(c.blocks.front().elements, ElementSet{3});
  EXPECT_EQ(c.eta_star, Density({q(1, 3), q(1, 3), q(1, 3), 0}));
}

TEST(Deflation, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matroid m = random_suite_instance(seed);
    EXPECT_EQ(deflate(m).eta_star, brute_force_eta(m).eta) << seed;
  }
}

TEST(CriticalValues, TrianglePendant) {
  const PartitionChain p = critical_values(testing::tp());
  EXPECT_EQ(p.critical_values(), (std::vector<Rational>{q(2, 3), q(1)}));
  ASSERT_EQ(p.levels.size(), 2u);
  EXPECT_EQ(p.levels[0].lower, ElementSet{});
  EXPECT_EQ(p.levels[0].upper, (ElementSet{0, 1, 2}));
  EXPECT_EQ(p.levels[1].lower, (ElementSet{0, 1, 2}));
  EXPECT_EQ(p.levels[1].upper, testing::tp().ground());
  EXPECT_EQ(critical_values(testing::k4()).critical_values(), (std::vector<Rational>{q(1, 2)}));
}

TEST(Beurling, TrianglePendantSets) {
  const Matroid m = testing::tp();
  const Density eta = mod2(m).eta_star;
  const BeurlingCertificate d = is_beurling(m, ElementSet{3}, eta);
  EXPECT_TRUE(d.is_beurling);
  EXPECT_EQ(d.lhs, 1);
  EXPECT_EQ(d.rhs, 1);
  EXPECT_TRUE(is_beurling(m, m.ground(), eta).is_beurling);
  const BeurlingCertificate abc = is_beurling(m, ElementSet{0, 1, 2}, eta);
  EXPECT_TRUE(abc.is_beurling);
  EXPECT_EQ(abc.lhs, 2);
  EXPECT_EQ(abc.rhs, 2);
  EXPECT_FALSE(is_beurling(m, ElementSet{0, 1}, eta).is_beurling);
}

TEST(SerialSplit, PendantSplitsOff) {
  const Matroid m = testing::tp();
  const SerialSplit s = serial_split(m, ElementSet{3});
  EXPECT_EQ(s.meo_deleted, q(4, 3));
  EXPECT_EQ(s.meo_contracted, 1);
  EXPECT_EQ(s.meo_total, q(7, 3));
  EXPECT_EQ(s.meo_total, s.meo_deleted + s.meo_contracted);
  EXPECT_TRUE(s.product_optimal);
  EXPECT_TRUE(s.restrictions_match);
  EXPECT_EQ(s.product.total(), 1);
  const SerialSplit t = serial_split(m, ElementSet{0, 1, 2});
  EXPECT_EQ(t.meo_deleted, 1);
  EXPECT_EQ(t.meo_contracted, q(4, 3));
  EXPECT_TRUE(t.product_optimal);
  EXPECT_THROW(serial_split(m, ElementSet{0, 1}), PreconditionError);
}

}  // namespace
}  // namespace basemod
