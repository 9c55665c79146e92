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

#include <cmath>
#include <vector>

#include "basemod/errors.hpp"
#include "basemod/modulus.hpp"
#include "fixtures.hpp"

namespace basemod {
namespace {

using testing::q;

// Test-side oracle: Frank-Wolfe with exact line search on the simplex of
// base pmfs, minimizing ||N^T mu||^2. Returns the usage vector.
std::vector<double> frank_wolfe_eta(const std::vector<ElementSet>& bases, int n, int iterations) {
  std::vector<double> eta(n, 0.0);
  for (int e : bases.front().elements()) eta[e] = 1.0;
  for (int it = 0; it < iterations; ++it) {
    std::size_t best = 0;
    double best_value = 1e300;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      double v = 0.0;
      for (int e : bases[i].elements()) v += eta[e];
      if (v < best_value) {
        best_value = v;
        best = i;
      }
    }
    std::vector<double> d(n);
    for (int e = 0; e < n; ++e) d[e] = (bases[best].contains(e) ? 1.0 : 0.0) - eta[e];
    double num = 0.0, den = 0.0;
    for (int e = 0; e < n; ++e) {
      num -= eta[e] * d[e];
      den += d[e] * d[e];
    }
    if (den == 0.0 || num <= 0.0) break;
    const double step = std::min(1.0, num / den);
    for (int e = 0; e < n; ++e) eta[e] += step * d[e];
  }
  return eta;
}

// Independent KKT certificate for the minimum-energy pmf.
void expect_kkt(const Matroid& m, const ModulusResult& r) {
  const auto bases = enumerate_bases(m);
  const Rational energy = r.eta_star.energy();
  for (ElementSet b : bases) EXPECT_GE(r.eta_star.sum(b), energy);
  Rational total = 0;
  for (std::size_t i = 0; i < r.pmf.size(); ++i) {
    EXPECT_GT(r.pmf.weights[i], 0);
    EXPECT_EQ(r.eta_star.sum(r.pmf.bases[i]), energy);
    total += r.pmf.weights[i];
  }
  EXPECT_EQ(total, 1);
  EXPECT_EQ(r.pmf.usage(m.size()), r.eta_star);
  EXPECT_EQ(r.mod_value, 1 / energy);
  EXPECT_EQ(r.meo, energy);
  EXPECT_EQ(r.rho_star, r.eta_star.scaled(1 / energy));
}

TEST(Mod2, FixtureValues) {
  const ModulusResult tp = mod2(testing::tp());
  EXPECT_EQ(tp.mod_value, q(3, 7));
  EXPECT_EQ(tp.eta_star, Density({q(2, 3), q(2, 3), q(2, 3), q(1)}));
  EXPECT_EQ(tp.rho_star, Density({q(2, 7), q(2, 7), q(2, 7), q(3, 7)}));
  expect_kkt(testing::tp(), tp);
  EXPECT_EQ(mod2(testing::u12()).mod_value, 2);
  const ModulusResult k4 = mod2(testing::k4());
  EXPECT_EQ(k4.mod_value, q(2, 3));
  EXPECT_EQ(k4.eta_star, Density::constant(6, q(1, 2)));
  expect_kkt(testing::k4(), k4);
  EXPECT_EQ(mod2(testing::path3()).mod_value, q(1, 3));
}

TEST(Mod2, AgreesWithFrankWolfeOracle) {
  for (const auto& [name, m] : testing::fixtures()) {
    const ModulusResult r = mod2(m);
    const auto fw = frank_wolfe_eta(enumerate_bases(m), m.size(), 20000);
    for (int e = 0; e < m.size(); ++e) EXPECT_NEAR(fw[e], to_double(r.eta_star[e]), 2e-3) << name;
    for (int e = 0; e < m.size(); ++e) EXPECT_NEAR(r.eta_numeric[e], to_double(r.eta_star[e]), 1e-9) << name;
    EXPECT_LE(r.numeric_max_error, r.numeric_tolerance);
  }
}

TEST(Mod2, BruteForceMatchesPmfUsage) {
  for (const auto& [name, m] : testing::fixtures()) {
    const ExactEta b = brute_force_eta(m);
    EXPECT_EQ(b.eta, mod2(m).eta_star) << name;
    EXPECT_EQ(b.pmf.usage(m.size()), b.eta) << name;
    EXPECT_TRUE(satisfies_meo_kkt(enumerate_bases(m), b.eta)) << name;
  }
  Density off({q(1, 2), q(1, 2), 1, 1});
  EXPECT_FALSE(satisfies_meo_kkt(enumerate_bases(testing::tp()), off));
}

TEST(MinNormPoint, ConvergesOnFixtures) {
  const MinNormResult r = min_norm_point(testing::tp());
  EXPECT_LE(r.gap, 1e-9);
  EXPECT_NEAR(r.eta[0], 2.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.eta[3], 1.0, 1e-9);
  double w = 0.0;
  for (double x : r.weights) w += x;
  EXPECT_NEAR(w, 1.0, 1e-12);
}

TEST(MinNormPoint, RejectsLoops) {
  EXPECT_THROW(min_norm_point(dual(testing::tp())), PreconditionError);
}

TEST(Admissibility, GreedyWitness) {
  const Matroid m = testing::tp();
  const auto ok = is_admissible(m, Density({q(1, 2), q(1, 2), q(1, 2), 0}));
  EXPECT_TRUE(ok.admissible);
  EXPECT_EQ(ok.min_weight, 1);
  const auto worse = is_admissible(m, Density({q(1, 4), q(1, 4), q(1, 2), q(1, 4)}));
  EXPECT_FALSE(worse.admissible);
  EXPECT_EQ(worse.min_weight, q(3, 4));
  EXPECT_EQ(worse.min_base, (ElementSet{0, 1, 3}));
  EXPECT_THROW(is_admissible(m, Density({-1, 1, 1, 1})), DomainError);
}

TEST(BaseDecomposition, ReproducesUsage) {
  for (const auto& [name, m] : testing::fixtures()) {
    const Density eta = mod2(m).eta_star;
    const BasePmf pmf = base_decomposition(m, eta);
    EXPECT_EQ(pmf.total(), 1) << name;
    EXPECT_EQ(pmf.usage(m.size()), eta) << name;
    EXPECT_LE(static_cast<int>(pmf.size()), m.size() + 1) << name;
  }
  // Outside the base polytope: sum differs from the rank.
  EXPECT_THROW(base_decomposition(testing::tp(), Density::constant(4, q(1, 2))), DomainError);
}

TEST(Mod1Weighted, PendantHeavyWeight) {
  const Matroid m = testing::tp();
  const WeightedMod1 r = mod1_weighted(m, Density({1, 1, 1, 10}));
  EXPECT_EQ(r.value, q(3, 2));
  EXPECT_EQ(r.rho, Density({q(1, 2), q(1, 2), q(1, 2), 0}));
  EXPECT_EQ(mod1_weighted(m, Density::constant(4, 1)).value, 1);
  EXPECT_THROW(mod1_weighted(m, Density({0, 1, 1, 1})), DomainError);
}

TEST(ModP, ClosedFormValues) {
  const Matroid m = testing::tp();
  const ModPResult p3 = mod_p(m, 3);
  const double expected = std::pow(std::pow(2.0, 1.5) / std::sqrt(3.0) + 1.0, -2.0);
  EXPECT_NEAR(p3.value, expected, 1e-12);
  EXPECT_FALSE(p3.exact.has_value());
  const ModPResult p2 = mod_p(m, 2);
  ASSERT_TRUE(p2.exact.has_value());
  EXPECT_EQ(*p2.exact, q(3, 7));
  EXPECT_EQ(p2.q, 2);
  EXPECT_THROW(mod_p(m, 1), DomainError);
}

TEST(ModP, ProjectedGradientBracketsClosedForm) {
  for (const auto& [name, m] : testing::fixtures()) {
    const auto bases = enumerate_bases(m);
    for (const Rational& p : {q(3, 2), q(2), q(3), q(5)}) {
      const ModPResult closed = mod_p(m, p);
      const ModPNumeric num = mod_p_projected_gradient(bases, m.size(), to_double(p));
      EXPECT_LE(num.lower, closed.value * (1 + 1e-9)) << name;
      EXPECT_GE(num.upper, closed.value * (1 - 1e-9)) << name;
      EXPECT_NEAR(num.value() / closed.value, 1.0, 1e-6) << name << " p=" << to_string(p);
    }
  }
}

}  // namespace
}  // namespace basemod
