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
#include <set>
#include <vector>

#include "basemod/duality.hpp"
#include "basemod/errors.hpp"
#include "basemod/io.hpp"
#include "basemod/principal_partition.hpp"
#include "basemod/random.hpp"
#include "basemod/report.hpp"
#include "basemod/verify.hpp"
#include "fixtures.hpp"

namespace basemod {
namespace {

using testing::q;

std::string failures(const std::vector<CheckResult>& results) {
  std::string out;
  for (const CheckResult& r : results) {
    if (r.status == CheckStatus::kFail) out += r.name + ": " + r.detail + "\n";
  }
  return out;
}

TEST(RandomInstances, GoldenGraph) {
  const std::vector<Edge> edges = random_graph_edges(1, 6);
  EXPECT_EQ(write_graph(edges),
            "v2 v4 e1\nv0 v2 e2\nv1 v3 e3\nv0 v1 e4\nv1 v4 e5\nv0 v3 e6\n");
}

TEST(RandomInstances, Deterministic) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    EXPECT_EQ(write_graph(random_graph_edges(seed, 9)), write_graph(random_graph_edges(seed, 9)));
    EXPECT_EQ(random_linear_matrix(seed, 7), random_linear_matrix(seed, 7));
  }
  EXPECT_NE(write_graph(random_graph_edges(1, 9)), write_graph(random_graph_edges(2, 9)));
}

TEST(RandomInstances, ShapeInvariants) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto edges = random_graph_edges(seed, 8);
    ASSERT_EQ(edges.size(), 8u);
    for (const Edge& e : edges) EXPECT_NE(e.u, e.v);
    const Matroid g = Matroid::graphic(edges);
    EXPECT_TRUE(is_loopless(g));
    const RationalMatrix a = random_linear_matrix(seed, 6);
    ASSERT_EQ(a.size(), 3u);
    for (std::size_t j = 0; j < 6; ++j) {
      bool nonzero = false;
      for (const auto& row : a) {
        EXPECT_LE(abs(row[j]), 2);
        nonzero = nonzero || row[j] != 0;
      }
      EXPECT_TRUE(nonzero);
    }
  }
  EXPECT_EQ(random_suite_instance(1).size(), 4);
  EXPECT_EQ(random_suite_instance(6).size(), 3);
}

TEST(InvariantSuite, FixturesPass) {
  for (const auto& [name, m] : testing::fixtures()) {
    const auto results = run_invariant_suite(m);
    EXPECT_TRUE(all_passed(results)) << name << "\n" << failures(results);
    EXPECT_GE(results.size(), 30u);
  }
}

TEST(InvariantSuite, RandomGraphPasses) {
  const Matroid m = Matroid::graphic(random_graph_edges(7, 6));
  const auto results = run_invariant_suite(m);
  EXPECT_TRUE(all_passed(results)) << failures(results);
}

TEST(InvariantSuite, SkipsAreReportedForLoopyDuals) {
  const auto results = run_invariant_suite(testing::tp());
  int skipped = 0;
  for (const CheckResult& r : results) skipped += r.status == CheckStatus::kSkip;
  EXPECT_EQ(skipped, 1);
  EXPECT_EQ(status_name(CheckStatus::kSkip), "SKIP");
  EXPECT_THROW(run_invariant_suite(dual(testing::tp())), PreconditionError);
}

TEST(Report, DeterministicAndExact) {
  const AnalysisReport a = analyze(testing::tp(), {q(2), q(3)});
  const AnalysisReport b = analyze(testing::tp(), {q(2), q(3)});
  EXPECT_EQ(render(a), render(b));
  const nlohmann::json j = to_json(a);
  EXPECT_EQ(j["mod2"], "3/7");
  EXPECT_EQ(j["meo"], "7/3");
  EXPECT_EQ(j["eta_star"]["d"], "1");
  EXPECT_EQ(j["eta_star"]["a"], "2/3");
  EXPECT_EQ(j["mod_p"]["2"], "3/7");
  EXPECT_EQ(j["tau"], "1");
  EXPECT_EQ(j["upsilon"], "3/2");
  EXPECT_EQ(j["theta_family"].size(), 5u);
  EXPECT_EQ(j["dual_identity"]["max_gap"], "0");
  EXPECT_FALSE(j["homogeneous"].get<bool>());
  EXPECT_EQ(elements_csv(a), elements_csv(b));
  EXPECT_NE(theta_csv(a).find("a b,1"), std::string::npos) << theta_csv(a);
}

// Hand-rolled property checks on random graphic and linear matroids.
void check_properties(const Matroid& m, const std::string& tag) {
  const ModulusResult r = mod2(m);
  EXPECT_EQ(r.eta_star.total(), m.rank()) << tag;
  EXPECT_GT(r.eta_star.min(), 0) << tag;
  EXPECT_LE(r.eta_star.max(), 1) << tag;
  EXPECT_EQ(r.eta_star, brute_force_eta(m).eta) << tag;
  EXPECT_TRUE(verify_meomod(m, r)) << tag;
  const Rational s = strength(m).value;
  const Rational d = fractional_arboricity(m).value;
  EXPECT_EQ(1 / r.eta_star.max(), s) << tag;
  EXPECT_EQ(1 / r.eta_star.min(), d) << tag;
  EXPECT_EQ(packing_value(m).value, s) << tag;
  EXPECT_EQ(covering_value(m).value, d) << tag;
  EXPECT_TRUE(dominant_membership(m, r.eta_star).member) << tag;
  if (m.rank() < m.size()) {
    const DualEtaIdentity di = dual_eta_identity(m);
    EXPECT_EQ(di.max_gap, 0) << tag;
  }
  for (int e = 0; e < m.size(); ++e) {
    EXPECT_NEAR(r.eta_numeric[e], to_double(r.eta_star[e]), 1e-9) << tag;
  }
}

TEST(Properties, RandomGraphic) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    check_properties(Matroid::graphic(random_graph_edges(seed, 4 + seed % 6)),
                     "graphic " + std::to_string(seed));
  }
}

TEST(Properties, RandomLinear) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    check_properties(Matroid::linear(random_linear_matrix(seed, 3 + seed % 6)),
                     "linear " + std::to_string(seed));
  }
}

}  // namespace
}  // namespace basemod
