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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "basemod/duality.hpp"
#include "basemod/modulus.hpp"
#include "basemod/principal_partition.hpp"
#include "basemod/random.hpp"
#include "basemod/verify.hpp"
#include "../unit/fixtures.hpp"

namespace basemod {
namespace {

using testing::q;

constexpr int kRandomInstances = 50;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Instance {
  std::string name;
  Matroid m;
};

std::vector<Instance> fixtures_and_random() {
  std::vector<Instance> out;
  for (auto& [name, m] : testing::fixtures()) out.push_back({name, m});
  for (int s = 1; s <= kRandomInstances; ++s) {
    out.push_back({"random seed " + std::to_string(s), random_suite_instance(s)});
  }
  return out;
}

bool by_values(const Density& a, const Density& b) { return a.values() < b.values(); }

Outcome fixture_exactness() {
  Outcome o;
  const auto expect = [&](const std::string& name, const Matroid& m, const Rational& mod) {
    const ModulusResult r = mod2(m);
    const ExactEta oracle = brute_force_eta(m);
    if (r.mod_value != mod) o.fail(name + " mod2 = " + to_string(r.mod_value));
    if (oracle.eta != r.eta_star) o.fail(name + " disagrees with brute force");
    if (1 / oracle.eta.energy() != mod) o.fail(name + " brute-force energy mismatch");
    return r;
  };
  const ModulusResult tp = expect("TP", testing::tp(), q(3, 7));
  if (tp.eta_star != Density({q(2, 3), q(2, 3), q(2, 3), q(1)})) o.fail("TP eta*");
  if (tp.meo != q(7, 3)) o.fail("TP MEO = " + to_string(tp.meo));
  expect("U12", testing::u12(), q(2));
  expect("K4", testing::k4(), q(2, 3));
  expect("PATH3", testing::path3(), q(1, 3));
  if (o.ok) o.detail = "TP 3/7, U12 2, K4 2/3, PATH3 1/3, MEO(TP) 7/3";
  return o;
}

Outcome packing_covering(const std::vector<Instance>& all) {
  Outcome o;
  for (const Instance& in : all) {
    const LpValue tau = packing_value(in.m);
    const LpValue ups = covering_value(in.m);
    if (!tau.certified || !ups.certified) o.fail(in.name + ": LP not certified");
    if (tau.value != strength(in.m).value) o.fail(in.name + ": packing != strength");
    if (ups.value != fractional_arboricity(in.m).value) o.fail(in.name + ": covering != arboricity");
  }
  if (o.ok) o.detail = std::to_string(all.size()) + " instances";
  return o;
}

Outcome blocker_extreme_points() {
  Outcome o;
  int compared = 0;
  for (const auto& [name, m] : testing::fixtures()) {
    if (m.size() > 8) continue;
    auto points = enumerate_extreme_points(m);
    if (!points) {
      o.fail(name + ": extreme-point budget exhausted");
      continue;
    }
    std::vector<Density> theta;
    for (const BlockerVector& v : fulkerson_blocker(m)) theta.push_back(v.vector);
    std::sort(theta.begin(), theta.end(), by_values);
    std::sort(points->begin(), points->end(), by_values);
    if (theta != *points) o.fail(name + ": blocker differs from extreme points");
    ++compared;
  }
  const auto tp = fulkerson_blocker(testing::tp());
  const std::vector<Density> listed{
      Density({1, 1, 0, 0}), Density({1, 0, 1, 0}), Density({0, 1, 1, 0}),
      Density({q(1, 2), q(1, 2), q(1, 2), 0}), Density({0, 0, 0, 1})};
  std::vector<Density> got;
  for (const BlockerVector& v : tp) got.push_back(v.vector);
  auto want = listed;
  std::sort(got.begin(), got.end(), by_values);
  std::sort(want.begin(), want.end(), by_values);
  if (got != want) o.fail("TP blocker members differ from the listed five");
  if (o.ok) o.detail = std::to_string(compared) + " fixtures, TP has 5 members";
  return o;
}

Outcome dual_identity(const std::vector<Instance>& all) {
  Outcome o;
  int checked = 0;
  for (const Instance& in : all) {
    if (in.m.rank() == 0 || in.m.rank() == in.m.size()) continue;
    const DualEtaIdentity d = dual_eta_identity(in.m);
    for (int e = 0; e < in.m.size(); ++e) {
      if (d.eta[e] + d.eta_dual[e] != 1) {
        o.fail(in.name + ": sum differs from 1 at " + in.m.label(e));
        break;
      }
    }
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " instances";
  return o;
}

Outcome mod_p_closed_form() {
  Outcome o;
  double worst = 0.0;
  for (const auto& [name, m] : testing::fixtures()) {
    const auto bases = enumerate_bases(m);
    for (const Rational& p : {q(3, 2), q(2), q(3), q(5)}) {
      const ModPResult closed = mod_p(m, p);
      const ModPNumeric num = mod_p_projected_gradient(bases, m.size(), to_double(p));
      const double rel = std::abs(num.value() - closed.value) / closed.value;
      worst = std::max(worst, rel);
      if (rel > 1e-6) o.fail(name + " p=" + to_string(p) + " relative error " + std::to_string(rel));
      if (p == 2 && (!closed.exact || *closed.exact != mod2(m).mod_value)) {
        o.fail(name + ": p = 2 closed form differs from mod2");
      }
    }
  }
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max relative error %.2e", worst);
    o.detail = buf;
  }
  return o;
}

Outcome serial_rule() {
  Outcome o;
  int sets = 0;
  for (const auto& [name, m] : testing::fixtures()) {
    const Density eta = mod2(m).eta_star;
    for (ElementSet x : testing::all_subsets(m.size())) {
      if (x.empty() || x == m.ground() || !is_beurling(m, x, eta).is_beurling) continue;
      const SerialSplit s = serial_split(m, x);
      if (s.meo_total != s.meo_deleted + s.meo_contracted) o.fail(name + ": MEO does not split");
      if (!s.product_optimal) o.fail(name + ": product pmf fails the optimality conditions");
      if (!s.restrictions_match) o.fail(name + ": restrictions differ");
      ++sets;
    }
  }
  if (sets == 0) o.fail("no proper Beurling sets found");
  if (o.ok) o.detail = std::to_string(sets) + " Beurling sets";
  return o;
}

Outcome numeric_agreement(const std::vector<Instance>& all) {
  Outcome o;
  double worst = 0.0;
  for (const Instance& in : all) {
    const Density exact = deflate(in.m).eta_star;
    const MinNormResult r = min_norm_point(in.m);
    for (int e = 0; e < in.m.size(); ++e) {
      worst = std::max(worst, std::abs(r.eta[e] - to_double(exact[e])));
    }
  }
  if (worst > 1e-9) o.fail("");
  char buf[64];
  std::snprintf(buf, sizeof buf, "max error %.2e", worst);
  o.detail = buf;
  return o;
}

Outcome invariant_suites(const std::vector<Instance>& all) {
  Outcome o;
  int checks = 0;
  for (const Instance& in : all) {
    for (const CheckResult& r : run_invariant_suite(in.m)) {
      ++checks;
      if (r.status == CheckStatus::kFail) o.fail(in.name + ": " + r.name + " (" + r.detail + ")");
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks on " + std::to_string(all.size()) + " instances";
  return o;
}

int run() {
  const std::vector<Instance> all = fixtures_and_random();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture exactness", fixture_exactness},
      {"packing = strength, covering = arboricity", [&] { return packing_covering(all); }},
      {"blocker equals extreme points", blocker_extreme_points},
      {"eta* + dual eta* = 1", [&] { return dual_identity(all); }},
      {"Mod_p closed form vs convex solver", mod_p_closed_form},
      {"serial rule on Beurling sets", serial_rule},
      {"min-norm-point vs exact eta*", [&] { return numeric_agreement(all); }},
      {"invariant suites", [&] { return invariant_suites(all); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::printf("%s  [%zu] %s  (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", failed == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace basemod

int main() { return basemod::run(); }
