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

#include "basemod/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>

#include "basemod/duality.hpp"
#include "basemod/errors.hpp"
#include "basemod/modulus.hpp"
#include "basemod/principal_partition.hpp"
#include "basemod/random.hpp"

namespace basemod {
namespace {

struct Outcome {
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::kPass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::kFail, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::kSkip, std::move(detail)}; }

std::string set_string(const Matroid& m, ElementSet x) {
  std::string out = "{";
  for (int e : x.elements()) {
    if (out.size() > 1) out += ",";
    out += m.label(e);
  }
  return out + "}";
}

std::vector<Rational> sorted_values(const Density& d) {
  std::vector<Rational> v = d.values();
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::uint64_t> sorted_bits(const std::vector<ElementSet>& sets) {
  std::vector<std::uint64_t> out;
  for (ElementSet s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

class Suite {
 public:
  Suite(const Matroid& m, const Caps& caps, const VerifyOptions& options)
      : m_(m), caps_(caps), options_(options), table_(m, caps),
        ground_(m.ground()), n_(m.size()), r_(m.rank()),
        bases_(enumerate_bases(m, caps)) {}

  std::vector<CheckResult> run();

 private:
  void check(const std::string& name, const std::function<Outcome()>& body) {
    CheckResult result{name, CheckStatus::kPass, {}};
    try {
      const Outcome outcome = body();
      result.status = outcome.status;
      result.detail = outcome.detail;
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      result.status = CheckStatus::kFail;
      result.detail = e.what();
    }
    results_.push_back(std::move(result));
  }

  bool is_base_set(ElementSet b) const {
    return b.size() == r_ && table_.rank(b) == r_;
  }
  bool small() const { return n_ <= options_.exhaustive_limit; }
  Rational eta_sum(ElementSet x) const { return mod_->eta_star.sum(x); }

  void matroid_checks();
  void modulus_checks();
  void partition_checks();
  void duality_checks();

  const Matroid& m_;
  Caps caps_;
  VerifyOptions options_;
  RankTable table_;
  ElementSet ground_;
  int n_;
  int r_;
  std::vector<ElementSet> bases_;
  std::optional<ModulusResult> mod_;
  std::optional<RatioWitness> strength_;
  std::optional<RatioWitness> arboricity_;
  std::vector<CheckResult> results_;
};

void Suite::matroid_checks() {
  check("rank axioms", [&] {
    if (!small()) return skip("ground set above exhaustive limit");
    const std::uint64_t count = table_.subset_count();
    if (table_.rank(ElementSet{}) != 0) return fail("r(empty) != 0");
    for (std::uint64_t x = 0; x < count; ++x) {
      const int rx = table_.rank(ElementSet(x));
      if (rx < 0 || rx > std::popcount(x)) return fail("bounds fail at " + set_string(m_, ElementSet(x)));
      for (int e = 0; e < n_; ++e) {
        const int ry = table_.rank(ElementSet(x | (std::uint64_t{1} << e)));
        if (ry < rx || ry > rx + 1) return fail("monotonicity fails at " + set_string(m_, ElementSet(x)));
      }
      for (std::uint64_t y = 0; y < count; ++y) {
        if (rx + table_.rank(ElementSet(y)) <
            table_.rank(ElementSet(x | y)) + table_.rank(ElementSet(x & y))) {
          return fail("submodularity fails");
        }
      }
    }
    return pass();
  });

  check("base exchange", [&] {
    if (bases_.size() > 1500) return skip("too many bases for pairwise scan");
    for (ElementSet b1 : bases_) {
      for (ElementSet b2 : bases_) {
        for (int x : (b1 - b2).elements()) {
          bool found = false;
          for (int y : (b2 - b1).elements()) {
            ElementSet swapped = b1;
            swapped.erase(x);
            swapped.insert(y);
            if (is_base_set(swapped)) {
              found = true;
              break;
            }
          }
          if (!found) return fail("no exchange for " + set_string(m_, b1) + ", " + set_string(m_, b2));
        }
      }
    }
    return pass(std::to_string(bases_.size()) + " bases");
  });

  check("fundamental circuit exchange", [&] {
    if (bases_.size() > 1500) return skip("too many bases");
    for (ElementSet b : bases_) {
      for (int x : (ground_ - b).elements()) {
        const ElementSet circuit = fundamental_circuit(m_, b, x);
        for (int y : b.elements()) {
          ElementSet swapped = b;
          swapped.erase(y);
          swapped.insert(x);
          if (is_base_set(swapped) != circuit.contains(y)) {
            return fail("mismatch for base " + set_string(m_, b));
          }
        }
      }
    }
    return pass();
  });

  check("corank identity", [&] {
    if (!small()) return skip("ground set above exhaustive limit");
    const Matroid md = dual(m_);
    for (std::uint64_t x = 0; x < table_.subset_count(); ++x) {
      const ElementSet s(x);
      if (md.rank(s) != s.size() - r_ + table_.rank(ground_ - s)) {
        return fail("dual rank differs at " + set_string(m_, s));
      }
    }
    return pass();
  });

  check("concatenation of minor bases", [&] {
    if (!small()) return skip("ground set above exhaustive limit");
    for (std::uint64_t bits = 1; bits + 1 < table_.subset_count(); ++bits) {
      const ElementSet x(bits);
      const ElementSet rest = ground_ - x;
      const auto left = enumerate_bases(delete_elements(m_, x), caps_);
      const auto right = enumerate_bases(contract(m_, rest), caps_);
      std::vector<ElementSet> joined;
      for (ElementSet a : left) {
        for (ElementSet b : right) {
          joined.push_back(from_minor_indices(a, rest) | from_minor_indices(b, x));
        }
      }
      std::vector<ElementSet> expected;
      const int rest_rank = table_.rank(rest);
      for (ElementSet b : bases_) {
        if ((b - x).size() == rest_rank) expected.push_back(b);
      }
      if (sorted_bits(joined) != sorted_bits(expected)) {
        return fail("mismatch at X = " + set_string(m_, x));
      }
    }
    return pass();
  });
}

void Suite::modulus_checks() {
  check("admissibility oracle matches exhaustive minimum", [&] {
    InstanceRng rng(options_.seed);
    for (int s = 0; s < options_.admissibility_samples; ++s) {
      Density rho = Density::constant(n_, 0);
      for (int e = 0; e < n_; ++e) rho[e] = make_rational(rng.between(0, 12), rng.between(1, 6));
      const AdmissibilityResult greedy = is_admissible(m_, rho);
      Rational best = total_usage(rho, bases_.front());
      for (ElementSet b : bases_) best = std::min<Rational>(best, total_usage(rho, b));
      if (greedy.min_weight != best) return fail("sample " + std::to_string(s));
      if (greedy.admissible != (best >= 1)) return fail("verdict differs");
    }
    return pass(std::to_string(options_.admissibility_samples) + " samples");
  });

  check("exact eta* via deflation and brute force", [&] {
    mod_ = mod2(m_, caps_);
    return pass("Mod_2 = " + to_string(mod_->mod_value));
  });
  if (!mod_) return;
  const Density& eta = mod_->eta_star;

  check("eta* sums to rank and lies in (0, 1]", [&] {
    if (eta.total() != r_) return fail("eta*(E) = " + to_string(eta.total()));
    if (eta.min() <= 0 || eta.max() > 1) return fail("entry outside (0, 1]");
    return pass();
  });

  check("eta* is maximal on fundamental circuits of fair bases", [&] {
    for (ElementSet b : mod_->fair_support) {
      for (int x : (ground_ - b).elements()) {
        Rational best = 0;
        for (int e : fundamental_circuit(m_, b, x).elements()) best = std::max<Rational>(best, eta[e]);
        if (eta[x] != best) return fail("element " + m_.label(x));
      }
    }
    return pass();
  });

  check("energy lower bound with equality iff constant", [&] {
    Rational bound(r_ * r_, n_);
    bound.canonicalize();
    if (mod_->meo < bound) return fail("MEO below r^2/|E|");
    if ((mod_->meo == bound) != eta.is_constant()) return fail("equality case mismatch");
    return pass();
  });

  check("homogeneity criterion via dominant membership", [&] {
    Rational value(r_, n_);
    value.canonicalize();
    const Density hom = Density::constant(n_, value);
    const bool member = dominant_membership(m_, hom, caps_).member;
    if (member != (eta == hom)) return fail("membership and constancy disagree");
    return pass(member ? "homogeneous" : "not homogeneous");
  });

  check("numeric min-norm point agrees with exact eta*", [&] {
    char err[32];
    std::snprintf(err, sizeof(err), "%.3e", mod_->numeric_max_error);
    if (mod_->numeric_max_error > mod_->numeric_tolerance) return fail(std::string("max error ") + err);
    return pass(std::string("max error ") + err);
  });

  check("eta* is lexicographically optimal", [&] {
    InstanceRng rng(options_.seed ^ 0x9e3779b97f4a7c15ULL);
    const std::vector<Rational> best = sorted_values(eta);
    const int nb = static_cast<int>(bases_.size());
    for (int s = 0; s < options_.lex_samples; ++s) {
      const int k = static_cast<int>(rng.between(1, std::min(4, nb)));
      BasePmf pmf;
      Rational total = 0;
      for (int i = 0; i < k; ++i) {
        pmf.bases.push_back(bases_[rng.below(nb)]);
        pmf.weights.push_back(rng.between(1, 9));
        total += pmf.weights.back();
      }
      for (Rational& w : pmf.weights) w /= total;
      const std::vector<Rational> other = sorted_values(pmf.usage(n_));
      if (std::lexicographical_compare(best.begin(), best.end(), other.begin(), other.end())) {
        return fail("sample " + std::to_string(s) + " dominates eta*");
      }
    }
    return pass(std::to_string(options_.lex_samples) + " samples");
  });

  check("optimality conditions for (rho*, eta*, pmf)", [&] {
    return verify_meomod(m_, *mod_, caps_) ? pass() : fail("verify_meomod returned false");
  });

  check("Beurling bounds on every subset", [&] {
    for (std::uint64_t bits = 1; bits < table_.subset_count(); ++bits) {
      const ElementSet x(bits);
      const Rational value = eta_sum(x);
      if (value < r_ - table_.rank(ground_ - x) || value > table_.rank(x)) {
        return fail("bound fails at " + set_string(m_, x));
      }
    }
    return pass();
  });

  check("Beurling sets are complement-closed", [&] {
    int count = 0;
    for (std::uint64_t bits = 1; bits < table_.subset_count(); ++bits) {
      const ElementSet x(bits);
      const BeurlingCertificate cert = is_beurling(m_, x, eta, mod_->fair_support);
      if (!cert.is_beurling) continue;
      ++count;
      if (!is_complement_closed(m_, x)) return fail(set_string(m_, x) + " not complement-closed");
      if (!cert.fair_bases_consistent) return fail("fair base crosses " + set_string(m_, x));
    }
    return pass(std::to_string(count) + " Beurling sets");
  });

  check("Mod_p closed form matches projected-gradient solve", [&] {
    std::string detail;
    for (const Rational& p : {make_rational(3, 2), Rational(2), Rational(3), Rational(5)}) {
      const ModPResult closed = mod_p(m_, p, caps_);
      const ModPNumeric numeric = mod_p_projected_gradient(bases_, n_, p.get_d());
      const double rel = std::abs(closed.value - numeric.value()) / closed.value;
      if (!(rel <= 1e-6)) return fail("p = " + to_string(p) + " relative error " + std::to_string(rel));
      if (p == 2 && (!closed.exact || *closed.exact != mod_->mod_value)) {
        return fail("p = 2 closed form differs from Mod_2");
      }
    }
    return pass();
  });
}

void Suite::partition_checks() {
  if (!mod_) return;
  const Density& eta = mod_->eta_star;
  const Rational theta = density_theta(m_);
  check("strength and arboricity scans", [&] {
    strength_ = strength(m_, caps_);
    arboricity_ = fractional_arboricity(m_, caps_);
    return pass("S = " + to_string(strength_->value) + ", D = " + to_string(arboricity_->value));
  });
  if (!strength_ || !arboricity_) return;
  const Rational s = strength_->value;
  const Rational d = arboricity_->value;

  check("1/max eta* = strength and 1/min eta* = arboricity", [&] {
    if (1 / eta.max() != s) return fail("1/max eta* = " + to_string(1 / eta.max()));
    if (1 / eta.min() != d) return fail("1/min eta* = " + to_string(1 / eta.min()));
    return pass();
  });

  check("extreme level sets of eta*", [&] {
    ElementSet e_max;
    ElementSet e_min;
    for (int e = 0; e < n_; ++e) {
      if (eta[e] == eta.max()) e_max.insert(e);
      if (eta[e] == eta.min()) e_min.insert(e);
    }
    if (eta_sum(e_max) != r_ - table_.rank(ground_ - e_max)) return fail("E_max not Beurling");
    if (!is_complement_closed(m_, e_max)) return fail("E_max not complement-closed");
    if (eta_sum(e_min) != table_.rank(e_min)) return fail("E_min not complement-Beurling");
    if (!is_closed(m_, e_min)) return fail("E_min not closed");
    return pass("E_max = " + set_string(m_, e_max) + ", E_min = " + set_string(m_, e_min));
  });

  check("homogeneity equivalences", [&] {
    const bool c = eta.is_constant();
    if ((s == theta) != c || (d == theta) != c || (s == d) != c) {
      return fail("constancy and ratio equalities disagree");
    }
    return pass(c ? "homogeneous" : "not homogeneous");
  });

  check("strength and arboricity are monotone under minors", [&] {
    if (!small()) return skip("ground set above exhaustive limit");
    for (std::uint64_t bits = 1; bits < table_.subset_count(); ++bits) {
      const ElementSet x(bits);
      if (table_.rank(ground_ - x) < r_ && strength(contract(m_, ground_ - x), caps_).value < s) {
        return fail("S(M/(E-X)) < S(M) at X = " + set_string(m_, x));
      }
      if (fractional_arboricity(restrict_to(m_, x), caps_).value > d) {
        return fail("D(M|Y) > D(M) at Y = " + set_string(m_, x));
      }
    }
    return pass();
  });

  check("deflation matches brute-force eta*", [&] {
    const DeflationChain chain = deflate(m_, caps_);
    if (chain.eta_star != brute_force_eta(m_, caps_).eta) return fail("values differ");
    return pass(std::to_string(chain.blocks.size()) + " blocks");
  });

  check("principal partition chain", [&] {
    const PartitionChain chain = critical_values(m_, caps_);
    std::set<Rational> distinct(eta.values().begin(), eta.values().end());
    const std::vector<Rational> lambdas = chain.critical_values();
    if (std::vector<Rational>(distinct.begin(), distinct.end()) != lambdas) {
      return fail("critical values differ from distinct eta* values");
    }
    std::string detail;
    for (const Rational& l : lambdas) detail += (detail.empty() ? "" : ", ") + to_string(l);
    return pass("critical values " + detail);
  });

  check("serial rule on every Beurling set", [&] {
    int count = 0;
    for (std::uint64_t bits = 1; bits + 1 < table_.subset_count(); ++bits) {
      const ElementSet x(bits);
      if (!is_beurling(m_, x, eta).is_beurling) continue;
      serial_split(m_, x, caps_);
      ++count;
    }
    return pass(std::to_string(count) + " proper Beurling sets");
  });
}

void Suite::duality_checks() {
  std::optional<std::vector<BlockerVector>> theta_family;
  check("Fulkerson blocker family", [&] {
    const std::vector<BlockerVector> phi = complement_closed_family(m_, caps_);
    theta_family = fulkerson_blocker(m_, caps_);
    std::set<std::uint64_t> phi_sets;
    for (const BlockerVector& v : phi) {
      if (v.denom < 1) return fail("nonpositive denominator");
      if (v.vector != Density::indicator(n_, v.set, make_rational(1, v.denom))) return fail("bad vector");
      phi_sets.insert(v.set.bits());
    }
    for (const BlockerVector& v : *theta_family) {
      if (!phi_sets.count(v.set.bits())) return fail("Theta member outside Phi");
    }
    return pass(std::to_string(theta_family->size()) + " members of Theta, " +
                std::to_string(phi.size()) + " of Phi");
  });

  check("Theta equals the extreme points of Adm(B)", [&] {
    if (!theta_family) return fail("blocker family unavailable");
    if (n_ > 8) return skip("extreme-point enumeration limited to |E| <= 8");
    const auto extreme = enumerate_extreme_points(m_, caps_, options_.extreme_point_budget);
    if (!extreme) return skip("extreme-point enumeration over budget");
    std::set<std::vector<Rational>> a;
    std::set<std::vector<Rational>> b;
    for (const BlockerVector& v : *theta_family) a.insert(v.vector.values());
    for (const Density& v : *extreme) b.insert(v.values());
    if (a != b) return fail("sets differ");
    for (const BlockerVector& v : *theta_family) {
      if (!verify_extremity(m_, v.vector, caps_)) return fail("Theta vector is not extreme");
    }
    return pass();
  });

  std::optional<LpValue> tau;
  std::optional<LpValue> upsilon;
  check("packing and covering LPs equal strength and arboricity", [&] {
    tau = packing_value(m_, caps_);
    upsilon = covering_value(m_, caps_);
    return pass("tau = " + to_string(tau->value) + ", upsilon = " + to_string(upsilon->value));
  });

  if (tau && upsilon && strength_ && arboricity_) {
    const Rational theta = density_theta(m_);
    check("S <= tau <= theta <= upsilon <= D", [&] {
      if (strength_->value <= tau->value && tau->value <= theta && theta <= upsilon->value &&
          upsilon->value <= arboricity_->value) {
        return pass();
      }
      return fail("chain broken");
    });
    check("tau = theta or upsilon = theta forces constant eta*", [&] {
      if (tau->value != theta && upsilon->value != theta) return pass("hypothesis absent");
      return mod_->eta_star.is_constant() ? pass() : fail("eta* not constant");
    });
  }

  if (mod_) {
    check("Fulkerson duality at p = 2", [&] {
      const BlockerModulusCertificate cert = blocker_family_mod2(m_, mod_->eta_star, caps_);
      if (!cert.eta_feasible) return fail("eta* violates a Theta constraint");
      if (!cert.multipliers_found) return fail("no KKT multipliers on tight Theta rows");
      if (cert.value * mod_->mod_value != 1) return fail("product is not 1");
      return pass();
    });
  }

  if (r_ == n_) {
    results_.push_back({"eta* + dual eta* = 1", CheckStatus::kSkip, "dual has rank 0"});
    return;
  }
  check("eta* + dual eta* = 1", [&] {
    const DualEtaIdentity id = dual_eta_identity(m_, caps_);
    return id.max_gap == 0 ? pass() : fail("gap " + to_string(id.max_gap));
  });

  const Matroid md = dual(m_);
  if (!is_loopless(md)) {
    results_.push_back({"dual ratio identities", CheckStatus::kSkip, "dual has loops"});
    return;
  }
  check("dual ratio identities", [&] {
    if (!strength_ || !arboricity_) return fail("ratios unavailable");
    const Rational sd = strength(md, caps_).value;
    const Rational dd = fractional_arboricity(md, caps_).value;
    if (1 / arboricity_->value + 1 / sd != 1) return fail("1/D(M) + 1/S(M*) != 1");
    if (1 / strength_->value + 1 / dd != 1) return fail("1/S(M) + 1/D(M*) != 1");
    return pass();
  });
}

std::vector<CheckResult> Suite::run() {
  matroid_checks();
  modulus_checks();
  partition_checks();
  duality_checks();
  return std::move(results_);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const Matroid& m, const Caps& caps,
                                             const VerifyOptions& options) {
  if (m.rank() < 1 || !is_loopless(m)) {
    throw PreconditionError("invariant suite needs a loopless matroid of positive rank");
  }
  return Suite(m, caps, options).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::kFail;
  });
}

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkip:
      return "SKIP";
  }
  return "?";
}

}  // namespace basemod
