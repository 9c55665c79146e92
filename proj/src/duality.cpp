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

#include "basemod/duality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "basemod/errors.hpp"
#include "basemod/linalg.hpp"
#include "basemod/lp.hpp"
#include "basemod/principal_partition.hpp"

namespace basemod {
namespace {

std::vector<Rational> unit_row(int n, int e) {
  std::vector<Rational> row(n, 0);
  row[e] = 1;
  return row;
}

std::vector<Rational> indicator_row(int n, ElementSet x) {
  std::vector<Rational> row(n, 0);
  for (int e : x.elements()) row[e] = 1;
  return row;
}

bool admissible_for(const std::vector<ElementSet>& bases, const Density& v) {
  if (!v.is_nonnegative()) return false;
  return std::all_of(bases.begin(), bases.end(),
                     [&](ElementSet b) { return v.sum(b) >= 1; });
}

// Packing (sense <=, maximize) or covering (sense >=, minimize) over bases.
LinearProgram base_lp(const std::vector<ElementSet>& bases, int n, bool packing) {
  LinearProgram lp;
  lp.c.assign(bases.size(), packing ? 1 : -1);
  for (int e = 0; e < n; ++e) {
    std::vector<Rational> row(bases.size(), 0);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (bases[i].contains(e)) row[i] = 1;
    }
    lp.a.push_back(std::move(row));
    lp.sense.push_back(packing ? RowSense::kLessEqual : RowSense::kGreaterEqual);
    lp.b.push_back(1);
  }
  return lp;
}

// Solves a x = 1 for a k-by-k 0/1 system in binary64 with partial pivoting.
// False when singular or when some entry of x is not clearly positive.
bool screen_solve(std::vector<double> a, std::vector<double>& x, int k) {
  std::vector<double> b(k, 1.0);
  for (int c = 0; c < k; ++c) {
    int p = c;
    for (int r = c + 1; r < k; ++r) {
      if (std::abs(a[r * k + c]) > std::abs(a[p * k + c])) p = r;
    }
    if (std::abs(a[p * k + c]) < 1e-9) return false;
    if (p != c) {
      for (int j = 0; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
      std::swap(b[p], b[c]);
    }
    for (int r = c + 1; r < k; ++r) {
      const double f = a[r * k + c] / a[c * k + c];
      if (f == 0.0) continue;
      for (int j = c; j < k; ++j) a[r * k + j] -= f * a[c * k + j];
      b[r] -= f * b[c];
    }
  }
  for (int r = k - 1; r >= 0; --r) {
    double v = b[r];
    for (int j = r + 1; j < k; ++j) v -= a[r * k + j] * x[j];
    x[r] = v / a[r * k + r];
    if (x[r] < 1e-9) return false;
  }
  return true;
}

// Every restricted pattern has binary64 weight at least 1 (up to rounding).
bool screen_admissible(const std::set<std::uint64_t>& patterns,
                       const std::vector<int>& members, const std::vector<double>& x) {
  for (std::uint64_t p : patterns) {
    double total = 0.0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if ((p >> members[j]) & 1) total += x[j];
    }
    if (total < 1.0 - 1e-9) return false;
  }
  return true;
}

Rational a_exact(std::uint64_t pattern, int element) {
  return static_cast<int>((pattern >> element) & 1);
}

}  // namespace

std::vector<BlockerVector> complement_closed_family(const Matroid& m,
                                                    const Caps& caps) {
  const RankTable table(m, caps);
  const ElementSet ground = m.ground();
  const int r = table.full_rank();
  std::vector<BlockerVector> out;
  for (std::uint64_t bits = 1; bits < table.subset_count(); ++bits) {
    const ElementSet x(bits);
    const ElementSet rest = ground - x;
    const int rest_rank = table.rank(rest);
    bool closed = true;
    for (int e : x.elements()) {
      if (table.rank(rest | ElementSet::singleton(e)) == rest_rank) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    const int denom = r - rest_rank;
    if (denom < 1) {
      throw ConsistencyError("complement_closed_family: zero rank gap for " +
                             std::to_string(bits));
    }
    out.push_back(BlockerVector{
        x, denom, Density::indicator(m.size(), x, make_rational(1, denom))});
  }
  return out;
}

std::vector<BlockerVector> fulkerson_blocker(const Matroid& m, const Caps& caps) {
  const std::vector<ElementSet> bases = enumerate_bases(m, caps);
  std::vector<BlockerVector> out;
  for (BlockerVector& v : complement_closed_family(m, caps)) {
    if (!is_connected(contract(m, m.ground() - v.set), caps)) continue;
    if (!admissible_for(bases, v.vector)) {
      throw ConsistencyError("fulkerson_blocker: blocker vector is not admissible");
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool verify_extremity(const Matroid& m, const Density& v, const Caps& caps) {
  const int n = m.size();
  if (v.size() != n) throw DomainError("verify_extremity: size mismatch");
  const std::vector<ElementSet> bases = enumerate_bases(m, caps);
  if (!admissible_for(bases, v)) return false;
  std::vector<std::vector<Rational>> tight;
  for (ElementSet b : bases) {
    if (v.sum(b) == 1) tight.push_back(indicator_row(n, b));
  }
  for (int e = 0; e < n; ++e) {
    if (v[e] == 0) tight.push_back(unit_row(n, e));
  }
  return matrix_rank(std::move(tight)) == n;
}

std::optional<std::vector<Density>> enumerate_extreme_points(const Matroid& m,
                                                             const Caps& caps,
                                                             long budget) {
  const int n = m.size();
  const std::vector<ElementSet> bases = enumerate_bases(m, caps);
  const RankTable table(m, caps);
  const ElementSet ground = m.ground();
  // A vertex with support S is the unique solution of |S| tight base rows
  // restricted to S, all other coordinates being tight at zero. With every
  // entry on S positive, a tight restricted pattern must be inclusion-minimal.
  std::set<std::vector<Rational>> found;
  long solves = 0;
  for (std::uint64_t bits = 1; bits < table.subset_count(); ++bits) {
    const ElementSet support(bits);
    // Some base misses S entirely, so nothing supported on S is admissible.
    if (table.rank(ground - support) == table.full_rank()) continue;
    const int k = support.size();
    std::set<std::uint64_t> pattern_set;
    for (ElementSet b : bases) pattern_set.insert((b & support).bits());
    std::vector<std::uint64_t> patterns;
    for (std::uint64_t p : pattern_set) {
      const bool minimal = std::none_of(pattern_set.begin(), pattern_set.end(), [&](std::uint64_t q) {
        return q != p && (q & ~p) == 0;
      });
      if (minimal) patterns.push_back(p);
    }
    const int np = static_cast<int>(patterns.size());
    if (np < k) continue;
    const std::vector<int> members = support.elements();
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> a(static_cast<std::size_t>(k) * k);
    std::vector<double> x(k);
    std::vector<std::vector<double>> seen;
    while (true) {
      if (++solves > budget) return std::nullopt;
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          a[i * k + j] = (patterns[idx[i]] >> members[j]) & 1 ? 1.0 : 0.0;
        }
      }
      // Binary64 screen; survivors are re-solved exactly. Solution entries of
      // a nonsingular 0/1 system are multiples of 1/det, with det at most the
      // Hadamard bound (4096 for k <= 8), so distinct candidates differ by far
      // more than 1e-9 and a close match is a point already decided.
      auto already_seen = [&] {
        return k <= 8 && std::any_of(seen.begin(), seen.end(), [&](const std::vector<double>& y) {
          for (int j = 0; j < k; ++j) {
            if (std::abs(x[j] - y[j]) > 1e-9) return false;
          }
          return true;
        });
      };
      if (screen_solve(a, x, k) && !already_seen() &&
          screen_admissible(pattern_set, members, x)) {
        seen.push_back(x);
        std::vector<std::vector<Rational>> exact(k, std::vector<Rational>(k, 0));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) exact[i][j] = a_exact(patterns[idx[i]], members[j]);
        }
        auto sol = solve_square(std::move(exact), std::vector<Rational>(k, 1));
        if (sol && std::all_of(sol->begin(), sol->end(),
                               [](const Rational& v) { return v > 0; })) {
          Density v = Density::constant(n, 0);
          for (int j = 0; j < k; ++j) v[members[j]] = (*sol)[j];
          if (admissible_for(bases, v)) found.insert(v.values());
        }
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == np - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::vector<Density> out;
  for (const auto& values : found) out.emplace_back(values);
  return out;
}

DominantMembership dominant_membership(const Matroid& m, const Density& eta,
                                       const Caps& caps) {
  if (eta.size() != m.size()) throw DomainError("dominant_membership: size mismatch");
  if (!eta.is_nonnegative()) throw DomainError("dominant_membership: negative entry");
  const RankTable table(m, caps);
  const ElementSet ground = m.ground();
  const int r = table.full_rank();
  const std::uint64_t count = table.subset_count();
  std::vector<Rational> sums(count);
  DominantMembership out;
  out.violation = 0;
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const std::uint64_t low = bits & (~bits + 1);
    sums[bits] = sums[bits ^ low] + eta[std::countr_zero(low)];
    const ElementSet x(bits);
    const Rational deficit = r - table.rank(ground - x) - sums[bits];
    if (deficit > out.violation) {
      out.violation = deficit;
      out.violating = x;
    }
  }
  out.member = out.violation <= 0;
  return out;
}

LpValue packing_value(const Matroid& m, const Caps& caps) {
  LpValue out;
  out.bases = enumerate_bases(m, caps);
  const LinearProgram lp = base_lp(out.bases, m.size(), true);
  const LpSolution sol = solve_lp(lp);
  out.certified = certifies_optimality(lp, sol);
  if (!out.certified) throw ConsistencyError("packing_value: LP certificate failed");
  out.value = sol.value;
  out.primal = sol.x;
  out.dual = Density(sol.y);
  const Rational s = strength(m, caps).value;
  if (s != out.value) {
    throw ConsistencyError("packing_value: " + to_string(out.value) +
                           " differs from strength " + to_string(s));
  }
  return out;
}

LpValue covering_value(const Matroid& m, const Caps& caps) {
  LpValue out;
  out.bases = enumerate_bases(m, caps);
  const LinearProgram lp = base_lp(out.bases, m.size(), false);
  const LpSolution sol = solve_lp(lp);
  out.certified = certifies_optimality(lp, sol);
  if (!out.certified) throw ConsistencyError("covering_value: LP certificate failed");
  out.value = -sol.value;
  out.primal = sol.x;
  std::vector<Rational> dual(sol.y.size());
  for (std::size_t i = 0; i < dual.size(); ++i) dual[i] = -sol.y[i];
  out.dual = Density(std::move(dual));
  const Rational d = fractional_arboricity(m, caps).value;
  if (d != out.value) {
    throw ConsistencyError("covering_value: " + to_string(out.value) +
                           " differs from arboricity " + to_string(d));
  }
  return out;
}

DualEtaIdentity dual_eta_identity(const Matroid& m, const Caps& caps) {
  if (m.rank() == m.size()) {
    throw DomainError("dual_eta_identity: r(E) = |E|, the dual has rank 0");
  }
  const int n = m.size();
  const Matroid md = dual(m);
  DualEtaIdentity out;
  out.eta = deflate(m, caps).eta_star;
  out.eta_dual = deflate(md, caps, /*allow_loops=*/true).eta_star;
  const ExactEta check = brute_force_eta_family(enumerate_bases(md, caps), n);
  if (check.eta != out.eta_dual) {
    throw ConsistencyError("dual_eta_identity: dual deflation disagrees with brute force");
  }
  out.max_gap = 0;
  for (int e = 0; e < n; ++e) {
    const Rational gap = abs(out.eta[e] + out.eta_dual[e] - 1);
    if (gap > out.max_gap) out.max_gap = gap;
  }
  if (out.max_gap != 0) {
    throw ConsistencyError("dual_eta_identity: eta + eta_dual != 1, gap " +
                           to_string(out.max_gap));
  }
  return out;
}

bool verify_meomod(const Matroid& m, const ModulusResult& result,
                   const Caps& caps) {
  const int n = m.size();
  if (result.rho_star.size() != n || result.eta_star.size() != n) return false;
  const std::vector<ElementSet> bases = enumerate_bases(m, caps);
  const std::set<ElementSet, decltype(&lex_less)> base_set(bases.begin(), bases.end(),
                                                           &lex_less);
  // (i) rho* admissible, eta* = N^T mu for a pmf mu on bases.
  if (!admissible_for(bases, result.rho_star)) return false;
  const BasePmf& pmf = result.pmf;
  if (pmf.bases.size() != pmf.weights.size() || pmf.total() != 1) return false;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (pmf.weights[i] <= 0 || !base_set.count(pmf.bases[i])) return false;
  }
  if (pmf.usage(n) != result.eta_star) return false;
  // (ii) rho* parallel to eta* with factor Mod_2.
  if (result.meo != result.eta_star.energy() || result.mod_value * result.meo != 1) {
    return false;
  }
  if (result.rho_star != result.eta_star.scaled(result.mod_value)) return false;
  // (iii) complementary slackness.
  for (ElementSet b : bases) {
    if (pmf.weight_of(b) > 0 && total_usage(result.rho_star, b) != 1) return false;
  }
  return true;
}

BlockerModulusCertificate blocker_family_mod2(const Matroid& m,
                                              const Density& eta_star,
                                              const Caps& caps) {
  const int n = m.size();
  const std::vector<BlockerVector> theta = fulkerson_blocker(m, caps);
  BlockerModulusCertificate out;
  out.value = eta_star.energy();
  out.eta_feasible =
      eta_star.is_nonnegative() &&
      std::all_of(theta.begin(), theta.end(), [&](const BlockerVector& v) {
        return eta_star.sum(v.set) >= v.denom;
      });

  // KKT: 2 eta* = sum_theta mu_theta v_theta + nu, mu >= 0 on tight rows,
  // nu >= 0 supported where eta* vanishes.
  std::vector<BlockerVector> tight;
  for (const BlockerVector& v : theta) {
    if (eta_star.sum(v.set) == v.denom) tight.push_back(v);
  }
  std::vector<int> zeros;
  for (int e = 0; e < n; ++e) {
    if (eta_star[e] == 0) zeros.push_back(e);
  }
  const std::size_t vars = tight.size() + zeros.size();
  LinearProgram lp;
  lp.c.assign(vars, 0);
  for (int e = 0; e < n; ++e) {
    std::vector<Rational> row(vars, 0);
    for (std::size_t i = 0; i < tight.size(); ++i) row[i] = tight[i].vector[e];
    for (std::size_t j = 0; j < zeros.size(); ++j) {
      if (zeros[j] == e) row[tight.size() + j] = 1;
    }
    lp.a.push_back(std::move(row));
    lp.sense.push_back(RowSense::kEqual);
    lp.b.push_back(2 * eta_star[e]);
  }
  out.multipliers_found = vars > 0 && solve_lp(lp).status == LpStatus::kOptimal;
  return out;
}

}  // namespace basemod
