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

#include "basemod/principal_partition.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

#include "basemod/duality.hpp"
#include "basemod/errors.hpp"

namespace basemod {
namespace {

// Candidate beats incumbent under "smallest cardinality, then lex".
bool preferred(ElementSet candidate, ElementSet incumbent) {
  if (candidate.size() != incumbent.size()) {
    return candidate.size() < incumbent.size();
  }
  return lex_less(candidate, incumbent);
}

std::vector<Rational> subset_sums(const Density& weights, std::uint64_t count) {
  std::vector<Rational> sums(count);
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const std::uint64_t low = bits & (~bits + 1);
    sums[bits] = sums[bits ^ low] + weights[std::countr_zero(low)];
  }
  return sums;
}

void require_positive_rank(const Matroid& m, const char* who) {
  if (m.rank() < 1) throw PreconditionError(std::string(who) + ": rank 0");
}

}  // namespace

RatioWitness strength(const Matroid& m, const Caps& caps) {
  require_positive_rank(m, "strength");
  const RankTable table(m, caps);
  const int r = table.full_rank();
  const ElementSet ground = m.ground();
  std::optional<RatioWitness> best;
  long best_num = 0;
  long best_den = 1;
  for (std::uint64_t bits = 1; bits < table.subset_count(); ++bits) {
    const ElementSet x(bits);
    const long drop = r - table.rank(ground - x);
    if (drop <= 0) continue;
    const long size = x.size();
    // size/drop vs best_num/best_den
    const long lhs = size * best_den;
    const long rhs = best_num * drop;
    if (!best || lhs < rhs || (lhs == rhs && preferred(x, best->witness))) {
      best = RatioWitness{Rational(size, drop), x};
      best->value.canonicalize();
      best_num = size;
      best_den = drop;
    }
  }
  return *best;
}

RatioWitness weighted_strength(const Matroid& m, const Density& sigma,
                               const Caps& caps) {
  require_positive_rank(m, "weighted_strength");
  if (sigma.size() != m.size()) throw DomainError("weighted_strength: size mismatch");
  const RankTable table(m, caps);
  const int r = table.full_rank();
  const ElementSet ground = m.ground();
  const std::vector<Rational> sums = subset_sums(sigma, table.subset_count());
  std::optional<RatioWitness> best;
  for (std::uint64_t bits = 1; bits < table.subset_count(); ++bits) {
    const ElementSet x(bits);
    const int drop = r - table.rank(ground - x);
    if (drop <= 0) continue;
    const Rational ratio = sums[bits] / drop;
    if (!best || ratio < best->value ||
        (ratio == best->value && preferred(x, best->witness))) {
      best = RatioWitness{ratio, x};
    }
  }
  return *best;
}

RatioWitness fractional_arboricity(const Matroid& m, const Caps& caps) {
  require_positive_rank(m, "fractional_arboricity");
  const RankTable table(m, caps);
  long best_num = 0;
  long best_den = 1;
  ElementSet maximizers;
  for (std::uint64_t bits = 1; bits < table.subset_count(); ++bits) {
    const ElementSet x(bits);
    const long rank = table.rank(x);
    if (rank == 0) continue;
    const long size = x.size();
    const long lhs = size * best_den;
    const long rhs = best_num * rank;
    if (lhs > rhs) {
      best_num = size;
      best_den = rank;
      maximizers = x;
    } else if (lhs == rhs) {
      maximizers = maximizers | x;
    }
  }
  const long union_rank = table.rank(maximizers);
  if (static_cast<long>(maximizers.size()) * best_den != best_num * union_rank) {
    throw ConsistencyError("fractional_arboricity: union of maximizers is not a maximizer");
  }
  Rational value(best_num, best_den);
  value.canonicalize();
  return RatioWitness{value, maximizers};
}

Rational density_theta(const Matroid& m) {
  require_positive_rank(m, "density_theta");
  Rational theta(m.size(), m.rank());
  theta.canonicalize();
  return theta;
}

ParametricMinimizers parametric_minimizers(const Matroid& m,
                                           const Rational& lambda,
                                           const Caps& caps) {
  if (lambda < 0) throw DomainError("parametric_minimizers: lambda < 0");
  const RankTable table(m, caps);
  const int n = m.size();
  // Scaled objective den * f(X) = den * r(X) + num * |E - X|.
  const mpz_class num = lambda.get_num();
  const mpz_class den = lambda.get_den();
  std::optional<mpz_class> best;
  ElementSet min_set = m.ground();
  ElementSet max_set;
  for (std::uint64_t bits = 0; bits < table.subset_count(); ++bits) {
    const ElementSet x(bits);
    const mpz_class value = den * table.rank(x) + num * (n - x.size());
    if (!best || value < *best) {
      best = value;
      min_set = x;
      max_set = x;
    } else if (value == *best) {
      min_set = min_set & x;
      max_set = max_set | x;
    }
  }
  for (ElementSet s : {min_set, max_set}) {
    if (den * table.rank(s) + num * (n - s.size()) != *best) {
      throw ConsistencyError("parametric_minimizers: minimizers are not a lattice");
    }
  }
  Rational value(*best, den);
  value.canonicalize();
  return ParametricMinimizers{value, min_set, max_set};
}

DeflationChain deflate(const Matroid& m, const Caps& caps, bool allow_loops) {
  require_positive_rank(m, "deflate");
  const RankTable table(m, caps);
  const int n = m.size();
  const ElementSet ground = m.ground();

  DeflationChain chain;
  chain.eta_star = Density::constant(n, 0);
  ElementSet done;

  const ElementSet loop_set = loops(m);
  if (!loop_set.empty()) {
    if (!allow_loops) throw PreconditionError("deflate: matroid has loops");
    chain.blocks.push_back(DeflationBlock{
        loop_set, minor(m, ground - loop_set, ElementSet{}), 0, Rational(0)});
    done = loop_set;
  }

  while (done != ground) {
    const ElementSet rest = ground - done;
    const int done_rank = table.rank(done);
    auto contracted_rank = [&](ElementSet x) {
      return table.rank(x | done) - done_rank;
    };
    for (int e : rest.elements()) {
      if (contracted_rank(ElementSet::singleton(e)) == 0) {
        throw ConsistencyError("deflate: contraction by a block created a loop");
      }
    }
    long best_num = 0;
    long best_den = 1;
    ElementSet densest;
    for (std::uint64_t sub = rest.bits(); sub != 0; sub = (sub - 1) & rest.bits()) {
      const ElementSet x(sub);
      const long rank = contracted_rank(x);
      if (rank == 0) continue;
      const long lhs = static_cast<long>(x.size()) * best_den;
      const long rhs = best_num * rank;
      if (lhs > rhs) {
        best_num = x.size();
        best_den = rank;
        densest = x;
      } else if (lhs == rhs) {
        densest = densest | x;
      }
    }
    const int block_rank = contracted_rank(densest);
    if (static_cast<long>(densest.size()) * best_den !=
        best_num * block_rank) {
      throw ConsistencyError("deflate: densest sets are not closed under union");
    }
    Rational eta(block_rank, densest.size());
    eta.canonicalize();

    DeflationBlock block{densest, minor(m, rest - densest, done), block_rank, eta};
    const Density constant = Density::constant(densest.size(), eta);
    if (!dominant_membership(block.minor, constant, caps).member) {
      throw ConsistencyError("deflate: block is not homogeneous");
    }
    if (!chain.blocks.empty() && chain.blocks.back().eta >= eta) {
      throw ConsistencyError("deflate: block values are not increasing");
    }
    for (int e : densest.elements()) chain.eta_star[e] = eta;
    chain.blocks.push_back(std::move(block));
    done = done | densest;
  }
  return chain;
}

std::vector<Rational> PartitionChain::critical_values() const {
  std::vector<Rational> out;
  for (const PartitionLevel& level : levels) out.push_back(level.lambda);
  return out;
}

PartitionChain critical_values(const Matroid& m, const Caps& caps) {
  const DeflationChain chain = deflate(m, caps);
  PartitionChain out;
  ElementSet lower;
  for (const DeflationBlock& block : chain.blocks) {
    const ElementSet upper = lower | block.elements;
    const ParametricMinimizers pm = parametric_minimizers(m, block.eta, caps);
    if (pm.min_set != lower || pm.max_set != upper) {
      throw ConsistencyError("critical_values: chain disagrees with parametric minimizers at " +
                             to_string(block.eta));
    }
    out.levels.push_back(PartitionLevel{block.eta, lower, upper, block.minor});
    lower = upper;
  }

  std::set<Rational> critical;
  for (const DeflationBlock& block : chain.blocks) critical.insert(block.eta);
  for (int q = 1; q <= m.size(); ++q) {
    for (int p = 1; p <= q; ++p) {
      Rational lambda(p, q);
      lambda.canonicalize();
      if (lambda.get_den() != q || critical.count(lambda)) continue;
      const ParametricMinimizers pm = parametric_minimizers(m, lambda, caps);
      if (pm.min_set != pm.max_set) {
        throw ConsistencyError("critical_values: unexpected critical value " +
                               to_string(lambda));
      }
    }
  }
  return out;
}

BeurlingCertificate is_beurling(const Matroid& m, ElementSet x,
                                const Density& eta_star,
                                const std::vector<ElementSet>& fair_support) {
  if (!x.is_subset_of(m.ground())) throw DomainError("is_beurling: bad set");
  BeurlingCertificate cert;
  cert.set = x;
  cert.lhs = eta_star.sum(x);
  const int rest_rank = m.rank(m.ground() - x);
  cert.rhs = m.rank() - rest_rank;
  cert.is_beurling = cert.lhs == cert.rhs;
  if (cert.is_beurling) {
    for (ElementSet b : fair_support) {
      if ((b - x).size() != rest_rank) cert.fair_bases_consistent = false;
    }
  }
  return cert;
}

SerialSplit serial_split(const Matroid& m, ElementSet x, const Caps& caps) {
  const ElementSet ground = m.ground();
  if (x.empty() || x == ground) {
    throw PreconditionError("serial_split: X must be a proper nonempty subset");
  }
  const ModulusResult whole = mod2(m, caps);
  const BeurlingCertificate cert = is_beurling(m, x, whole.eta_star);
  if (!cert.is_beurling) throw PreconditionError("serial_split: X is not Beurling");

  const ElementSet rest = ground - x;
  const Matroid deleted = delete_elements(m, x);  // ground E - X
  const Matroid contracted = contract(m, rest);   // ground X
  const ModulusResult left = mod2(deleted, caps);
  const ModulusResult right = mod2(contracted, caps);

  SerialSplit out;
  out.meo_deleted = left.meo;
  out.meo_contracted = right.meo;
  out.meo_total = whole.meo;
  if (left.meo + right.meo != whole.meo) {
    throw ConsistencyError("serial_split: MEO does not split");
  }

  for (std::size_t i = 0; i < left.pmf.size(); ++i) {
    for (std::size_t j = 0; j < right.pmf.size(); ++j) {
      out.product.bases.push_back(from_minor_indices(left.pmf.bases[i], rest) |
                                  from_minor_indices(right.pmf.bases[j], x));
      out.product.weights.push_back(left.pmf.weights[i] * right.pmf.weights[j]);
    }
  }
  ModulusResult recombined = whole;
  recombined.pmf = out.product;
  recombined.fair_support = out.product.bases;
  out.product_optimal = verify_meomod(m, recombined, caps);

  out.restrictions_match = true;
  int local = 0;
  for (int e : rest.elements()) {
    if (left.eta_star[local++] != whole.eta_star[e]) out.restrictions_match = false;
  }
  local = 0;
  for (int e : x.elements()) {
    if (right.eta_star[local++] != whole.eta_star[e]) out.restrictions_match = false;
  }
  if (!out.product_optimal || !out.restrictions_match) {
    throw ConsistencyError("serial_split: recombined pmf is not optimal");
  }
  return out;
}

}  // namespace basemod
