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

#ifndef BASEMOD_MATROID_HPP_
#define BASEMOD_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "basemod/element_set.hpp"
#include "basemod/rational.hpp"

namespace basemod {

// Enumeration limits shared by every exhaustive routine.
struct Caps {
  // Upper bound on 2^|E| for subset scans; the default allows |E| <= 20.
  std::uint64_t subsets = std::uint64_t{1} << 20;
  std::uint64_t bases = 1'000'000;
};

struct Edge {
  std::string u;
  std::string v;
  std::string label;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual int ground_size() const = 0;
  virtual int rank(ElementSet x) const = 0;
  virtual std::string_view kind() const = 0;
};

}  // namespace detail

// A matroid on the ground set {0, ..., size()-1} given by an exact rank
// oracle. Elements carry opaque labels; indices follow construction order.
//
// Instances are immutable and cheap to copy (the oracle is shared). Top-level
// factories reject loops and rank-0 matroids; minors and duals built from them
// are not checked, because consuming routines validate what they need.
class Matroid {
 public:
  // U_{k,n} with labels e1..en unless given.
  static Matroid uniform(int k, int n, std::vector<std::string> labels = {});
  static Matroid graphic(const std::vector<Edge>& edges);
  // Columns of `rows` are the elements.
  static Matroid linear(const RationalMatrix& rows,
                        std::vector<std::string> labels = {});
  static Matroid explicit_bases(std::vector<std::string> labels,
                                const std::vector<ElementSet>& bases);

  int size() const { return oracle_->ground_size(); }
  ElementSet ground() const { return ElementSet::full(size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int e) const { return labels_[e]; }
  std::string_view kind() const { return oracle_->kind(); }

  // Throws DomainError if `x` is not a subset of the ground set.
  int rank(ElementSet x) const;
  int rank() const { return oracle_->rank(ground()); }

  // Index of the element with the given label, or -1.
  int index_of(std::string_view label) const;
  // Set of the named elements; throws DomainError for an unknown label.
  ElementSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet x) const;

  Matroid(std::shared_ptr<const detail::RankOracle> oracle,
          std::vector<std::string> labels);

 private:
  std::shared_ptr<const detail::RankOracle> oracle_;
  std::vector<std::string> labels_;
};

// Minors and duals. Element indices of the result follow the parent's order
// restricted to the surviving elements.
Matroid delete_elements(const Matroid& m, ElementSet x);
Matroid restrict_to(const Matroid& m, ElementSet x);
Matroid contract(const Matroid& m, ElementSet x);
Matroid dual(const Matroid& m);
// (m / contracted) with `deleted` removed. Both sets index `m`.
Matroid minor(const Matroid& m, ElementSet deleted, ElementSet contracted);

// Maps a subset of `m` to indices in a minor that keeps exactly `kept`.
ElementSet to_minor_indices(ElementSet x, ElementSet kept);
// Inverse of to_minor_indices.
ElementSet from_minor_indices(ElementSet x, ElementSet kept);

bool is_loopless(const Matroid& m);
ElementSet loops(const Matroid& m);

ElementSet closure(const Matroid& m, ElementSet x);
bool is_closed(const Matroid& m, ElementSet x);
bool is_complement_closed(const Matroid& m, ElementSet x);
bool is_base(const Matroid& m, ElementSet b);
bool is_independent(const Matroid& m, ElementSet x);

// The unique circuit in b + x containing x. Throws PreconditionError if `b`
// is not a base or x is in b.
ElementSet fundamental_circuit(const Matroid& m, ElementSet b, int x);

// All bases in lexicographic order of their ascending index lists. Throws
// ResourceError when 2^|E| exceeds caps.subsets or the base count exceeds
// caps.bases.
std::vector<ElementSet> enumerate_bases(const Matroid& m,
                                        const Caps& caps = {});

// True iff no separator other than {} and E exists (exhaustive over subsets).
bool is_connected(const Matroid& m, const Caps& caps = {});

// Throws ResourceError naming the cap when 2^|E| is larger than allowed.
void check_subset_cap(const Matroid& m, const Caps& caps);

// Exact rank of every subset of E, indexed by ElementSet::bits().
class RankTable {
 public:
  RankTable(const Matroid& m, const Caps& caps = {});

  int size() const { return n_; }
  int rank(ElementSet x) const { return ranks_[x.bits()]; }
  int full_rank() const { return ranks_.back(); }
  std::uint64_t subset_count() const { return ranks_.size(); }

 private:
  int n_;
  std::vector<std::int8_t> ranks_;
};

}  // namespace basemod

#endif  // BASEMOD_MATROID_HPP_
