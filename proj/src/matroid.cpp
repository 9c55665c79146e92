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

#include "basemod/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "basemod/errors.hpp"
#include "basemod/linalg.hpp"

namespace basemod {
namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const std::string& l : labels) {
    if (l.empty()) throw DomainError("empty element label");
    if (!seen.insert(l).second) {
      throw DomainError("duplicate element label '" + l + "'");
    }
  }
}

std::string describe(const std::vector<std::string>& labels, ElementSet x) {
  std::string out = "{";
  bool first = true;
  for (int e : x.elements()) {
    if (!first) out += ",";
    out += labels[e];
    first = false;
  }
  return out + "}";
}

class UniformOracle final : public detail::RankOracle {
 public:
  UniformOracle(int k, int n) : k_(k), n_(n) {}
  int ground_size() const override { return n_; }
  int rank(ElementSet x) const override { return std::min(k_, x.size()); }
  std::string_view kind() const override { return "uniform"; }

 private:
  int k_;
  int n_;
};

class GraphicOracle final : public detail::RankOracle {
 public:
  GraphicOracle(std::vector<std::pair<int, int>> ends, int vertices)
      : ends_(std::move(ends)), vertices_(vertices) {}
  int ground_size() const override { return static_cast<int>(ends_.size()); }

  // Forest size of the edge subset: number of successful unions.
  int rank(ElementSet x) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    int r = 0;
    for (int e : x.elements()) {
      const int a = find(ends_[e].first);
      const int b = find(ends_[e].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  }
  std::string_view kind() const override { return "graphic"; }

 private:
  std::vector<std::pair<int, int>> ends_;
  int vertices_;
};

class LinearOracle final : public detail::RankOracle {
 public:
  explicit LinearOracle(RationalMatrix columns) : columns_(std::move(columns)) {}
  int ground_size() const override { return static_cast<int>(columns_.size()); }
  int rank(ElementSet x) const override {
    std::vector<std::vector<Rational>> rows;
    for (int e : x.elements()) rows.push_back(columns_[e]);
    return matrix_rank(std::move(rows));
  }
  std::string_view kind() const override { return "linear"; }

 private:
  RationalMatrix columns_;
};

class ExplicitBasesOracle final : public detail::RankOracle {
 public:
  ExplicitBasesOracle(int n, std::vector<ElementSet> bases)
      : n_(n), bases_(std::move(bases)) {}
  int ground_size() const override { return n_; }
  int rank(ElementSet x) const override {
    int best = 0;
    for (ElementSet b : bases_) best = std::max(best, (b & x).size());
    return best;
  }
  std::string_view kind() const override { return "bases"; }

 private:
  int n_;
  std::vector<ElementSet> bases_;
};

class MinorOracle final : public detail::RankOracle {
 public:
  MinorOracle(Matroid parent, ElementSet kept, ElementSet contracted)
      : parent_(std::move(parent)),
        kept_(kept),
        contracted_(contracted),
        contracted_rank_(parent_.rank(contracted)) {}
  int ground_size() const override { return kept_.size(); }
  int rank(ElementSet x) const override {
    return parent_.rank(from_minor_indices(x, kept_) | contracted_) -
           contracted_rank_;
  }
  std::string_view kind() const override { return "minor"; }

 private:
  Matroid parent_;
  ElementSet kept_;
  ElementSet contracted_;
  int contracted_rank_;
};

class DualOracle final : public detail::RankOracle {
 public:
  explicit DualOracle(Matroid parent)
      : parent_(std::move(parent)), parent_rank_(parent_.rank()) {}
  int ground_size() const override { return parent_.size(); }
  int rank(ElementSet x) const override {
    return x.size() - parent_rank_ + parent_.rank(parent_.ground() - x);
  }
  std::string_view kind() const override { return "dual"; }

 private:
  Matroid parent_;
  int parent_rank_;
};

void check_top_level(const Matroid& m) {
  if (m.size() < 1) throw DomainError("empty ground set");
  if (m.rank() < 1) throw DomainError("matroid has rank 0");
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(ElementSet::singleton(e)) != 1) {
      throw DomainError("element '" + m.label(e) + "' is a loop");
    }
  }
}

}  // namespace

Matroid::Matroid(std::shared_ptr<const detail::RankOracle> oracle,
                 std::vector<std::string> labels)
    : oracle_(std::move(oracle)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != oracle_->ground_size()) {
    throw DomainError("label count does not match ground set size");
  }
  if (labels_.size() > kMaxElements) {
    throw DomainError("ground set larger than " +
                      std::to_string(kMaxElements) + " elements");
  }
  check_labels(labels_);
}

Matroid Matroid::uniform(int k, int n, std::vector<std::string> labels) {
  if (n < 1 || n > kMaxElements) throw DomainError("uniform: bad n");
  if (k < 1 || k > n) throw DomainError("uniform: need 1 <= k <= n");
  if (labels.empty()) labels = default_labels(n);
  Matroid m(std::make_shared<UniformOracle>(k, n), std::move(labels));
  check_top_level(m);
  return m;
}

Matroid Matroid::graphic(const std::vector<Edge>& edges) {
  std::map<std::string, int> vertex_ids;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::string> labels;
  for (const Edge& edge : edges) {
    if (edge.u == edge.v) {
      throw DomainError("edge '" + edge.label + "' is a self-loop");
    }
    const int u = vertex_ids.try_emplace(edge.u, vertex_ids.size()).first->second;
    const int v = vertex_ids.try_emplace(edge.v, vertex_ids.size()).first->second;
    ends.emplace_back(u, v);
    labels.push_back(edge.label);
  }
  if (ends.empty()) throw DomainError("empty ground set");
  const int vertices = static_cast<int>(vertex_ids.size());
  Matroid m(std::make_shared<GraphicOracle>(std::move(ends), vertices),
            std::move(labels));
  check_top_level(m);
  return m;
}

Matroid Matroid::linear(const RationalMatrix& rows,
                        std::vector<std::string> labels) {
  if (rows.empty() || rows.front().empty()) {
    throw DomainError("empty matrix");
  }
  const std::size_t n = rows.front().size();
  RationalMatrix columns(n, std::vector<Rational>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = rows[i][j];
  }
  if (labels.empty()) labels = default_labels(static_cast<int>(n));
  Matroid m(std::make_shared<LinearOracle>(std::move(columns)),
            std::move(labels));
  check_top_level(m);
  return m;
}

Matroid Matroid::explicit_bases(std::vector<std::string> labels,
                                const std::vector<ElementSet>& bases) {
  const int n = static_cast<int>(labels.size());
  if (bases.empty()) throw DomainError("no bases given");
  std::vector<ElementSet> sorted = bases;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw DomainError("duplicate base " + describe(labels, sorted[i]));
    }
  }
  for (ElementSet b : sorted) {
    if (!b.is_subset_of(ElementSet::full(n))) {
      throw DomainError("base uses an unknown element");
    }
    if (b.size() != sorted.front().size()) {
      throw DomainError("bases " + describe(labels, sorted.front()) + " and " +
                        describe(labels, b) + " differ in size");
    }
  }
  // Base exchange: for x in B1-B2 some y in B2-B1 gives (B1-x)+y a base.
  constexpr std::size_t kExchangeCheckPairs = 10'000;
  if (sorted.size() * sorted.size() <= kExchangeCheckPairs) {
    const std::set<std::uint64_t> known = [&] {
      std::set<std::uint64_t> s;
      for (ElementSet b : sorted) s.insert(b.bits());
      return s;
    }();
    for (ElementSet b1 : sorted) {
      for (ElementSet b2 : sorted) {
        for (int x : (b1 - b2).elements()) {
          bool found = false;
          for (int y : (b2 - b1).elements()) {
            ElementSet swapped = b1;
            swapped.erase(x);
            swapped.insert(y);
            if (known.count(swapped.bits())) {
              found = true;
              break;
            }
          }
          if (!found) {
            throw DomainError("base exchange fails for bases " +
                              describe(labels, b1) + " and " +
                              describe(labels, b2));
          }
        }
      }
    }
  }
  Matroid m(std::make_shared<ExplicitBasesOracle>(n, std::move(sorted)),
            std::move(labels));
  check_top_level(m);
  return m;
}

int Matroid::rank(ElementSet x) const {
  if (!x.is_subset_of(ground())) {
    throw DomainError("subset is not contained in the ground set");
  }
  return oracle_->rank(x);
}

int Matroid::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

ElementSet Matroid::set_of(const std::vector<std::string>& labels) const {
  ElementSet x;
  for (const std::string& l : labels) {
    const int i = index_of(l);
    if (i < 0) throw DomainError("unknown element '" + l + "'");
    x.insert(i);
  }
  return x;
}

std::vector<std::string> Matroid::labels_of(ElementSet x) const {
  std::vector<std::string> out;
  for (int e : x.elements()) out.push_back(labels_[e]);
  return out;
}

ElementSet to_minor_indices(ElementSet x, ElementSet kept) {
  ElementSet out;
  int local = 0;
  for (int e : kept.elements()) {
    if (x.contains(e)) out.insert(local);
    ++local;
  }
  return out;
}

ElementSet from_minor_indices(ElementSet x, ElementSet kept) {
  ElementSet out;
  int local = 0;
  for (int e : kept.elements()) {
    if (x.contains(local)) out.insert(e);
    ++local;
  }
  return out;
}

Matroid minor(const Matroid& m, ElementSet deleted, ElementSet contracted) {
  if (!(deleted | contracted).is_subset_of(m.ground())) {
    throw DomainError("minor: set not contained in ground set");
  }
  if (!(deleted & contracted).empty()) {
    throw DomainError("minor: deleted and contracted sets overlap");
  }
  const ElementSet kept = m.ground() - deleted - contracted;
  std::vector<std::string> labels;
  for (int e : kept.elements()) labels.push_back(m.label(e));
  return Matroid(std::make_shared<MinorOracle>(m, kept, contracted),
                 std::move(labels));
}

Matroid delete_elements(const Matroid& m, ElementSet x) {
  return minor(m, x, ElementSet{});
}

Matroid restrict_to(const Matroid& m, ElementSet x) {
  return minor(m, m.ground() - x, ElementSet{});
}

Matroid contract(const Matroid& m, ElementSet x) {
  return minor(m, ElementSet{}, x);
}

Matroid dual(const Matroid& m) {
  return Matroid(std::make_shared<DualOracle>(m), m.labels());
}

ElementSet loops(const Matroid& m) {
  ElementSet out;
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(ElementSet::singleton(e)) == 0) out.insert(e);
  }
  return out;
}

bool is_loopless(const Matroid& m) { return loops(m).empty(); }

ElementSet closure(const Matroid& m, ElementSet x) {
  const int r = m.rank(x);
  ElementSet cl = x;
  for (int y : (m.ground() - x).elements()) {
    ElementSet extended = x;
    extended.insert(y);
    if (m.rank(extended) == r) cl.insert(y);
  }
  return cl;
}

bool is_closed(const Matroid& m, ElementSet x) { return closure(m, x) == x; }

bool is_complement_closed(const Matroid& m, ElementSet x) {
  return is_closed(m, m.ground() - x);
}

bool is_independent(const Matroid& m, ElementSet x) {
  return m.rank(x) == x.size();
}

bool is_base(const Matroid& m, ElementSet b) {
  return b.size() == m.rank() && is_independent(m, b);
}

ElementSet fundamental_circuit(const Matroid& m, ElementSet b, int x) {
  if (!is_base(m, b)) throw PreconditionError("fundamental_circuit: not a base");
  if (x < 0 || x >= m.size()) throw DomainError("fundamental_circuit: bad element");
  if (b.contains(x)) {
    throw PreconditionError("fundamental_circuit: element lies in the base");
  }
  ElementSet circuit = b;
  circuit.insert(x);
  // Drop every base element whose removal keeps x dependent on the rest.
  for (int e : b.elements()) {
    ElementSet candidate = circuit;
    candidate.erase(e);
    if (m.rank(candidate) < candidate.size()) circuit = candidate;
  }
  return circuit;
}

void check_subset_cap(const Matroid& m, const Caps& caps) {
  if (m.size() >= 63 ||
      (std::uint64_t{1} << m.size()) > caps.subsets) {
    throw ResourceError("subset cap exceeded: 2^" + std::to_string(m.size()) +
                        " subsets > subsets=" + std::to_string(caps.subsets));
  }
}

std::vector<ElementSet> enumerate_bases(const Matroid& m, const Caps& caps) {
  check_subset_cap(m, caps);
  const int n = m.size();
  const int r = m.rank();
  std::vector<ElementSet> bases;
  if (r > n) return bases;
  // Combinations of r indices in lexicographic order.
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ElementSet candidate;
    for (int i : idx) candidate.insert(i);
    if (m.rank(candidate) == r) {
      if (bases.size() >= caps.bases) {
        throw ResourceError("base cap exceeded: more than bases=" +
                            std::to_string(caps.bases) + " bases");
      }
      bases.push_back(candidate);
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return bases;
}

bool is_connected(const Matroid& m, const Caps& caps) {
  const RankTable table(m, caps);
  const int r = table.full_rank();
  const ElementSet ground = m.ground();
  for (std::uint64_t bits = 1; bits + 1 < table.subset_count(); ++bits) {
    const ElementSet x(bits);
    if (table.rank(x) + table.rank(ground - x) == r) return false;
  }
  return true;
}

RankTable::RankTable(const Matroid& m, const Caps& caps) : n_(m.size()) {
  check_subset_cap(m, caps);
  const std::uint64_t count = std::uint64_t{1} << n_;
  ranks_.resize(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    ranks_[bits] = static_cast<std::int8_t>(m.rank(ElementSet(bits)));
  }
}

}  // namespace basemod
