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

#ifndef BASEMOD_DENSITY_HPP_
#define BASEMOD_DENSITY_HPP_

#include <cstddef>
#include <vector>

#include "basemod/element_set.hpp"
#include "basemod/rational.hpp"

namespace basemod {

// A rational vector indexed by ground-set elements. Used for densities rho,
// usage probabilities eta, and weights sigma.
class Density {
 public:
  Density() = default;
  explicit Density(std::vector<Rational> values) : values_(std::move(values)) {}
  static Density constant(int n, const Rational& value) {
    return Density(std::vector<Rational>(n, value));
  }
  static Density indicator(int n, ElementSet x, const Rational& scale = 1);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int e) const { return values_[e]; }
  Rational& operator[](int e) { return values_[e]; }
  const std::vector<Rational>& values() const { return values_; }

  Rational sum(ElementSet x) const;
  Rational total() const;
  // Sum of squares.
  Rational energy() const;
  Rational max() const;
  Rational min() const;
  bool is_nonnegative() const;
  bool is_constant() const;
  std::vector<double> to_doubles() const;

  Density scaled(const Rational& factor) const;

  friend bool operator==(const Density&, const Density&) = default;

 private:
  std::vector<Rational> values_;
};

// A probability mass function on bases. bases[i] carries weights[i].
struct BasePmf {
  std::vector<ElementSet> bases;
  std::vector<Rational> weights;

  std::size_t size() const { return bases.size(); }
  Rational total() const;
  // N^T mu: the probability that each element lies in a random base.
  Density usage(int n) const;
  // Weight of `b`, zero if absent.
  Rational weight_of(ElementSet b) const;
};

// Sigma_{e in b} rho(e).
Rational total_usage(const Density& rho, ElementSet b);

// The implicit |bases| x |E| 0/1 usage matrix N.
class UsageMatrix {
 public:
  UsageMatrix(std::vector<ElementSet> bases, int n);

  int rows() const { return static_cast<int>(bases_.size()); }
  int cols() const { return n_; }
  ElementSet row(int i) const { return bases_[i]; }
  const std::vector<ElementSet>& bases() const { return bases_; }
  // Indices of the bases containing e.
  std::vector<int> column(int e) const;
  // Row-major binary64 copy for the numeric kernels.
  std::vector<double> dense() const;

 private:
  std::vector<ElementSet> bases_;
  int n_;
};

}  // namespace basemod

#endif  // BASEMOD_DENSITY_HPP_
