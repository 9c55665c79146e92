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

#include "basemod/density.hpp"

#include <algorithm>

namespace basemod {

Density Density::indicator(int n, ElementSet x, const Rational& scale) {
  Density d = constant(n, 0);
  for (int e : x.elements()) d[e] = scale;
  return d;
}

Rational Density::sum(ElementSet x) const {
  Rational s = 0;
  for (int e : x.elements()) s += values_[e];
  return s;
}

Rational Density::total() const { return basemod::sum(values_); }

Rational Density::energy() const {
  Rational s = 0;
  for (const Rational& v : values_) s += v * v;
  return s;
}

Rational Density::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

Rational Density::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

bool Density::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v >= 0; });
}

bool Density::is_constant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [this](const Rational& v) { return v == values_.front(); });
}

std::vector<double> Density::to_doubles() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const Rational& v : values_) out.push_back(v.get_d());
  return out;
}

Density Density::scaled(const Rational& factor) const {
  Density d = *this;
  for (Rational& v : d.values_) v *= factor;
  return d;
}

Rational BasePmf::total() const { return basemod::sum(weights); }

Density BasePmf::usage(int n) const {
  Density eta = Density::constant(n, 0);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (int e : bases[i].elements()) eta[e] += weights[i];
  }
  return eta;
}

Rational BasePmf::weight_of(ElementSet b) const {
  Rational w = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i] == b) w += weights[i];
  }
  return w;
}

Rational total_usage(const Density& rho, ElementSet b) { return rho.sum(b); }

UsageMatrix::UsageMatrix(std::vector<ElementSet> bases, int n)
    : bases_(std::move(bases)), n_(n) {}

std::vector<int> UsageMatrix::column(int e) const {
  std::vector<int> out;
  for (int i = 0; i < rows(); ++i) {
    if (bases_[i].contains(e)) out.push_back(i);
  }
  return out;
}

std::vector<double> UsageMatrix::dense() const {
  std::vector<double> out(static_cast<std::size_t>(rows()) * n_, 0.0);
  for (int i = 0; i < rows(); ++i) {
    for (int e : bases_[i].elements()) out[static_cast<std::size_t>(i) * n_ + e] = 1.0;
  }
  return out;
}

}  // namespace basemod
