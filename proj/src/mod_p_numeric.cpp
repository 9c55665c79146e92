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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <limits>

#include "basemod/errors.hpp"
#include "basemod/kernels.hpp"
#include "basemod/modulus.hpp"

namespace basemod {
namespace {

// Lagrangian dual of min sum rho^p s.t. N rho >= 1:
//   g(lambda) = sum lambda - (p - 1) sum_e rho_e^p,
//   rho_e = ((N^T lambda)_e / p)^{1/(p-1)},  grad g = 1 - N rho.
class DualProblem {
 public:
  DualProblem(const std::vector<ElementSet>& bases, int n, double p)
      : rows_(bases.size()), cols_(n), p_(p), matrix_(rows_ * cols_, 0.0) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (int e : bases[i].elements()) matrix_[i * cols_ + e] = 1.0;
    }
  }

  std::size_t rows() const { return rows_; }

  // Fills rho and usage (N rho); returns g(lambda).
  double evaluate(const std::vector<double>& lambda, std::vector<double>& rho,
                  std::vector<double>& usage) const {
    const auto& k = kernels::active_table();
    rho.resize(cols_);
    usage.resize(rows_);
    k.gemv_t(matrix_.data(), rows_, cols_, lambda.data(), rho.data());
    double energy = 0.0;
    for (double& v : rho) {
      v = std::pow(std::max(v, 0.0) / p_, 1.0 / (p_ - 1.0));
      energy += std::pow(v, p_);
    }
    k.gemv(matrix_.data(), rows_, cols_, rho.data(), usage.data());
    double total = 0.0;
    for (double l : lambda) total += l;
    return total - (p_ - 1.0) * energy;
  }

  // Energy of rho rescaled to be admissible; +inf if some base has no usage.
  double feasible_energy(const std::vector<double>& rho,
                         const std::vector<double>& usage) const {
    const double min_usage = *std::min_element(usage.begin(), usage.end());
    if (min_usage <= 0.0) return std::numeric_limits<double>::infinity();
    double energy = 0.0;
    for (double v : rho) energy += std::pow(v / min_usage, p_);
    return energy;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  double p_;
  std::vector<double> matrix_;
};

}  // namespace

ModPNumeric mod_p_projected_gradient(const std::vector<ElementSet>& bases,
                                     int n, double p, double rel_gap,
                                     int max_iterations) {
  if (!(p > 1.0)) throw DomainError("mod_p_projected_gradient: p must exceed 1");
  if (bases.empty()) throw DomainError("mod_p_projected_gradient: no bases");
  const DualProblem problem(bases, n, p);
  const std::size_t m = problem.rows();

  std::vector<double> lambda(m, 1.0 / static_cast<double>(m));
  std::vector<double> y = lambda;
  std::vector<double> rho;
  std::vector<double> usage;
  std::vector<double> rho_y;
  std::vector<double> usage_y;
  std::vector<double> candidate(m);
  std::vector<double> rho_c;
  std::vector<double> usage_c;

  ModPNumeric out;
  double g_lambda = problem.evaluate(lambda, rho, usage);
  out.lower = g_lambda;
  out.upper = problem.feasible_energy(rho, usage);
  out.rho = rho;
  double step = 1.0;
  double momentum = 1.0;

  for (int it = 0; it < max_iterations; ++it) {
    out.iterations = it + 1;
    const double g_y = problem.evaluate(y, rho_y, usage_y);
    // Backtracking on the quadratic lower model of the concave dual.
    double g_c = 0.0;
    while (true) {
      double model = g_y;
      double dist2 = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double grad = 1.0 - usage_y[i];
        candidate[i] = std::max(0.0, y[i] + step * grad);
        const double d = candidate[i] - y[i];
        model += grad * d;
        dist2 += d * d;
      }
      g_c = problem.evaluate(candidate, rho_c, usage_c);
      if (g_c >= model - dist2 / (2.0 * step) - 1e-15 * std::abs(g_y) ||
          step < 1e-18) {
        break;
      }
      step *= 0.5;
    }

    const double upper = problem.feasible_energy(rho_c, usage_c);
    if (upper < out.upper) {
      out.upper = upper;
      const double min_usage = *std::min_element(usage_c.begin(), usage_c.end());
      out.rho = rho_c;
      for (double& v : out.rho) v /= min_usage;
    }
    out.lower = std::max(out.lower, g_c);
    if (out.upper - out.lower <= rel_gap * out.upper) return out;

    // Accelerated update with function-value restart.
    const double next_momentum =
        0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
    if (g_c < g_lambda) {
      momentum = 1.0;
      y = lambda;
      continue;
    }
    const double beta = (momentum - 1.0) / next_momentum;
    for (std::size_t i = 0; i < m; ++i) {
      y[i] = std::max(0.0, candidate[i] + beta * (candidate[i] - lambda[i]));
    }
    lambda = candidate;
    g_lambda = g_c;
    momentum = next_momentum;
    step *= 1.25;
  }
  char gap[32];
  std::snprintf(gap, sizeof(gap), "%.3e", (out.upper - out.lower) / out.upper);
  throw ResourceError(std::string("mod_p_projected_gradient: relative gap ") + gap +
                      " not closed within the iteration cap");
}

}  // namespace basemod
