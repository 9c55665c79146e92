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

#include "basemod/lp.hpp"

#include <cstddef>
#include <optional>

#include "basemod/errors.hpp"

namespace basemod {
namespace {

// Tableau rows hold B^{-1} [A | I-ish | artificials | rhs].
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), t_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = t_[row][col];
    for (Rational& v : t_[row]) v /= p;
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == row || t_[r][col] == 0) continue;
      const Rational f = t_[r][col];
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (t_[row][c] != 0) t_[r][c] -= f * t_[row][c];
      }
    }
    basis_[row] = col;
  }

  // Maximizes cost^T x over the current basic feasible solution. Columns
  // with allowed[c] == false never enter. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost,
                const std::vector<bool>& allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < cols_ && !entering; ++c) {
        if (!allowed[c]) continue;
        Rational reduced = cost[c];
        for (std::size_t r = 0; r < rows(); ++r) {
          if (t_[r][c] != 0) reduced -= cost[basis_[r]] * t_[r][c];
        }
        if (reduced > 0) entering = c;
      }
      if (!entering) return true;
      const std::size_t col = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (t_[r][col] <= 0) continue;
        const Rational ratio = rhs(r) / t_[r][col];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, col);
    }
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (lp.sense.size() != m || lp.b.size() != m) {
    throw DomainError("solve_lp: row count mismatch");
  }
  for (const auto& row : lp.a) {
    if (row.size() != n) throw DomainError("solve_lp: column count mismatch");
  }

  // Normalize to b >= 0.
  std::vector<bool> flipped(m, false);
  std::vector<RowSense> sense = lp.sense;
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.b[i] < 0) {
      flipped[i] = true;
      if (sense[i] == RowSense::kLessEqual) {
        sense[i] = RowSense::kGreaterEqual;
      } else if (sense[i] == RowSense::kGreaterEqual) {
        sense[i] = RowSense::kLessEqual;
      }
    }
  }

  // Column layout: originals, one slack/surplus per inequality row, one
  // artificial per >= or = row.
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  std::vector<std::size_t> art_col(m, SIZE_MAX);
  std::size_t cols = n;
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != RowSense::kEqual) slack_col[i] = cols++;
  }
  const std::size_t first_art = cols;
  for (std::size_t i = 0; i < m; ++i) {
    if (sense[i] != RowSense::kLessEqual) art_col[i] = cols++;
  }

  Tableau t(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational sign = flipped[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * lp.a[i][j];
    t.rhs(i) = sign * lp.b[i];
    if (sense[i] == RowSense::kLessEqual) {
      t.at(i, slack_col[i]) = 1;
      t.basis()[i] = slack_col[i];
    } else {
      if (sense[i] == RowSense::kGreaterEqual) t.at(i, slack_col[i]) = -1;
      t.at(i, art_col[i]) = 1;
      t.basis()[i] = art_col[i];
    }
  }

  LpSolution sol;
  std::vector<bool> allowed(cols, true);
  if (first_art < cols) {
    std::vector<Rational> phase1(cols);
    for (std::size_t c = first_art; c < cols; ++c) phase1[c] = -1;
    t.optimize(phase1, allowed);
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] >= first_art) infeasibility += t.rhs(r);
    }
    if (infeasibility != 0) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive zero-level artificials out where a real column can replace them;
    // rows where none can are redundant and keep their artificial at zero.
    for (std::size_t r = 0; r < m; ++r) {
      if (t.basis()[r] < first_art) continue;
      for (std::size_t c = 0; c < first_art; ++c) {
        if (t.at(r, c) != 0) {
          t.pivot(r, c);
          break;
        }
      }
    }
    for (std::size_t c = first_art; c < cols; ++c) allowed[c] = false;
  }

  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j];
  if (!t.optimize(cost, allowed)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.x.assign(n, 0);
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis()[r] < n) sol.x[t.basis()[r]] = t.rhs(r);
  }
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += lp.c[j] * sol.x[j];

  // y_i = c_B^T B^{-1} e_i, read off the column that started as e_i.
  sol.y.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t unit_col =
        sense[i] == RowSense::kLessEqual ? slack_col[i] : art_col[i];
    Rational yi = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (t.at(r, unit_col) != 0) yi += cost[t.basis()[r]] * t.at(r, unit_col);
    }
    sol.y[i] = flipped[i] ? -yi : yi;
  }
  return sol;
}

bool certifies_optimality(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != LpStatus::kOptimal) return false;
  const std::size_t m = lp.a.size();
  const std::size_t n = lp.c.size();
  if (sol.x.size() != n || sol.y.size() != m) return false;
  for (const Rational& v : sol.x) {
    if (v < 0) return false;
  }
  Rational primal = 0;
  for (std::size_t j = 0; j < n; ++j) primal += lp.c[j] * sol.x[j];
  Rational dual = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.a[i][j] * sol.x[j];
    switch (lp.sense[i]) {
      case RowSense::kLessEqual:
        if (lhs > lp.b[i] || sol.y[i] < 0) return false;
        break;
      case RowSense::kGreaterEqual:
        if (lhs < lp.b[i] || sol.y[i] > 0) return false;
        break;
      case RowSense::kEqual:
        if (lhs != lp.b[i]) return false;
        break;
    }
    dual += lp.b[i] * sol.y[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < m; ++i) col += lp.a[i][j] * sol.y[i];
    if (col < lp.c[j]) return false;
  }
  return primal == dual && primal == sol.value;
}

}  // namespace basemod
