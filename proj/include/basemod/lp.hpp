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

#ifndef BASEMOD_LP_HPP_
#define BASEMOD_LP_HPP_

#include <vector>

#include "basemod/rational.hpp"

namespace basemod {

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

// maximize c^T x  subject to  a_i^T x (sense_i) b_i,  x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<RowSense> sense;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  // Optimal primal point.
  std::vector<Rational> x;
  // Optimal dual multipliers, one per row: y_i >= 0 on <= rows, y_i <= 0 on
  // >= rows, free on = rows, with A^T y >= c and b^T y = value.
  std::vector<Rational> y;
};

// Two-phase dense tableau simplex in exact rationals with Bland's rule, so it
// always terminates.
LpSolution solve_lp(const LinearProgram& lp);

// True iff `y` is feasible for the dual of `lp` (sign pattern and A^T y >= c)
// and `x` is primal feasible with c^T x == b^T y.
bool certifies_optimality(const LinearProgram& lp, const LpSolution& sol);

}  // namespace basemod

#endif  // BASEMOD_LP_HPP_
