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

#ifndef BASEMOD_LINALG_HPP_
#define BASEMOD_LINALG_HPP_

#include <optional>
#include <vector>

#include "basemod/rational.hpp"

namespace basemod {

// Dense exact linear algebra for small systems.

// Row rank by fraction-exact Gaussian elimination. `rows` is taken by value
// and reduced in place.
int matrix_rank(std::vector<std::vector<Rational>> rows);

// Solves the square system A x = b; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace basemod

#endif  // BASEMOD_LINALG_HPP_
