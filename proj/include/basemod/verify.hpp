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

#ifndef BASEMOD_VERIFY_HPP_
#define BASEMOD_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "basemod/matroid.hpp"

namespace basemod {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int admissibility_samples = 200;
  int lex_samples = 500;
  // Exhaustive scans over pairs of subsets or per-subset minors are skipped
  // above this ground-set size.
  int exhaustive_limit = 12;
  long extreme_point_budget = 5'000'000;
};

// Runs every invariant check that applies to `m`. ResourceError from a cap
// propagates; internal inconsistencies become failed checks.
std::vector<CheckResult> run_invariant_suite(const Matroid& m, const Caps& caps = {},
                                             const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

std::string_view status_name(CheckStatus status);

}  // namespace basemod

#endif  // BASEMOD_VERIFY_HPP_
