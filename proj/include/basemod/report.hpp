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

#ifndef BASEMOD_REPORT_HPP_
#define BASEMOD_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "basemod/duality.hpp"
#include "basemod/matroid.hpp"
#include "basemod/modulus.hpp"
#include "basemod/principal_partition.hpp"
#include "json.hpp"

namespace basemod {

struct ModPEntry {
  ModPResult closed;
  ModPNumeric numeric;
};

struct AnalysisReport {
  explicit AnalysisReport(Matroid m) : matroid(std::move(m)) {}

  std::string source;
  std::string format;
  Matroid matroid;
  ModulusResult modulus;
  std::vector<ModPEntry> mod_p;
  RatioWitness strength;
  RatioWitness arboricity;
  Rational theta;
  LpValue tau;
  LpValue upsilon;
  PartitionChain partition;
  DeflationChain deflation;
  std::vector<BlockerVector> theta_family;
  bool homogeneous = false;
  std::optional<DualEtaIdentity> dual_identity;
};

// Runs every analysis and re-asserts the cross-identities between modules.
// Throws ConsistencyError if any of them fails.
AnalysisReport analyze(const Matroid& m, const std::vector<Rational>& p_values,
                       const Caps& caps = {});

// Rationals become "p/q" strings; binary64 values appear only under "numeric".
nlohmann::json to_json(const AnalysisReport& report);

// Serialized JSON with sorted keys and a trailing newline.
std::string render(const AnalysisReport& report);

// element,eta_star,rho_star[,eta_dual]
std::string elements_csv(const AnalysisReport& report);
// set,denom followed by one column per element.
std::string theta_csv(const AnalysisReport& report);

}  // namespace basemod

#endif  // BASEMOD_REPORT_HPP_
