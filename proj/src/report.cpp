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

#include "basemod/report.hpp"

#include <cmath>
#include <sstream>

#include "basemod/errors.hpp"

namespace basemod {
namespace {

using nlohmann::json;

constexpr double kModPRelativeTolerance = 1e-6;

json label_list(const Matroid& m, ElementSet x) {
  json out = json::array();
  for (int e : x.elements()) out.push_back(m.label(e));
  return out;
}

json by_label(const Matroid& m, const Density& d) {
  json out = json::object();
  for (int e = 0; e < m.size(); ++e) out[m.label(e)] = to_string(d[e]);
  return out;
}

json ratio(const Matroid& m, const RatioWitness& w) {
  return {{"value", to_string(w.value)}, {"witness", label_list(m, w.witness)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void require(bool condition, const std::string& what) {
  if (!condition) throw ConsistencyError("analyze: " + what);
}

}  // namespace

AnalysisReport analyze(const Matroid& m, const std::vector<Rational>& p_values,
                       const Caps& caps) {
  AnalysisReport r(m);
  r.modulus = mod2(m, caps);
  r.strength = strength(m, caps);
  r.arboricity = fractional_arboricity(m, caps);
  r.theta = density_theta(m);
  r.tau = packing_value(m, caps);
  r.upsilon = covering_value(m, caps);
  r.deflation = deflate(m, caps);
  r.partition = critical_values(m, caps);
  r.theta_family = fulkerson_blocker(m, caps);
  r.homogeneous = r.modulus.eta_star.is_constant();

  const Density& eta = r.modulus.eta_star;
  require(verify_meomod(m, r.modulus, caps), "optimality conditions fail");
  require(1 / eta.max() == r.strength.value, "1/max eta* differs from strength");
  require(1 / eta.min() == r.arboricity.value, "1/min eta* differs from arboricity");
  require(r.strength.value <= r.tau.value && r.tau.value <= r.theta &&
              r.theta <= r.upsilon.value && r.upsilon.value <= r.arboricity.value,
          "S <= tau <= theta <= upsilon <= D fails");
  require(r.homogeneous == (r.strength.value == r.arboricity.value),
          "homogeneity and S = D disagree");
  require(r.deflation.eta_star == eta, "deflation differs from eta*");

  const std::vector<ElementSet> bases = enumerate_bases(m, caps);
  for (const Rational& p : p_values) {
    ModPEntry entry{mod_p(m, p, caps),
                    mod_p_projected_gradient(bases, m.size(), p.get_d())};
    const double rel = std::abs(entry.closed.value - entry.numeric.value()) /
                       entry.closed.value;
    require(rel <= kModPRelativeTolerance,
            "Mod_p closed form and numeric solve differ at p = " + to_string(p));
    if (entry.closed.exact) {
      require(p != 2 || *entry.closed.exact == r.modulus.mod_value,
              "Mod_2 closed form differs from mod2");
    }
    r.mod_p.push_back(std::move(entry));
  }

  if (m.rank() < m.size()) r.dual_identity = dual_eta_identity(m, caps);
  return r;
}

json to_json(const AnalysisReport& r) {
  const Matroid& m = r.matroid;
  json out;
  out["input"] = {{"source", r.source},
                  {"format", r.format},
                  {"kind", std::string(m.kind())},
                  {"elements", label_list(m, m.ground())},
                  {"size", m.size()},
                  {"rank", m.rank()}};
  out["eta_star"] = by_label(m, r.modulus.eta_star);
  out["rho_star"] = by_label(m, r.modulus.rho_star);
  out["meo"] = to_string(r.modulus.meo);
  out["mod2"] = to_string(r.modulus.mod_value);

  json pmf = json::array();
  for (std::size_t i = 0; i < r.modulus.pmf.size(); ++i) {
    pmf.push_back({{"base", label_list(m, r.modulus.pmf.bases[i])},
                   {"weight", to_string(r.modulus.pmf.weights[i])}});
  }
  out["optimal_pmf"] = pmf;

  json mod_p = json::object();
  json mod_p_numeric = json::object();
  for (const ModPEntry& e : r.mod_p) {
    const std::string key = to_string(e.closed.p);
    if (e.closed.exact) mod_p[key] = to_string(*e.closed.exact);
    mod_p_numeric[key] = {{"closed_form", e.closed.value},
                          {"solver_lower", e.numeric.lower},
                          {"solver_upper", e.numeric.upper},
                          {"solver_iterations", e.numeric.iterations}};
  }
  out["mod_p"] = mod_p;

  out["strength"] = ratio(m, r.strength);
  out["arboricity"] = ratio(m, r.arboricity);
  out["theta"] = to_string(r.theta);
  out["tau"] = to_string(r.tau.value);
  out["upsilon"] = to_string(r.upsilon.value);
  out["homogeneous"] = r.homogeneous;

  json critical = json::array();
  for (const PartitionLevel& level : r.partition.levels) {
    critical.push_back({{"lambda", to_string(level.lambda)},
                        {"lower", label_list(m, level.lower)},
                        {"upper", label_list(m, level.upper)}});
  }
  out["critical_values"] = critical;

  json blocks = json::array();
  for (const DeflationBlock& b : r.deflation.blocks) {
    blocks.push_back({{"elements", label_list(m, b.elements)},
                      {"rank", b.rank},
                      {"eta", to_string(b.eta)}});
  }
  out["deflation_blocks"] = blocks;

  json family = json::array();
  for (const BlockerVector& v : r.theta_family) {
    family.push_back({{"set", label_list(m, v.set)}, {"denom", v.denom}});
  }
  out["theta_family"] = family;

  if (r.dual_identity) {
    out["dual_identity"] = {{"eta_dual", by_label(m, r.dual_identity->eta_dual)},
                            {"max_gap", to_string(r.dual_identity->max_gap)}};
  }

  json eta_numeric = json::object();
  for (int e = 0; e < m.size(); ++e) eta_numeric[m.label(e)] = r.modulus.eta_numeric[e];
  out["numeric"] = {{"tolerance", r.modulus.numeric_tolerance},
                    {"eta_min_norm_point", eta_numeric},
                    {"eta_max_error", r.modulus.numeric_max_error},
                    {"mod_p", mod_p_numeric},
                    {"mod_p_tolerance", kModPRelativeTolerance}};
  return out;
}

std::string render(const AnalysisReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string elements_csv(const AnalysisReport& r) {
  const Matroid& m = r.matroid;
  std::ostringstream out;
  out << "element,eta_star,rho_star";
  if (r.dual_identity) out << ",eta_dual";
  out << "\n";
  for (int e = 0; e < m.size(); ++e) {
    out << csv_field(m.label(e)) << "," << to_string(r.modulus.eta_star[e]) << ","
        << to_string(r.modulus.rho_star[e]);
    if (r.dual_identity) out << "," << to_string(r.dual_identity->eta_dual[e]);
    out << "\n";
  }
  return out.str();
}

std::string theta_csv(const AnalysisReport& r) {
  const Matroid& m = r.matroid;
  std::ostringstream out;
  out << "set,denom";
  for (int e = 0; e < m.size(); ++e) out << "," << csv_field(m.label(e));
  out << "\n";
  for (const BlockerVector& v : r.theta_family) {
    std::string set;
    for (int e : v.set.elements()) set += (set.empty() ? "" : " ") + m.label(e);
    out << csv_field(set) << "," << v.denom;
    for (int e = 0; e < m.size(); ++e) out << "," << to_string(v.vector[e]);
    out << "\n";
  }
  return out.str();
}

}  // namespace basemod
