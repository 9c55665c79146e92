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

// basemod: base-family modulus analysis of matroids.
//
//   basemod analyze FILE [--format graph|linear|uniform|bases] [--p 2,3,3/2]
//                        [--caps subsets=N,bases=M] [--csv DIR]
//   basemod verify  [FILE] [--format ...] [--caps ...] [--seed S] [--suite N]
//   basemod random  --family graphic|linear --size N [--seed S]
//
// Exit codes: 0 success, 1 usage or failed checks, 2 parse error,
// 3 cap exceeded, 4 internal consistency failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "basemod/errors.hpp"
#include "basemod/io.hpp"
#include "basemod/random.hpp"
#include "basemod/report.hpp"
#include "basemod/verify.hpp"

namespace {

using namespace basemod;

constexpr int kExitChecksFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitCaps = 3;
constexpr int kExitConsistency = 4;

struct Common {
  std::string input;
  std::string format = "graph";
  std::string caps = "";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file " + path, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Caps caps_from(const Common& c) {
  try {
    return parse_caps(c.caps);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

Matroid load(const Common& c) {
  InputFormat format;
  try {
    format = parse_format(c.format);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
  return parse_matroid(read_input(c.input), format);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_analyze(const Common& c, const std::string& p_list, const std::string& csv_dir) {
  const Caps caps = caps_from(c);
  std::vector<Rational> p_values;
  try {
    p_values = parse_p_list(p_list);
  } catch (const DomainError& e) {
    throw ParseError(std::string("--p: ") + e.what(), 0);
  }
  const Matroid m = load(c);
  AnalysisReport report = analyze(m, p_values, caps);
  report.source = c.input;
  report.format = c.format;
  std::cout << render(report);
  if (!csv_dir.empty()) {
    std::filesystem::create_directories(csv_dir);
    write_file(std::filesystem::path(csv_dir) / "elements.csv", elements_csv(report));
    write_file(std::filesystem::path(csv_dir) / "theta.csv", theta_csv(report));
  }
  return 0;
}

bool print_checks(const std::string& title, const std::vector<CheckResult>& results) {
  int passed = 0;
  int skipped = 0;
  int failed = 0;
  std::cout << "== " << title << "\n";
  for (const CheckResult& r : results) {
    std::cout << status_name(r.status) << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    passed += r.status == CheckStatus::kPass;
    skipped += r.status == CheckStatus::kSkip;
    failed += r.status == CheckStatus::kFail;
  }
  std::cout << passed << " passed, " << skipped << " skipped, " << failed << " failed\n";
  return failed == 0;
}

int cmd_verify(const Common& c, std::uint64_t seed, int suite) {
  const Caps caps = caps_from(c);
  VerifyOptions options;
  options.seed = seed;
  bool ok = true;
  if (!c.input.empty()) {
    const Matroid m = load(c);
    ok = print_checks(c.input, run_invariant_suite(m, caps, options)) && ok;
  }
  for (int s = 1; s <= suite; ++s) {
    const Matroid m = random_suite_instance(s);
    ok = print_checks("random graphic seed " + std::to_string(s) + " (" +
                          std::to_string(m.size()) + " edges)",
                      run_invariant_suite(m, caps, options)) &&
         ok;
  }
  if (c.input.empty() && suite == 0) {
    std::cerr << "verify: give an input file or --suite N\n";
    return kExitChecksFailed;
  }
  std::cout << (ok ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
  return ok ? 0 : kExitChecksFailed;
}

int cmd_random(const Common& c, const std::string& family, int size, std::uint64_t seed) {
  const Caps caps = caps_from(c);
  if (size < 1) throw ParseError("--size must be positive", 0);
  if (size >= kMaxElements || (std::uint64_t{1} << size) > caps.subsets) {
    throw ResourceError("random: size " + std::to_string(size) +
                        " exceeds the subset cap subsets=" + std::to_string(caps.subsets));
  }
  if (family == "graphic") {
    std::cout << "# random graphic seed=" << seed << " edges=" << size << "\n"
              << write_graph(random_graph_edges(seed, size));
  } else {
    std::vector<std::string> labels;
    for (int j = 1; j <= size; ++j) labels.push_back("e" + std::to_string(j));
    std::cout << "# random linear seed=" << seed << " columns=" << size << "\n"
              << write_linear(random_linear_matrix(seed, size), labels);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Base-family modulus analysis of matroids"};
  app.require_subcommand(1);

  Common common;
  std::string p_list = "2";
  std::string csv_dir;
  std::uint64_t seed = 1;
  int suite = 0;
  std::string family = "graphic";
  int size = 6;

  const std::vector<std::string> formats{"graph", "linear", "uniform", "bases"};
  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", common.input, "Matroid file, or - for stdin");
    if (input_required) in->required();
    sub->add_option("--format", common.format, "Input format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--caps", common.caps, "Enumeration caps, e.g. subsets=1048576,bases=1000000");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Print the JSON analysis report");
  add_common(analyze_cmd, true);
  analyze_cmd->add_option("--p", p_list, "Comma-separated exponents, e.g. 2,3,3/2")
      ->capture_default_str();
  analyze_cmd->add_option("--csv", csv_dir, "Also write elements.csv and theta.csv here");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
  verify_cmd->add_option("--suite", suite, "Also check random graphic instances 1..N")
      ->check(CLI::NonNegativeNumber);

  CLI::App* random_cmd = app.add_subcommand("random", "Print a seeded random instance");
  random_cmd->add_option("--family", family, "graphic or linear")
      ->check(CLI::IsMember({"graphic", "linear"}))
      ->capture_default_str();
  random_cmd->add_option("--size", size, "Edges or columns")->capture_default_str();
  random_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
  random_cmd->add_option("--caps", common.caps, "Enumeration caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitChecksFailed;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(common, p_list, csv_dir);
    if (verify_cmd->parsed()) return cmd_verify(common, seed, suite);
    return cmd_random(common, family, size, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCaps;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
}
