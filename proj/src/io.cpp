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

#include "basemod/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "basemod/errors.hpp"

namespace basemod {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    Line line{number, {}};
    std::istringstream words(t);
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw ParseError("bad integer '" + token + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + token + "'", line);
  }
}

Matroid parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  std::set<std::string> seen;
  for (const Line& line : content_lines(text)) {
    if (line.tokens.size() != 3) {
      throw ParseError("expected 'u v label'", line.number);
    }
    if (!seen.insert(line.tokens[2]).second) {
      throw ParseError("duplicate label '" + line.tokens[2] + "'", line.number);
    }
    if (line.tokens[0] == line.tokens[1]) {
      throw ParseError("edge '" + line.tokens[2] + "' is a self-loop",
                       line.number);
    }
    edges.push_back({line.tokens[0], line.tokens[1], line.tokens[2]});
  }
  return Matroid::graphic(edges);
}

Matroid parse_linear(std::string_view text) {
  std::vector<std::string> labels;
  RationalMatrix rows;
  for (const Line& line : content_lines(text)) {
    if (line.tokens.front() == "labels") {
      if (!labels.empty() || !rows.empty()) {
        throw ParseError("'labels' must come first and only once", line.number);
      }
      std::set<std::string> seen;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (!seen.insert(line.tokens[i]).second) {
          throw ParseError("duplicate label '" + line.tokens[i] + "'",
                           line.number);
        }
        labels.push_back(line.tokens[i]);
      }
      continue;
    }
    std::vector<Rational> row;
    for (const std::string& token : line.tokens) {
      try {
        row.push_back(parse_rational(token));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line.number);
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row length differs from the first row", line.number);
    }
    if (!labels.empty() && row.size() != labels.size()) {
      throw ParseError("row length differs from the label count", line.number);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows", 0);
  return Matroid::linear(rows, std::move(labels));
}

Matroid parse_uniform(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.size() != 1) throw ParseError("expected a single 'uniform k n' line", 0);
  const Line& line = lines.front();
  std::size_t offset = line.tokens.front() == "uniform" ? 1 : 0;
  if (line.tokens.size() != offset + 2) {
    throw ParseError("expected 'uniform k n'", line.number);
  }
  const int k = parse_int(line.tokens[offset], line.number);
  const int n = parse_int(line.tokens[offset + 1], line.number);
  return Matroid::uniform(k, n);
}

Matroid parse_bases(std::string_view text) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::vector<int>> raw_bases;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    std::vector<int> base;
    std::set<int> in_base;
    std::istringstream parts(t);
    std::string item;
    while (std::getline(parts, item, ',')) {
      const std::string label = trim(item);
      if (label.empty()) throw ParseError("empty label", number);
      auto [it, added] = index.try_emplace(label, static_cast<int>(labels.size()));
      if (added) labels.push_back(label);
      if (!in_base.insert(it->second).second) {
        throw ParseError("label '" + label + "' repeated within a base", number);
      }
      base.push_back(it->second);
    }
    raw_bases.push_back(std::move(base));
  }
  if (raw_bases.empty()) throw ParseError("no bases", 0);
  if (labels.size() > kMaxElements) throw ParseError("too many elements", 0);
  std::vector<ElementSet> bases;
  for (const auto& b : raw_bases) {
    ElementSet s;
    for (int e : b) s.insert(e);
    bases.push_back(s);
  }
  return Matroid::explicit_bases(std::move(labels), bases);
}

}  // namespace

InputFormat parse_format(std::string_view name) {
  if (name == "graph") return InputFormat::kGraph;
  if (name == "linear") return InputFormat::kLinear;
  if (name == "uniform") return InputFormat::kUniform;
  if (name == "bases") return InputFormat::kBases;
  throw ParseError("unknown format '" + std::string(name) + "'", 0);
}

std::string_view format_name(InputFormat format) {
  switch (format) {
    case InputFormat::kGraph:
      return "graph";
    case InputFormat::kLinear:
      return "linear";
    case InputFormat::kUniform:
      return "uniform";
    case InputFormat::kBases:
      return "bases";
  }
  return "graph";
}

Matroid parse_matroid(std::string_view text, InputFormat format) {
  try {
    switch (format) {
      case InputFormat::kGraph:
        return parse_graph(text);
      case InputFormat::kLinear:
        return parse_linear(text);
      case InputFormat::kUniform:
        return parse_uniform(text);
      case InputFormat::kBases:
        return parse_bases(text);
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
  throw ParseError("unknown format", 0);
}

Caps parse_caps(std::string_view text) {
  Caps caps;
  std::stringstream items{std::string(text)};
  std::string item;
  while (std::getline(items, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) throw DomainError("caps: expected key=value, got '" + t + "'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    std::uint64_t parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoull(value, &used);
      if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw DomainError("caps: bad value '" + value + "' for " + key);
    }
    if (parsed == 0) throw DomainError("caps: " + key + " must be positive");
    if (key == "subsets") {
      caps.subsets = parsed;
    } else if (key == "bases") {
      caps.bases = parsed;
    } else {
      throw DomainError("caps: unknown key '" + key + "'");
    }
  }
  return caps;
}

std::vector<Rational> parse_p_list(std::string_view text) {
  std::vector<Rational> out;
  std::stringstream items{std::string(text)};
  std::string item;
  while (std::getline(items, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) continue;
    const Rational p = parse_rational(t);
    if (p <= 1) throw DomainError("p must exceed 1, got " + t);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (out.empty()) throw DomainError("empty p list");
  return out;
}

std::string write_graph(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) out += e.u + " " + e.v + " " + e.label + "\n";
  return out;
}

std::string write_linear(const RationalMatrix& rows,
                         const std::vector<std::string>& labels) {
  std::string out = "labels";
  for (const std::string& l : labels) out += " " + l;
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += " ";
      out += to_string(row[j]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace basemod
