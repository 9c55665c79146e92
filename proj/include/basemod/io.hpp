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

#ifndef BASEMOD_IO_HPP_
#define BASEMOD_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "basemod/matroid.hpp"

namespace basemod {

// Text formats. Blank lines and lines starting with '#' are ignored.
//
//   graph    one edge per line: "u v label"
//   linear   optional "labels a b c ..." line, then one matrix row per line
//            with entries "p/q" or "p"; columns are the elements
//   uniform  "uniform k n"
//   bases    one base per line, labels separated by commas; the ground set
//            is the union of all labels in order of first appearance
enum class InputFormat { kGraph, kLinear, kUniform, kBases };

// Throws ParseError for an unknown name.
InputFormat parse_format(std::string_view name);
std::string_view format_name(InputFormat format);

// Throws ParseError (with the 1-based line number where applicable) on
// malformed input, duplicate labels, or an invalid matroid.
Matroid parse_matroid(std::string_view text, InputFormat format);

// "subsets=N,bases=M" (either key optional). Throws DomainError.
Caps parse_caps(std::string_view text);
// Comma-separated rationals, each > 1, e.g. "2,3,3/2". Throws DomainError.
std::vector<Rational> parse_p_list(std::string_view text);

std::string write_graph(const std::vector<Edge>& edges);
std::string write_linear(const RationalMatrix& rows,
                         const std::vector<std::string>& labels);

}  // namespace basemod

#endif  // BASEMOD_IO_HPP_
