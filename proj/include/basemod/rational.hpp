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

#ifndef BASEMOD_RATIONAL_HPP_
#define BASEMOD_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace basemod {

// Arbitrary-precision rational, always kept in canonical (lowest-terms) form.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", "-p/q". Throws DomainError on malformed text or a zero
// denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

Rational sum(const std::vector<Rational>& values);

}  // namespace basemod

#endif  // BASEMOD_RATIONAL_HPP_
