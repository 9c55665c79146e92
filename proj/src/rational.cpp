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

#include "basemod/rational.hpp"

#include <cctype>
#include <string>

#include "basemod/errors.hpp"

namespace basemod {
namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

}  // namespace basemod
