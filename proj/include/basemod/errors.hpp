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

#ifndef BASEMOD_ERRORS_HPP_
#define BASEMOD_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace basemod {

// Argument outside the operation's domain (unknown element, negative
// density, p <= 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of the call does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration or iteration cap exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computation paths disagree. Indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed matroid input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " +
                                           what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace basemod

#endif  // BASEMOD_ERRORS_HPP_
