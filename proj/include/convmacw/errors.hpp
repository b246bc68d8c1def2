// Copyright 2026 The convmacw Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace convmacw {

/// Bad arguments: mismatched fields, wrong shapes, malformed encoders.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request, e.g. inverting zero.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input text that could not be parsed. `column` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column = 0)
      : std::runtime_error(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A computation would exceed a configured enumeration limit.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& parameter, unsigned long long needed,
                unsigned long long limit)
      : std::runtime_error("size guard exceeded: " + parameter + " needs " +
                           std::to_string(needed) + " > limit " +
                           std::to_string(limit)),
        parameter_(parameter),
        needed_(needed),
        limit_(limit) {}
  const std::string& parameter() const noexcept { return parameter_; }
  unsigned long long needed() const noexcept { return needed_; }
  unsigned long long limit() const noexcept { return limit_; }

 private:
  std::string parameter_;
  unsigned long long needed_;
  unsigned long long limit_;
};

/// A theorem-backed identity failed to hold. Always an internal error.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation was called outside the class of codes it applies to.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace convmacw
