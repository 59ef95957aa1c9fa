// Copyright 2026 The qbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef QBOUNDS_ERROR_H_
#define QBOUNDS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbounds {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group-spec text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structurally valid input that violates a mathematical invariant
// (non-prime p, gcd(p, m) != 1, non-faithful action, bad table, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The requested computation is not available for this group family.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A computation needs a metadata field (d, period, solvable) that was not
// declared. `field()` names it.
class MissingMetadata : public Error {
 public:
  explicit MissingMetadata(const std::string& field, const std::string& why)
      : Error("missing metadata '" + field + "': " + why), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// The cochain oracle would exceed its configured memory budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t required, std::size_t budget)
      : Error("memory budget exceeded: need " + std::to_string(required) +
              " bytes, budget is " + std::to_string(budget) + " bytes"),
        required_(required),
        budget_(budget) {}

  std::size_t required() const { return required_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

}  // namespace qbounds

#endif  // QBOUNDS_ERROR_H_
