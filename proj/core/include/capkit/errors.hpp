// Copyright 2026 The capkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPKIT_ERRORS_HPP_
#define CAPKIT_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace capkit {

// Malformed input or a violated operation precondition. The CLI maps this
// to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed the configured ceiling. Carries the
// (possibly saturated) number of tuples the check would have to visit.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t tuple_count)
      : std::runtime_error(what), tuple_count(tuple_count) {}

  std::uint64_t tuple_count;
};

// A verified postcondition of one of the implemented theorems failed.
// This is never expected to fire: it either exposes an implementation bug or
// falsifies the underlying mathematics. The CLI maps it to exit code 3 and
// dumps `detail` in full.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what, std::string detail = {})
      : std::logic_error(what), detail(std::move(detail)) {}

  std::string detail;
};

}  // namespace capkit

#endif  // CAPKIT_ERRORS_HPP_
