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

#ifndef CAPKIT_RATIONAL_HPP_
#define CAPKIT_RATIONAL_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace capkit {

// All capacity values are exact rationals with arbitrary-precision integer
// parts. Equality of capacities, additivity and invariant-subfield membership
// are syntactic checks on the reduced canonical form.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" (any signs, q != 0), plain integers, and finite decimal
// literals such as "0.25" or "-1.5". Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

// Reduced canonical form: "p/q", with the "/q" elided when q == 1.
std::string format_rational(const Rational& value);

}  // namespace capkit

#endif  // CAPKIT_RATIONAL_HPP_
