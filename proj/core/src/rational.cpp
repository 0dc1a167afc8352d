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

#include "capkit/rational.hpp"

#include <cctype>

namespace capkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Signed decimal integer string -> BigInt. Empty or malformed -> nullopt.
std::optional<BigInt> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  BigInt value(std::string(s));
  return negative ? -value : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '+' || whole.front() == '-')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (!all_digits(frac)) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    BigInt whole_part = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt frac_part(std::string(frac));
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational value = Rational(whole_part) + Rational(frac_part, scale);
    return negative ? -value : value;
  }

  auto num = parse_integer(text);
  if (!num) return std::nullopt;
  return Rational(*num);
}

std::string format_rational(const Rational& value) {
  return value.str();
}

}  // namespace capkit
