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

#include "capkit/rng.hpp"

#include <cassert>
#include <limits>

namespace capkit {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task_index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (task_index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  assert(bound >= 1);
  if (bound == 1) return 0;
  // Reject the tail that would bias the modulo.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t value;
  do {
    value = next();
  } while (value >= limit);
  return value % bound;
}

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  assert(lo <= hi);
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rational Rng::rational_in_unit(int max_denominator) {
  assert(max_denominator >= 1);
  const std::int64_t q = int_in(1, max_denominator);
  const std::int64_t p = int_in(0, q);
  return Rational(p, q);
}

Rational Rng::rational_on_grid(int lo, int hi, int denominator) {
  assert(lo <= hi && denominator >= 1);
  const std::int64_t steps = static_cast<std::int64_t>(hi - lo) * denominator;
  const std::int64_t k = int_in(0, steps);
  return Rational(lo) + Rational(k, denominator);
}

}  // namespace capkit
