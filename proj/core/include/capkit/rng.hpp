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

#ifndef CAPKIT_RNG_HPP_
#define CAPKIT_RNG_HPP_

#include <cstdint>
#include <random>

#include "capkit/rational.hpp"

namespace capkit {

// splitmix64 step; used to derive independent per-task seeds from
// (root seed, task index) so parallel case generation stays reproducible.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task_index);

// Deterministic random source. mt19937_64 output is fully specified by the
// standard; the bounded draws below avoid std::uniform_int_distribution,
// whose algorithm is implementation-defined, so identical seeds produce
// identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound >= 1. Rejection sampled.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);

  bool coin() { return (next() & 1u) != 0; }

  // p/q with q uniform in [1, max_denominator] and p uniform in [0, q].
  Rational rational_in_unit(int max_denominator);

  // Uniform numerator on the fixed grid {lo, lo + 1/den, ..., hi}.
  Rational rational_on_grid(int lo, int hi, int denominator);

 private:
  std::mt19937_64 engine_;
};

}  // namespace capkit

#endif  // CAPKIT_RNG_HPP_
