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

#ifndef CAPKIT_GENERATORS_HPP_
#define CAPKIT_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/rng.hpp"

namespace capkit {

// Piecewise-linear distortion on [0,1] fixing f(0) = 0 and f(1) = 1.
// Concave instances (non-increasing slopes) turn probabilities into
// 2-alternating capacities; convex ones into belief functions.
class DistortionFunction {
 public:
  struct Breakpoint {
    Rational t;
    Rational value;
  };

  // Breakpoints must start at (0,0), end at (1,1), with strictly increasing
  // t and non-decreasing values. Throws InputError.
  explicit DistortionFunction(std::vector<Breakpoint> breakpoints);

  static DistortionFunction identity();
  static DistortionFunction random_concave(Rng& rng, int segments);
  static DistortionFunction random_convex(Rng& rng, int segments);

  Rational operator()(const Rational& t) const;  // linear interpolation

  bool is_concave() const;  // slopes non-increasing
  bool is_convex() const;   // slopes non-decreasing

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }

 private:
  std::vector<Breakpoint> breakpoints_;
};

// Atom weights drawn as random rationals (denominator <= 64), normalized to
// sum exactly 1. Identical seeds give identical tables.
ProbabilityMeasure random_probability(const GroundSet& ground, std::uint64_t seed);

// c(A) = f(P(A)) for a concave f; the output is re-validated 2-alternating
// by the checker before release (a rejection there is a generator bug and
// throws TheoremViolation).
Capacity distorted_probability(const ProbabilityMeasure& p,
                               const DistortionFunction& f);

// Random nonnegative Möbius masses on `support_size` distinct non-empty
// subsets, normalized to 1 and assembled by the zeta transform; validated
// ∞-monotone.
Capacity random_belief(const GroundSet& ground, std::uint64_t seed,
                       int support_size);

// Conjugate of random_belief; validated ∞-alternating.
Capacity random_plausibility(const GroundSet& ground, std::uint64_t seed,
                             int support_size);

// Unit Möbius mass on s (non-empty): c(A) = 1 iff s ⊆ A.
Capacity unanimity_capacity(const GroundSet& ground, Subset s);

enum class CapacityClass {
  TwoAlternating,
  TwoMonotone,
  TwoAlternatingNotInfinity,
};

struct RejectionSample {
  Capacity capacity;
  int rejections = 0;
};

// Draws monotone tables on the grid with the given denominator and keeps the
// first one the requested class checker accepts. Throws BudgetError when
// max_draws tables were rejected.
RejectionSample rejection_sample_class(const GroundSet& ground,
                                       std::uint64_t seed, CapacityClass cls,
                                       int denominator_bound,
                                       int max_draws = 200000);

// A random monotone table that fails 2-alternation (checker-confirmed).
Capacity random_non_two_alternating(const GroundSet& ground, std::uint64_t seed,
                                    int denominator_bound = 8,
                                    int max_draws = 200000);

struct SandwichPair {
  Capacity mu;  // 2-alternating
  Capacity nu;  // 2-monotone, nu <= mu
};

enum class SandwichPairKind {
  // nu = conjugate(mu); always 2-monotone and dominated, since 2-alternation
  // gives mu(A) + mu(A^c) >= 1.
  Conjugate,
  // mu and nu are distinct distortions (concave vs convex) of one base
  // probability, making nu a belief function with nu <= mu by construction;
  // both facts are still checker-verified before release.
  IndependentBelief,
};

SandwichPair sandwich_pair(const GroundSet& ground, std::uint64_t seed,
                           SandwichPairKind kind = SandwichPairKind::Conjugate);

// A random 2-alternating capacity: mixes distorted probabilities,
// plausibilities, and (for n <= 3) rejection-sampled tables. Every output is
// checker-validated.
Capacity random_two_alternating(const GroundSet& ground, std::uint64_t seed);

// Seeded corpora used by the fuzz campaigns and the acceptance suite.
std::vector<Capacity> two_alternating_corpus(const GroundSet& ground, int count,
                                             std::uint64_t seed);
std::vector<Capacity> non_two_alternating_corpus(const GroundSet& ground,
                                                 int count, std::uint64_t seed);
// Mixture across the classification ladder: probabilities, proper
// 2-alternating capacities, beliefs, plausibilities, unanimity games and
// their conjugates.
std::vector<Capacity> mixed_corpus(const GroundSet& ground, int count,
                                   std::uint64_t seed);

// A random chain over the ground set: a sorted subsequence of a random
// maximal chain (possibly empty).
Chain random_chain(const GroundSet& ground, std::uint64_t seed);

// Decreasing family of concave distortions of one probability: totally
// ordered under dominance, every member 2-alternating.
std::vector<Capacity> totally_ordered_family(const GroundSet& ground,
                                             int count, std::uint64_t seed);

}  // namespace capkit

#endif  // CAPKIT_GENERATORS_HPP_
