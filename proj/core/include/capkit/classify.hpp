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

#ifndef CAPKIT_CLASSIFY_HPP_
#define CAPKIT_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "capkit/capacity.hpp"

namespace capkit {

// A tuple of sets violating one of the inclusion–exclusion inequalities,
// together with the two sides of the failed comparison. For the alternating
// family `lhs` is c of the intersection and `rhs` the alternating union sum;
// for the monotone family `lhs` is c of the union.
struct OrderWitness {
  std::vector<Subset> sets;
  Rational lhs;
  Rational rhs;
};

struct OrderCheck {
  bool holds = false;
  std::optional<OrderWitness> witness;  // set iff !holds
};

// Both sides of the order-k inequality for one concrete tuple.
Rational alternating_rhs(const Capacity& c, const std::vector<Subset>& sets);
Rational monotone_rhs(const Capacity& c, const std::vector<Subset>& sets);

// Exhaustive scan over all 2^n × 2^n pairs; the witness is the
// lexicographically first violating pair.
OrderCheck is_two_alternating(const Capacity& c);
OrderCheck is_two_monotone(const Capacity& c);

inline constexpr std::uint64_t kDefaultTupleBudget = std::uint64_t{1} << 22;

// Number of unordered k-multisets of subsets the order-k check enumerates,
// saturated at uint64 max.
std::uint64_t order_check_tuple_count(int atom_count, int k);

// Exhaustive check of the order-k inequality over all unordered multisets of
// k subsets (the inequalities are symmetric in their arguments, so multisets
// lose nothing against arbitrary tuples with repeats). k >= 2. Throws
// BudgetError when the multiset count exceeds `tuple_budget`.
OrderCheck is_k_alternating(const Capacity& c, int k,
                            std::uint64_t tuple_budget = kDefaultTupleBudget);
OrderCheck is_k_monotone(const Capacity& c, int k,
                         std::uint64_t tuple_budget = kDefaultTupleBudget);

// Finite-space criteria: ∞-monotone iff every Möbius mass is nonnegative;
// ∞-alternating iff the conjugate is ∞-monotone.
bool is_infinity_monotone(const Capacity& c);
bool is_infinity_alternating(const Capacity& c);

enum class OrderVerdict { Holds, Fails, Unchecked };

struct OrderResult {
  OrderVerdict verdict = OrderVerdict::Unchecked;
  std::optional<OrderWitness> witness;  // set iff verdict == Fails
  std::uint64_t tuple_count = 0;
  // True when the failure was derived from a lower order by padding its
  // witness with repeats (and re-verifying) instead of a fresh scan.
  bool implied = false;
};

// Membership report across the whole ladder. Verdicts are monotone by
// construction: once order k fails, every higher order is reported failed
// with a padded witness.
struct ClassificationReport {
  int max_order = 2;
  std::vector<OrderResult> alternating;  // index 0 holds order 2
  std::vector<OrderResult> monotone;
  bool infinity_alternating = false;
  bool infinity_monotone = false;
  bool is_probability = false;

  const OrderResult& alternating_at(int k) const { return alternating.at(k - 2); }
  const OrderResult& monotone_at(int k) const { return monotone.at(k - 2); }

  // Highest k in [2, max_order] with a verified Holds streak from 2 upward;
  // 1 when order 2 already fails.
  int alternating_order() const;
  int monotone_order() const;
};

// Runs the full ladder up to max_order (>= 2). Budget overruns are recorded
// as Unchecked orders, not errors. Throws TheoremViolation if the finite
// ∞-criteria ever contradict an exhaustively checked order.
ClassificationReport classify(const Capacity& c, int max_order,
                              std::uint64_t tuple_budget = kDefaultTupleBudget);

}  // namespace capkit

#endif  // CAPKIT_CLASSIFY_HPP_
