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

#include "capkit/classify.hpp"

#include <bit>
#include <limits>

namespace capkit {

namespace {

// Alternating sum Σ_{∅≠I} (-1)^{|I|+1} c(combine over I), where combine is
// union for the alternating family and intersection for the monotone one.
// Combinations are built incrementally over the 2^k masks.
template <bool kUseUnion>
Rational inclusion_exclusion_sum(const Capacity& c,
                                 const std::vector<Subset>& sets) {
  const int k = static_cast<int>(sets.size());
  const std::uint32_t masks = std::uint32_t{1} << k;
  std::vector<std::uint32_t> combined(masks);
  combined[0] = kUseUnion ? 0 : c.ground().full().bits;
  Rational sum = 0;
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    const std::uint32_t low = mask & (mask - 1);
    const int member = std::countr_zero(mask);
    combined[mask] = kUseUnion ? (combined[low] | sets[member].bits)
                               : (combined[low] & sets[member].bits);
    if (std::popcount(mask) % 2 == 1) {
      sum += c.values()[combined[mask]];
    } else {
      sum -= c.values()[combined[mask]];
    }
  }
  return sum;
}

}  // namespace

Rational alternating_rhs(const Capacity& c, const std::vector<Subset>& sets) {
  return inclusion_exclusion_sum<true>(c, sets);
}

Rational monotone_rhs(const Capacity& c, const std::vector<Subset>& sets) {
  return inclusion_exclusion_sum<false>(c, sets);
}

OrderCheck is_two_alternating(const Capacity& c) {
  const std::uint32_t m = c.subset_count();
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      const Rational lhs = c.values()[a | b] + c.values()[a & b];
      const Rational rhs = c.values()[a] + c.values()[b];
      if (lhs > rhs) {
        return OrderCheck{false,
                          OrderWitness{{Subset{a}, Subset{b}}, lhs, rhs}};
      }
    }
  }
  return OrderCheck{true, std::nullopt};
}

OrderCheck is_two_monotone(const Capacity& c) {
  const std::uint32_t m = c.subset_count();
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      const Rational lhs = c.values()[a | b] + c.values()[a & b];
      const Rational rhs = c.values()[a] + c.values()[b];
      if (lhs < rhs) {
        return OrderCheck{false,
                          OrderWitness{{Subset{a}, Subset{b}}, lhs, rhs}};
      }
    }
  }
  return OrderCheck{true, std::nullopt};
}

std::uint64_t order_check_tuple_count(int atom_count, int k) {
  // C(2^n + k - 1, k), saturated.
  const std::uint64_t m = std::uint64_t{1} << atom_count;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t factor = m + static_cast<std::uint64_t>(k - i);
    if (count > kMax / factor) return kMax;
    count = count * factor / static_cast<std::uint64_t>(i);
  }
  return count;
}

namespace {

template <bool kAlternating>
OrderCheck order_check(const Capacity& c, int k, std::uint64_t tuple_budget) {
  if (k < 2) throw InputError("order must be at least 2");
  const std::uint64_t count = order_check_tuple_count(c.atom_count(), k);
  if (count > tuple_budget) {
    throw BudgetError("order-" + std::to_string(k) +
                          " check bound too large: " + std::to_string(count) +
                          " tuples exceed budget " +
                          std::to_string(tuple_budget),
                      count);
  }

  const std::uint32_t m = c.subset_count();
  std::vector<std::uint32_t> tuple(k, 0);  // non-decreasing subset indices
  while (true) {
    std::vector<Subset> sets(k);
    std::uint32_t pooled = kAlternating ? c.ground().full().bits : 0;
    for (int i = 0; i < k; ++i) {
      sets[i] = Subset{tuple[i]};
      pooled = kAlternating ? (pooled & tuple[i]) : (pooled | tuple[i]);
    }
    const Rational& lhs = c.values()[pooled];
    const Rational rhs = kAlternating ? alternating_rhs(c, sets)
                                      : monotone_rhs(c, sets);
    const bool violated = kAlternating ? (lhs > rhs) : (lhs < rhs);
    if (violated) {
      return OrderCheck{false, OrderWitness{std::move(sets), lhs, rhs}};
    }

    // Advance to the next non-decreasing tuple in lexicographic order.
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == m - 1) --pos;
    if (pos < 0) break;
    const std::uint32_t next = tuple[pos] + 1;
    for (int i = pos; i < k; ++i) tuple[i] = next;
  }
  return OrderCheck{true, std::nullopt};
}

}  // namespace

OrderCheck is_k_alternating(const Capacity& c, int k, std::uint64_t tuple_budget) {
  return order_check<true>(c, k, tuple_budget);
}

OrderCheck is_k_monotone(const Capacity& c, int k, std::uint64_t tuple_budget) {
  return order_check<false>(c, k, tuple_budget);
}

bool is_infinity_monotone(const Capacity& c) {
  return MobiusRepresentation(c).all_nonnegative();
}

bool is_infinity_alternating(const Capacity& c) {
  return is_infinity_monotone(conjugate(c));
}

int ClassificationReport::alternating_order() const {
  int order = 1;
  for (int k = 2; k <= max_order; ++k) {
    if (alternating_at(k).verdict != OrderVerdict::Holds) break;
    order = k;
  }
  return order;
}

int ClassificationReport::monotone_order() const {
  int order = 1;
  for (int k = 2; k <= max_order; ++k) {
    if (monotone_at(k).verdict != OrderVerdict::Holds) break;
    order = k;
  }
  return order;
}

namespace {

// Once order k fails, (A_1,…,A_k,A_k) violates order k+1 with the same two
// sides; padding the witness keeps higher-order verdicts consistent without
// a fresh scan. The padded tuple is re-evaluated, not assumed.
OrderResult implied_failure(const Capacity& c, const OrderWitness& lower,
                            bool alternating, int k) {
  OrderWitness padded = lower;
  while (static_cast<int>(padded.sets.size()) < k) {
    padded.sets.push_back(padded.sets.back());
  }
  std::uint32_t pooled = alternating ? c.ground().full().bits : 0;
  for (Subset s : padded.sets) {
    pooled = alternating ? (pooled & s.bits) : (pooled | s.bits);
  }
  padded.lhs = c.values()[pooled];
  padded.rhs = alternating ? alternating_rhs(c, padded.sets)
                           : monotone_rhs(c, padded.sets);
  const bool violated = alternating ? (padded.lhs > padded.rhs)
                                    : (padded.lhs < padded.rhs);
  if (!violated) {
    throw TheoremViolation(
        "padded order witness no longer violates the order-" +
        std::to_string(k) + " inequality; the nesting of the classes failed");
  }
  OrderResult result;
  result.verdict = OrderVerdict::Fails;
  result.witness = std::move(padded);
  result.tuple_count = order_check_tuple_count(c.atom_count(), k);
  result.implied = true;
  return result;
}

std::vector<OrderResult> run_ladder(const Capacity& c, int max_order,
                                    std::uint64_t tuple_budget,
                                    bool alternating) {
  std::vector<OrderResult> results;
  std::optional<OrderWitness> first_failure;
  for (int k = 2; k <= max_order; ++k) {
    if (first_failure) {
      results.push_back(implied_failure(c, *first_failure, alternating, k));
      continue;
    }
    OrderResult result;
    result.tuple_count = order_check_tuple_count(c.atom_count(), k);
    try {
      OrderCheck check = alternating ? is_k_alternating(c, k, tuple_budget)
                                     : is_k_monotone(c, k, tuple_budget);
      result.verdict = check.holds ? OrderVerdict::Holds : OrderVerdict::Fails;
      result.witness = std::move(check.witness);
    } catch (const BudgetError&) {
      result.verdict = OrderVerdict::Unchecked;
    }
    if (result.verdict == OrderVerdict::Fails) {
      first_failure = result.witness;
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace

ClassificationReport classify(const Capacity& c, int max_order,
                              std::uint64_t tuple_budget) {
  if (max_order < 2) throw InputError("max_order must be at least 2");

  ClassificationReport report;
  report.max_order = max_order;
  report.alternating = run_ladder(c, max_order, tuple_budget, true);
  report.monotone = run_ladder(c, max_order, tuple_budget, false);
  report.infinity_alternating = is_infinity_alternating(c);
  report.infinity_monotone = is_infinity_monotone(c);
  report.is_probability = is_additive(c);

  // The finite ∞-criteria must agree with every exhaustively checked order,
  // and additivity must coincide with 2-alternating ∧ 2-monotone.
  for (int k = 2; k <= max_order; ++k) {
    if (report.infinity_alternating &&
        report.alternating_at(k).verdict == OrderVerdict::Fails) {
      throw TheoremViolation(
          "Möbius ∞-alternating criterion contradicts the exhaustive order-" +
          std::to_string(k) + " check");
    }
    if (report.infinity_monotone &&
        report.monotone_at(k).verdict == OrderVerdict::Fails) {
      throw TheoremViolation(
          "Möbius ∞-monotone criterion contradicts the exhaustive order-" +
          std::to_string(k) + " check");
    }
  }
  const bool modular = report.alternating_at(2).verdict == OrderVerdict::Holds &&
                       report.monotone_at(2).verdict == OrderVerdict::Holds;
  if (modular != report.is_probability) {
    throw TheoremViolation(
        "additivity disagrees with 2-alternating ∧ 2-monotone");
  }
  return report;
}

}  // namespace capkit
