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

#ifndef CAPKIT_TRANSFORMS_HPP_
#define CAPKIT_TRANSFORMS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/classify.hpp"

namespace capkit {

// The sets that interact modularly with every other set under c:
// A is a member iff c(A∪B) + c(A∩B) = c(A) + c(B) for all B, exactly.
// ∅ and Ω are always members; the member set is the whole power set iff c is
// a probability measure.
class InvariantSubfield {
 public:
  explicit InvariantSubfield(const Capacity& c);  // exhaustive 2^n × 2^n scan

  bool contains(Subset s) const { return member_[s.bits]; }
  std::size_t size() const { return members_.size(); }
  bool covers_power_set() const { return members_.size() == member_.size(); }
  // Ascending subset-index order.
  const std::vector<Subset>& member_sets() const { return members_; }

  // Empirical check: the member set is closed under complement and pairwise
  // union. Reported, never assumed.
  bool is_closed_algebra() const { return closed_algebra_; }

 private:
  std::vector<bool> member_;
  std::vector<Subset> members_;
  bool closed_algebra_ = false;
};

// The pivot transform c^F(B) = c(F∪B) + c(F∩B) − c(F). For 2-alternating c
// the result is again a 2-alternating capacity with c^F <= c, c^F agreeing
// with c on every set nested with F and on the whole invariant subfield, and
// F joining the invariant subfield of c^F.
// Throws InputError when c is not 2-alternating.
Capacity transform(const Capacity& c, Subset f);

// Lowest-index F whose transform strictly shrinks c, with the shrunk
// capacity. Returns nullopt iff c is additive; a disagreement between those
// two conditions is a TheoremViolation. Requires 2-alternating input.
std::optional<std::pair<Subset, Capacity>> find_strict_reduction(
    const Capacity& c);

enum class PivotOrder { LowestIndex, HighestIndex, Random };

// One committed pivot application inside an extraction run.
struct ExtractionStep {
  Subset pivot;
  std::size_t subfield_before = 0;
  std::size_t subfield_after = 0;
  std::size_t candidates_skipped = 0;  // sandwich backtracking at this step
  Capacity after;
};

struct ExtractionTrace {
  Capacity initial;
  std::vector<ExtractionStep> steps;
  std::size_t backtracks = 0;  // total skipped sandwich candidates

  std::string describe() const;
};

struct ExtractionResult {
  ProbabilityMeasure probability;
  ExtractionTrace trace;
};

// Pins the chain values and extracts a dominated probability:
// phase one pivots on the chain sets in order, phase two sweeps the
// remaining non-invariant sets (pivot choice per `order`; `seed` feeds the
// Random order). Every step is re-verified: the new capacity must stay
// 2-alternating, dominated by its predecessor, agree with the original on
// all chain sets, and strictly enlarge the invariant subfield. The final
// measure satisfies P(F_i) = c(F_i) and P <= c, all checked exactly; any
// breach throws TheoremViolation with the full trace attached.
ExtractionResult extract_chain_probability(
    const Capacity& c, const Chain& chain,
    PivotOrder order = PivotOrder::LowestIndex, std::uint64_t seed = 0);

// sandwich_probability found no pivot that keeps the transformed upper
// capacity above nu: a research-grade counterexample report, not a bug.
class NoValidPivot : public std::runtime_error {
 public:
  NoValidPivot(Capacity mu_state, Capacity nu,
               std::vector<Subset> failed_candidates);

  Capacity mu_state;
  Capacity nu;
  std::vector<Subset> failed_candidates;
};

// Squeezes a probability between a 2-alternating mu and a 2-monotone nu with
// nu <= mu. Pivots are chosen by the smallest gap mu(A) − nu(A) over the
// non-invariant sets (ties by lowest subset index); each candidate is
// committed only after re-checking mu^A >= nu, otherwise the next candidate
// is tried and the skip is counted as a backtrack.
ExtractionResult sandwich_probability(const Capacity& mu, const Capacity& nu);

struct ChainInfimumResult {
  Capacity infimum;
  // The infimum of a finite totally ordered family is its least element;
  // index of that element in the input list.
  std::size_t minimum_index = 0;
};

// Pointwise infimum of a non-empty, totally ordered family of 2-alternating
// capacities. Verifies the hypotheses (throws InputError with a witness on
// an incomparable pair) and that the result is 2-alternating.
ChainInfimumResult chain_infimum(const std::vector<Capacity>& family);

}  // namespace capkit

#endif  // CAPKIT_TRANSFORMS_HPP_
