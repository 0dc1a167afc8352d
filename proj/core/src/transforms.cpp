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

#include "capkit/transforms.hpp"

#include <algorithm>
#include <sstream>

#include "capkit/rng.hpp"

namespace capkit {

InvariantSubfield::InvariantSubfield(const Capacity& c) {
  const std::uint32_t m = c.subset_count();
  member_.assign(m, false);
  for (std::uint32_t a = 0; a < m; ++a) {
    bool modular = true;
    for (std::uint32_t b = 0; b < m; ++b) {
      if (c.values()[a | b] + c.values()[a & b] !=
          c.values()[a] + c.values()[b]) {
        modular = false;
        break;
      }
    }
    if (modular) {
      member_[a] = true;
      members_.push_back(Subset{a});
    }
  }

  closed_algebra_ = true;
  const std::uint32_t full = c.ground().full().bits;
  for (Subset a : members_) {
    if (!member_[full & ~a.bits]) {
      closed_algebra_ = false;
      break;
    }
    for (Subset b : members_) {
      if (!member_[a.bits | b.bits]) {
        closed_algebra_ = false;
        break;
      }
    }
    if (!closed_algebra_) break;
  }
}

namespace {

// c^F without the 2-alternation precondition scan; callers have already
// established it for the current capacity.
Capacity apply_transform(const Capacity& c, Subset f) {
  const std::uint32_t m = c.subset_count();
  std::vector<Rational> values(m);
  for (std::uint32_t b = 0; b < m; ++b) {
    values[b] = c.values()[f.bits | b] + c.values()[f.bits & b] - c.values()[f.bits];
  }
  return Capacity::from_values(c.ground(), std::move(values));
}

void require_two_alternating(const Capacity& c, const char* who) {
  OrderCheck check = is_two_alternating(c);
  if (!check.holds) {
    const OrderWitness& w = *check.witness;
    throw InputError(std::string(who) +
                     " requires a 2-alternating capacity; violated at A=" +
                     c.ground().subset_braces(w.sets[0]) + ", B=" +
                     c.ground().subset_braces(w.sets[1]));
  }
}

}  // namespace

Capacity transform(const Capacity& c, Subset f) {
  if (f.bits >= c.subset_count()) {
    throw InputError("pivot set index out of range for the ground set");
  }
  require_two_alternating(c, "transform");
  return apply_transform(c, f);
}

std::optional<std::pair<Subset, Capacity>> find_strict_reduction(
    const Capacity& c) {
  require_two_alternating(c, "find_strict_reduction");
  const std::uint32_t m = c.subset_count();
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    Capacity reduced = apply_transform(c, Subset{bits});
    if (reduced != c) {
      if (is_additive(c)) {
        throw TheoremViolation(
            "an additive capacity admitted a strict reduction at F=" +
            c.ground().subset_braces(Subset{bits}));
      }
      return std::make_pair(Subset{bits}, std::move(reduced));
    }
  }
  if (!is_additive(c)) {
    throw TheoremViolation(
        "a non-additive 2-alternating capacity admitted no strict reduction; "
        "it would be a minimal member outside the probability measures");
  }
  return std::nullopt;
}

std::string ExtractionTrace::describe() const {
  const GroundSet& ground = initial.ground();
  std::ostringstream out;
  out << "initial capacity:";
  for (std::uint32_t bits = 0; bits < initial.subset_count(); ++bits) {
    out << ' ' << ground.subset_braces(Subset{bits}) << '='
        << format_rational(initial.values()[bits]);
  }
  out << '\n';
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ExtractionStep& step = steps[i];
    out << "step " << (i + 1) << ": pivot " << ground.subset_braces(step.pivot)
        << ", subfield " << step.subfield_before << " -> "
        << step.subfield_after;
    if (step.candidates_skipped > 0) {
      out << ", skipped " << step.candidates_skipped << " candidate(s)";
    }
    out << '\n';
  }
  out << "total steps: " << steps.size() << ", backtracks: " << backtracks;
  return out.str();
}

namespace {

struct StepVerifier {
  const Capacity& original;
  const Chain& chain;
  ExtractionTrace& trace;

  // Postconditions every committed pivot must preserve. A breach here
  // falsifies the underlying proposition suite, so it aborts with the trace.
  void verify(const Capacity& before, const Capacity& after, Subset pivot,
              std::size_t subfield_before, std::size_t subfield_after) const {
    const GroundSet& ground = original.ground();
    auto fail = [&](const std::string& what) {
      throw TheoremViolation("extraction step with pivot " +
                                 ground.subset_braces(pivot) + ": " + what,
                             trace.describe());
    };
    if (!is_two_alternating(after).holds) {
      fail("transformed capacity left the 2-alternating class");
    }
    if (!dominates(before, after)) {
      fail("transformed capacity is not dominated by its predecessor");
    }
    for (Subset f : chain.sets()) {
      if (after.at(f) != original.at(f)) {
        fail("value on chain set " + ground.subset_braces(f) + " changed");
      }
    }
    if (subfield_after <= subfield_before) {
      fail("invariant subfield did not grow strictly");
    }
  }
};

Subset pick_pivot(const std::vector<Subset>& candidates, PivotOrder order,
                  Rng& rng) {
  switch (order) {
    case PivotOrder::LowestIndex:
      return candidates.front();
    case PivotOrder::HighestIndex:
      return candidates.back();
    case PivotOrder::Random:
      return candidates[rng.below(candidates.size())];
  }
  return candidates.front();
}

std::vector<Subset> non_members(const InvariantSubfield& subfield,
                                std::uint32_t subset_count) {
  std::vector<Subset> out;
  for (std::uint32_t bits = 0; bits < subset_count; ++bits) {
    if (!subfield.contains(Subset{bits})) out.push_back(Subset{bits});
  }
  return out;
}

}  // namespace

ExtractionResult extract_chain_probability(const Capacity& c,
                                           const Chain& chain,
                                           PivotOrder order,
                                           std::uint64_t seed) {
  require_two_alternating(c, "extract_chain_probability");
  for (Subset f : chain.sets()) {
    if (f.bits >= c.subset_count()) {
      throw InputError("chain set index out of range for the ground set");
    }
  }

  ExtractionTrace trace{c, {}, 0};
  StepVerifier verifier{c, chain, trace};
  Rng rng(seed);
  Capacity current = c;
  InvariantSubfield subfield(current);

  auto commit = [&](Subset pivot) {
    Capacity next = apply_transform(current, pivot);
    InvariantSubfield next_subfield(next);
    verifier.verify(current, next, pivot, subfield.size(), next_subfield.size());
    trace.steps.push_back(
        {pivot, subfield.size(), next_subfield.size(), 0, next});
    current = std::move(next);
    subfield = std::move(next_subfield);
  };

  // Phase one: force every chain set into the invariant subfield. Nesting of
  // the chain keeps all chain values intact along the way.
  for (Subset f : chain.sets()) {
    if (subfield.contains(f)) continue;
    commit(f);
  }

  // Phase two: sweep the remaining non-invariant sets until the subfield is
  // the whole power set. Strict growth bounds the loop by 2^n steps.
  const std::uint32_t m = c.subset_count();
  while (!subfield.covers_power_set()) {
    if (trace.steps.size() > m) {
      throw TheoremViolation("extraction exceeded 2^n steps",
                             trace.describe());
    }
    const std::vector<Subset> candidates = non_members(subfield, m);
    commit(pick_pivot(candidates, order, rng));
  }

  auto probability = ProbabilityMeasure::try_from_capacity(current);
  if (!probability) {
    throw TheoremViolation(
        "extraction finished with a full invariant subfield but a "
        "non-additive capacity",
        trace.describe());
  }
  if (!dominates(c, probability->capacity())) {
    throw TheoremViolation("extracted probability is not dominated by the "
                           "input capacity",
                           trace.describe());
  }
  for (Subset f : chain.sets()) {
    if (probability->at(f) != c.at(f)) {
      throw TheoremViolation("extracted probability moved the value of chain "
                             "set " + c.ground().subset_braces(f),
                             trace.describe());
    }
  }
  return ExtractionResult{*std::move(probability), std::move(trace)};
}

NoValidPivot::NoValidPivot(Capacity mu_state_in, Capacity nu_in,
                           std::vector<Subset> failed_candidates_in)
    : std::runtime_error(
          "no pivot keeps the transformed upper capacity above the lower "
          "one; " +
          std::to_string(failed_candidates_in.size()) +
          " candidate(s) failed"),
      mu_state(std::move(mu_state_in)),
      nu(std::move(nu_in)),
      failed_candidates(std::move(failed_candidates_in)) {}

ExtractionResult sandwich_probability(const Capacity& mu, const Capacity& nu) {
  require_same_ground(mu.ground(), nu.ground());
  require_two_alternating(mu, "sandwich_probability (upper)");
  if (OrderCheck check = is_two_monotone(nu); !check.holds) {
    const OrderWitness& w = *check.witness;
    throw InputError(
        "sandwich_probability requires a 2-monotone lower capacity; violated "
        "at A=" + nu.ground().subset_braces(w.sets[0]) + ", B=" +
        nu.ground().subset_braces(w.sets[1]));
  }
  if (!dominates(mu, nu)) {
    throw InputError("sandwich_probability requires nu <= mu pointwise");
  }

  const Chain no_chain;
  ExtractionTrace trace{mu, {}, 0};
  StepVerifier verifier{mu, no_chain, trace};
  Capacity current = mu;
  InvariantSubfield subfield(current);
  const std::uint32_t m = mu.subset_count();

  while (!subfield.covers_power_set()) {
    if (trace.steps.size() > m) {
      throw TheoremViolation("sandwich extraction exceeded 2^n steps",
                             trace.describe());
    }
    // The paper's rule: smallest gap mu(A) − nu(A) over non-invariant sets,
    // ties by lowest index. The dominance re-check below backstops the rule;
    // candidates failing it are skipped and counted.
    std::vector<Subset> candidates = non_members(subfield, m);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Subset a, Subset b) {
                       return current.at(a) - nu.at(a) <
                              current.at(b) - nu.at(b);
                     });

    bool committed = false;
    std::vector<Subset> failed;
    for (Subset pivot : candidates) {
      Capacity next = apply_transform(current, pivot);
      if (!dominates(next, nu)) {
        failed.push_back(pivot);
        continue;
      }
      InvariantSubfield next_subfield(next);
      verifier.verify(current, next, pivot, subfield.size(),
                      next_subfield.size());
      trace.steps.push_back(
          {pivot, subfield.size(), next_subfield.size(), failed.size(), next});
      trace.backtracks += failed.size();
      current = std::move(next);
      subfield = std::move(next_subfield);
      committed = true;
      break;
    }
    if (!committed) {
      throw NoValidPivot(current, nu, std::move(failed));
    }
  }

  auto probability = ProbabilityMeasure::try_from_capacity(current);
  if (!probability) {
    throw TheoremViolation(
        "sandwich extraction finished with a full invariant subfield but a "
        "non-additive capacity",
        trace.describe());
  }
  if (!dominates(mu, probability->capacity()) ||
      !dominates(probability->capacity(), nu)) {
    throw TheoremViolation("sandwich result is not between nu and mu",
                           trace.describe());
  }
  return ExtractionResult{*std::move(probability), std::move(trace)};
}

ChainInfimumResult chain_infimum(const std::vector<Capacity>& family) {
  if (family.empty()) {
    throw InputError("chain_infimum requires a non-empty family");
  }
  for (std::size_t i = 1; i < family.size(); ++i) {
    require_same_ground(family[0].ground(), family[i].ground());
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (OrderCheck check = is_two_alternating(family[i]); !check.holds) {
      const OrderWitness& w = *check.witness;
      throw InputError("family member #" + std::to_string(i + 1) +
                       " is not 2-alternating; violated at A=" +
                       family[i].ground().subset_braces(w.sets[0]) + ", B=" +
                       family[i].ground().subset_braces(w.sets[1]));
    }
  }
  // Totally ordered hypothesis, checked pairwise with a witness on failure.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (dominates(family[i], family[j]) || dominates(family[j], family[i])) {
        continue;
      }
      const std::uint32_t m = family[i].subset_count();
      Subset above{0}, below{0};
      for (std::uint32_t bits = 0; bits < m; ++bits) {
        if (family[i].values()[bits] < family[j].values()[bits]) above = Subset{bits};
        if (family[i].values()[bits] > family[j].values()[bits]) below = Subset{bits};
      }
      throw InputError(
          "family is not totally ordered: members #" + std::to_string(i + 1) +
          " and #" + std::to_string(j + 1) + " are incomparable (" +
          family[i].ground().subset_braces(above) + " orders them one way, " +
          family[i].ground().subset_braces(below) + " the other)");
    }
  }

  std::size_t minimum = 0;
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (dominates(family[minimum], family[i])) minimum = i;
  }
  const std::uint32_t m = family[0].subset_count();
  std::vector<Rational> values(m);
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    values[bits] = family[0].values()[bits];
    for (std::size_t i = 1; i < family.size(); ++i) {
      values[bits] = std::min(values[bits], family[i].values()[bits]);
    }
  }
  Capacity infimum = Capacity::from_values(family[0].ground(), std::move(values));
  if (infimum != family[minimum]) {
    throw TheoremViolation(
        "pointwise infimum of a finite totally ordered family differs from "
        "its least element");
  }
  if (!is_two_alternating(infimum).holds) {
    throw TheoremViolation(
        "pointwise infimum of a totally ordered 2-alternating family is not "
        "2-alternating");
  }
  return ChainInfimumResult{std::move(infimum), minimum};
}

}  // namespace capkit
