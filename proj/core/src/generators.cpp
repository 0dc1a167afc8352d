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

#include "capkit/generators.hpp"

#include <algorithm>
#include <numeric>

#include "capkit/classify.hpp"

namespace capkit {

DistortionFunction::DistortionFunction(std::vector<Breakpoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2) {
    throw InputError("distortion needs at least the endpoints (0,0) and (1,1)");
  }
  if (breakpoints_.front().t != 0 || breakpoints_.front().value != 0 ||
      breakpoints_.back().t != 1 || breakpoints_.back().value != 1) {
    throw InputError("distortion must map 0 to 0 and 1 to 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i - 1].t >= breakpoints_[i].t) {
      throw InputError("distortion breakpoints must have increasing t");
    }
    if (breakpoints_[i - 1].value > breakpoints_[i].value) {
      throw InputError("distortion must be non-decreasing");
    }
  }
}

DistortionFunction DistortionFunction::identity() {
  return DistortionFunction({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

namespace {

std::vector<Rational> slopes_of(const std::vector<DistortionFunction::Breakpoint>& bps) {
  std::vector<Rational> slopes;
  for (std::size_t i = 1; i < bps.size(); ++i) {
    slopes.push_back((bps[i].value - bps[i - 1].value) /
                     (bps[i].t - bps[i - 1].t));
  }
  return slopes;
}

// Segment widths summing to 1 and sorted nonnegative raw slopes, rescaled so
// that Σ slope·width == 1. Descending slopes give a concave distortion,
// ascending a convex one.
DistortionFunction random_piecewise(Rng& rng, int segments, bool descending) {
  if (segments < 1) throw InputError("need at least one segment");
  while (true) {
    std::vector<Rational> widths(segments), raw(segments);
    Rational width_total = 0;
    for (int i = 0; i < segments; ++i) {
      widths[i] = Rational(rng.int_in(1, 8), 8);
      width_total += widths[i];
      raw[i] = rng.rational_on_grid(0, 2, 8);
    }
    for (Rational& w : widths) w /= width_total;
    std::sort(raw.begin(), raw.end());
    if (descending) std::reverse(raw.begin(), raw.end());
    Rational scale = 0;
    for (int i = 0; i < segments; ++i) scale += raw[i] * widths[i];
    if (scale == 0) continue;  // all slopes zero; redraw

    std::vector<DistortionFunction::Breakpoint> bps;
    bps.push_back({Rational(0), Rational(0)});
    Rational t = 0, value = 0;
    for (int i = 0; i < segments; ++i) {
      t += widths[i];
      value += raw[i] / scale * widths[i];
      bps.push_back({t, value});
    }
    // Exact by construction; pin the endpoints against drift.
    bps.back().t = 1;
    bps.back().value = 1;
    return DistortionFunction(std::move(bps));
  }
}

}  // namespace

DistortionFunction DistortionFunction::random_concave(Rng& rng, int segments) {
  return random_piecewise(rng, segments, /*descending=*/true);
}

DistortionFunction DistortionFunction::random_convex(Rng& rng, int segments) {
  return random_piecewise(rng, segments, /*descending=*/false);
}

Rational DistortionFunction::operator()(const Rational& t) const {
  if (t < 0 || t > 1) throw InputError("distortion argument outside [0,1]");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (t <= breakpoints_[i].t) {
      const Breakpoint& lo = breakpoints_[i - 1];
      const Breakpoint& hi = breakpoints_[i];
      return lo.value + (hi.value - lo.value) * (t - lo.t) / (hi.t - lo.t);
    }
  }
  return breakpoints_.back().value;
}

bool DistortionFunction::is_concave() const {
  const std::vector<Rational> slopes = slopes_of(breakpoints_);
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (slopes[i] > slopes[i - 1]) return false;
  }
  return true;
}

bool DistortionFunction::is_convex() const {
  const std::vector<Rational> slopes = slopes_of(breakpoints_);
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (slopes[i] < slopes[i - 1]) return false;
  }
  return true;
}

ProbabilityMeasure random_probability(const GroundSet& ground,
                                      std::uint64_t seed) {
  Rng rng(seed);
  const int n = ground.size();
  while (true) {
    std::vector<Rational> raw(n);
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      raw[i] = rng.rational_in_unit(64);
      total += raw[i];
    }
    if (total == 0) continue;
    for (Rational& w : raw) w /= total;
    return ProbabilityMeasure::from_atom_weights(ground, std::move(raw));
  }
}

Capacity distorted_probability(const ProbabilityMeasure& p,
                               const DistortionFunction& f) {
  if (!f.is_concave()) {
    throw InputError("distorted_probability requires a concave distortion");
  }
  const std::uint32_t m = p.ground().subset_count();
  std::vector<Rational> values(m);
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    values[bits] = f(p.at(Subset{bits}));
  }
  Capacity c = Capacity::from_values(p.ground(), std::move(values));
  if (!is_two_alternating(c).holds) {
    throw TheoremViolation(
        "concave distortion of a probability failed the 2-alternating check");
  }
  return c;
}

namespace {

Capacity belief_from_random_masses(const GroundSet& ground, Rng& rng,
                                   int support_size) {
  const std::uint32_t m = ground.subset_count();
  if (support_size < 1 || static_cast<std::uint32_t>(support_size) > m - 1) {
    throw InputError("belief support size must lie in [1, 2^n - 1]");
  }
  // Partial Fisher–Yates over the non-empty subset indices.
  std::vector<std::uint32_t> pool(m - 1);
  std::iota(pool.begin(), pool.end(), 1u);
  for (int i = 0; i < support_size; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }

  while (true) {
    std::vector<Rational> masses(m, Rational(0));
    Rational total = 0;
    for (int i = 0; i < support_size; ++i) {
      const Rational mass = rng.rational_in_unit(64);
      masses[pool[i]] = mass;
      total += mass;
    }
    if (total == 0) continue;
    for (Rational& mass : masses) mass /= total;
    Capacity c =
        MobiusRepresentation::from_masses(ground, std::move(masses)).to_capacity();
    if (!is_infinity_monotone(c)) {
      throw TheoremViolation(
          "capacity built from nonnegative Möbius masses is not ∞-monotone");
    }
    return c;
  }
}

}  // namespace

Capacity random_belief(const GroundSet& ground, std::uint64_t seed,
                       int support_size) {
  Rng rng(seed);
  return belief_from_random_masses(ground, rng, support_size);
}

Capacity random_plausibility(const GroundSet& ground, std::uint64_t seed,
                             int support_size) {
  Capacity plausibility = conjugate(random_belief(ground, seed, support_size));
  if (!is_infinity_alternating(plausibility)) {
    throw TheoremViolation("conjugate of a belief function is not ∞-alternating");
  }
  return plausibility;
}

Capacity unanimity_capacity(const GroundSet& ground, Subset s) {
  if (s.empty() || s.bits >= ground.subset_count()) {
    throw InputError("unanimity capacity needs a non-empty subset of the ground set");
  }
  std::vector<Rational> values(ground.subset_count(), Rational(0));
  for (std::uint32_t bits = 0; bits < ground.subset_count(); ++bits) {
    if (is_subset_of(s, Subset{bits})) values[bits] = 1;
  }
  return Capacity::from_values(ground, std::move(values));
}

namespace {

// Monotone table on the k/grid_den grid: each value is drawn uniformly
// above the maximum of its immediate predecessors. Ascending index order
// visits every subset after all of its subsets.
Capacity random_monotone_table(const GroundSet& ground, Rng& rng,
                               int grid_den) {
  const std::uint32_t m = ground.subset_count();
  std::vector<Rational> values(m, Rational(0));
  values[m - 1] = 1;
  for (std::uint32_t bits = 1; bits + 1 < m; ++bits) {
    Rational lower = 0;
    for (int atom = 0; atom < ground.size(); ++atom) {
      const std::uint32_t bit = std::uint32_t{1} << atom;
      if (bits & bit) lower = std::max(lower, values[bits ^ bit]);
    }
    // ceil(lower * grid_den) .. grid_den, uniform numerator.
    const BigInt lo_num = numerator(lower) * grid_den;
    const BigInt lo_den = denominator(lower);
    BigInt lo_ceil = lo_num / lo_den;
    if (lo_ceil * lo_den < lo_num) ++lo_ceil;
    const auto lo = lo_ceil.convert_to<std::int64_t>();
    values[bits] = Rational(rng.int_in(lo, grid_den), grid_den);
  }
  return Capacity::from_values(ground, std::move(values));
}

}  // namespace

RejectionSample rejection_sample_class(const GroundSet& ground,
                                       std::uint64_t seed, CapacityClass cls,
                                       int denominator_bound, int max_draws) {
  if (denominator_bound < 2) {
    throw InputError("denominator bound must be at least 2");
  }
  Rng rng(seed);
  int rejections = 0;
  for (int draw = 0; draw < max_draws; ++draw) {
    Capacity c = random_monotone_table(ground, rng, denominator_bound);
    bool accepted = false;
    switch (cls) {
      case CapacityClass::TwoAlternating:
        accepted = is_two_alternating(c).holds;
        break;
      case CapacityClass::TwoMonotone:
        accepted = is_two_monotone(c).holds;
        break;
      case CapacityClass::TwoAlternatingNotInfinity:
        accepted = is_two_alternating(c).holds && !is_infinity_alternating(c);
        break;
    }
    if (accepted) return RejectionSample{std::move(c), rejections};
    ++rejections;
  }
  throw BudgetError("rejection sampling exhausted " +
                        std::to_string(max_draws) + " draws without a hit",
                    static_cast<std::uint64_t>(max_draws));
}

Capacity random_non_two_alternating(const GroundSet& ground, std::uint64_t seed,
                                    int denominator_bound, int max_draws) {
  Rng rng(seed);
  for (int draw = 0; draw < max_draws; ++draw) {
    Capacity c = random_monotone_table(ground, rng, denominator_bound);
    if (!is_two_alternating(c).holds) return c;
  }
  throw BudgetError("could not draw a non-2-alternating table in " +
                        std::to_string(max_draws) + " attempts",
                    static_cast<std::uint64_t>(max_draws));
}

Capacity random_two_alternating(const GroundSet& ground, std::uint64_t seed) {
  Rng rng(seed);
  const int n = ground.size();
  const std::uint64_t variant = rng.below(n <= 3 ? 4 : 3);
  Capacity result = [&]() -> Capacity {
    switch (variant) {
      case 0:  // probability measure (boundary member of the class)
        return random_probability(ground, rng.next()).capacity();
      case 1: {
        ProbabilityMeasure p = random_probability(ground, rng.next());
        DistortionFunction f =
            DistortionFunction::random_concave(rng, 1 + rng.below(3));
        return distorted_probability(p, f);
      }
      case 2: {
        const int max_support = static_cast<int>(ground.subset_count()) - 1;
        const int support = 1 + static_cast<int>(rng.below(
                                    std::min(max_support, 2 * n + 1)));
        return random_plausibility(ground, rng.next(), support);
      }
      default:
        return rejection_sample_class(ground, rng.next(),
                                      CapacityClass::TwoAlternating, 8)
            .capacity;
    }
  }();
  if (!is_two_alternating(result).holds) {
    throw TheoremViolation("2-alternating generator emitted an out-of-class capacity");
  }
  return result;
}

std::vector<Capacity> two_alternating_corpus(const GroundSet& ground, int count,
                                             std::uint64_t seed) {
  std::vector<Capacity> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    corpus.push_back(random_two_alternating(ground, derive_seed(seed, i)));
  }
  return corpus;
}

std::vector<Capacity> non_two_alternating_corpus(const GroundSet& ground,
                                                 int count, std::uint64_t seed) {
  std::vector<Capacity> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i == 0 && ground.size() >= 2) {
      // Unanimity on Ω is the canonical 2-monotone, non-2-alternating case.
      corpus.push_back(unanimity_capacity(ground, ground.full()));
      continue;
    }
    corpus.push_back(
        random_non_two_alternating(ground, derive_seed(seed, i)));
  }
  return corpus;
}

std::vector<Capacity> mixed_corpus(const GroundSet& ground, int count,
                                   std::uint64_t seed) {
  std::vector<Capacity> corpus;
  corpus.reserve(count);
  const int n = ground.size();
  for (int i = 0; i < count; ++i) {
    const std::uint64_t case_seed = derive_seed(seed, i);
    Rng rng(case_seed);
    const int recipe = i % 8;
    switch (recipe) {
      case 0:
        corpus.push_back(random_probability(ground, case_seed).capacity());
        break;
      case 1: {
        ProbabilityMeasure p = random_probability(ground, rng.next());
        corpus.push_back(distorted_probability(
            p, DistortionFunction::random_concave(rng, 1 + rng.below(3))));
        break;
      }
      case 2:
        corpus.push_back(random_belief(
            ground, case_seed,
            1 + static_cast<int>(rng.below(ground.subset_count() - 1))));
        break;
      case 3:
        corpus.push_back(random_plausibility(
            ground, case_seed,
            1 + static_cast<int>(rng.below(ground.subset_count() - 1))));
        break;
      case 4:
        corpus.push_back(unanimity_capacity(
            ground, Subset{static_cast<std::uint32_t>(
                        1 + rng.below(ground.subset_count() - 1))}));
        break;
      case 5:
        corpus.push_back(conjugate(unanimity_capacity(
            ground, Subset{static_cast<std::uint32_t>(
                        1 + rng.below(ground.subset_count() - 1))})));
        break;
      case 6:
        if (n <= 3) {
          corpus.push_back(random_monotone_table(ground, rng, 6));
          break;
        }
        corpus.push_back(random_two_alternating(ground, rng.next()));
        break;
      default:
        corpus.push_back(random_non_two_alternating(ground, rng.next()));
        break;
    }
  }
  return corpus;
}

Chain random_chain(const GroundSet& ground, std::uint64_t seed) {
  Rng rng(seed);
  const int n = ground.size();
  // Random maximal chain via a random permutation, then a random
  // subsequence of its proper prefixes.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < n; ++i) {
    const std::size_t j = i + rng.below(order.size() - i);
    std::swap(order[i], order[j]);
  }
  AtomPermutation pi(order);
  std::vector<Subset> sets;
  for (int len = 1; len < n; ++len) {
    if (rng.coin()) sets.push_back(pi.prefix_set(len));
  }
  return Chain(std::move(sets));
}

std::vector<Capacity> totally_ordered_family(const GroundSet& ground, int count,
                                             std::uint64_t seed) {
  if (count < 1) throw InputError("family size must be at least 1");
  Rng rng(seed);
  ProbabilityMeasure base = random_probability(ground, rng.next());

  // Pointwise minima of concave distortions stay concave, so iterating
  // f_{k+1} = min(f_k, fresh) yields a decreasing concave family and the
  // distorted capacities are totally ordered.
  auto merge_min = [](const DistortionFunction& f, const DistortionFunction& g) {
    std::vector<Rational> ts;
    for (const auto& bp : f.breakpoints()) ts.push_back(bp.t);
    for (const auto& bp : g.breakpoints()) ts.push_back(bp.t);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    // Two concave piecewise-linear curves cross at most where segments do;
    // refining with the crossing points of every segment pair keeps the min
    // exactly piecewise-linear on the refined grid.
    for (std::size_t i = 1; i < f.breakpoints().size(); ++i) {
      for (std::size_t j = 1; j < g.breakpoints().size(); ++j) {
        const auto& f0 = f.breakpoints()[i - 1];
        const auto& f1 = f.breakpoints()[i];
        const auto& g0 = g.breakpoints()[j - 1];
        const auto& g1 = g.breakpoints()[j];
        const Rational sf = (f1.value - f0.value) / (f1.t - f0.t);
        const Rational sg = (g1.value - g0.value) / (g1.t - g0.t);
        if (sf == sg) continue;
        // Intersection of the two segment-supporting lines.
        const Rational t =
            (g0.value - sg * g0.t - f0.value + sf * f0.t) / (sf - sg);
        if (t > 0 && t < 1) ts.push_back(t);
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<DistortionFunction::Breakpoint> bps;
    for (const Rational& t : ts) bps.push_back({t, std::min(f(t), g(t))});
    return DistortionFunction(std::move(bps));
  };

  std::vector<Capacity> family;
  DistortionFunction current = DistortionFunction::random_concave(rng, 2);
  family.push_back(distorted_probability(base, current));
  for (int i = 1; i < count; ++i) {
    current = merge_min(current, DistortionFunction::random_concave(rng, 2));
    family.push_back(distorted_probability(base, current));
  }
  return family;
}

}  // namespace capkit
