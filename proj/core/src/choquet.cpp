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

#include "capkit/choquet.hpp"

#include <algorithm>
#include <map>

#include "capkit/rng.hpp"

namespace capkit {

MeasurableFunction::MeasurableFunction(GroundSet ground,
                                       std::vector<Rational> atom_values)
    : ground_(std::move(ground)), values_(std::move(atom_values)) {
  if (static_cast<int>(values_.size()) != ground_.size()) {
    throw InputError("expected one value per atom, got " +
                     std::to_string(values_.size()));
  }
}

MeasurableFunction MeasurableFunction::indicator(const GroundSet& ground,
                                                 Subset s) {
  std::vector<Rational> values(ground.size(), Rational(0));
  for (int atom = 0; atom < ground.size(); ++atom) {
    if (s.contains(atom)) values[atom] = 1;
  }
  return MeasurableFunction(ground, std::move(values));
}

MeasurableFunction MeasurableFunction::constant(const GroundSet& ground,
                                                Rational value) {
  return MeasurableFunction(ground,
                            std::vector<Rational>(ground.size(), value));
}

MeasurableFunction operator+(const MeasurableFunction& x,
                             const MeasurableFunction& y) {
  require_same_ground(x.ground(), y.ground());
  std::vector<Rational> values(x.atom_values());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += y.atom_values()[i];
  return MeasurableFunction(x.ground(), std::move(values));
}

Rational choquet_integral(const Capacity& c, const MeasurableFunction& x) {
  require_same_ground(c.ground(), x.ground());
  const int n = c.atom_count();

  std::vector<Rational> levels(x.atom_values());
  std::sort(levels.begin(), levels.end(),
            [](const Rational& a, const Rational& b) { return a > b; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Rational result = levels.back();  // v_m · c(Ω)
  Subset level_set{0};
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    for (int atom = 0; atom < n; ++atom) {
      if (x.at(atom) >= levels[j]) level_set.bits |= std::uint32_t{1} << atom;
    }
    result += (levels[j] - levels[j + 1]) * c.at(level_set);
  }
  return result;
}

AtomPermutation comonotone_permutation(const MeasurableFunction& x) {
  std::vector<int> order(x.ground().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&x](int a, int b) {
    return x.at(a) > x.at(b);
  });
  return AtomPermutation(std::move(order));
}

ProbabilityMeasure permutation_measure(const Capacity& c,
                                       const AtomPermutation& pi) {
  const int n = c.atom_count();
  if (pi.size() != n) {
    throw InputError("permutation length does not match the ground set");
  }
  std::vector<Rational> weights(n);
  Subset prefix{0};
  Rational previous = 0;
  for (int i = 0; i < n; ++i) {
    prefix.bits |= std::uint32_t{1} << pi.at(i);
    const Rational& current = c.at(prefix);
    weights[pi.at(i)] = current - previous;
    previous = current;
  }
  // Monotonicity makes every increment nonnegative and the sum telescope to
  // c(Ω) = 1, so this never throws for a valid capacity.
  return ProbabilityMeasure::from_atom_weights(c.ground(), std::move(weights));
}

PermutationMeasureSet dominated_extreme_points(const Capacity& c,
                                               int max_enumeration_atoms) {
  const int n = c.atom_count();
  if (n > max_enumeration_atoms) {
    std::uint64_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    throw BudgetError("permutation enumeration over " + std::to_string(n) +
                          " atoms needs " + std::to_string(factorial) +
                          " permutations, over the configured bound",
                      factorial);
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;

  PermutationMeasureSet set;
  std::map<std::vector<Rational>, std::size_t> index_by_values;
  do {
    AtomPermutation pi(order);
    ProbabilityMeasure measure = permutation_measure(c, pi);
    const auto [it, inserted] = index_by_values.try_emplace(
        measure.capacity().values(), set.measures.size());
    if (inserted) {
      set.measures.push_back({std::move(measure), {pi}});
    } else {
      set.measures[it->second].producers.push_back(pi);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return set;
}

std::optional<SubadditivityCounterexample> subadditivity_search(
    const Capacity& c, int sample_budget, std::uint64_t seed) {
  const std::uint32_t m = c.subset_count();

  auto try_pair = [&c](MeasurableFunction x, MeasurableFunction y)
      -> std::optional<SubadditivityCounterexample> {
    const Rational whole = choquet_integral(c, x + y);
    const Rational parts = choquet_integral(c, x) + choquet_integral(c, y);
    if (whole > parts) {
      return SubadditivityCounterexample{std::move(x), std::move(y), whole,
                                         parts};
    }
    return std::nullopt;
  };

  // Indicator pairs first: ∫(1_A + 1_B)dc = c(A∪B) + c(A∩B), so any failure
  // of 2-alternation surfaces here exactly.
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      if (auto hit = try_pair(MeasurableFunction::indicator(c.ground(), Subset{a}),
                              MeasurableFunction::indicator(c.ground(), Subset{b}))) {
        return hit;
      }
    }
  }

  Rng rng(seed);
  const int n = c.atom_count();
  for (int trial = 0; trial < sample_budget; ++trial) {
    std::vector<Rational> xs(n), ys(n);
    for (int atom = 0; atom < n; ++atom) {
      xs[atom] = rng.rational_on_grid(-2, 2, 8);
      ys[atom] = rng.rational_on_grid(-2, 2, 8);
    }
    if (auto hit = try_pair(MeasurableFunction(c.ground(), std::move(xs)),
                            MeasurableFunction(c.ground(), std::move(ys)))) {
      return hit;
    }
  }
  return std::nullopt;
}

}  // namespace capkit
