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

#ifndef CAPKIT_CHOQUET_HPP_
#define CAPKIT_CHOQUET_HPP_

#include <optional>
#include <vector>

#include "capkit/capacity.hpp"

namespace capkit {

// A real-valued function on the atoms: one exact rational per atom.
class MeasurableFunction {
 public:
  MeasurableFunction(GroundSet ground, std::vector<Rational> atom_values);

  static MeasurableFunction indicator(const GroundSet& ground, Subset s);
  static MeasurableFunction constant(const GroundSet& ground, Rational value);

  const GroundSet& ground() const { return ground_; }
  const Rational& at(int atom) const { return values_.at(atom); }
  const std::vector<Rational>& atom_values() const { return values_; }

  friend bool operator==(const MeasurableFunction&, const MeasurableFunction&) = default;

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

MeasurableFunction operator+(const MeasurableFunction& x, const MeasurableFunction& y);

// Asymmetric (translation-covariant) Choquet integral. With the distinct
// values v_1 > … > v_m of x and upper level sets L_j = {x >= v_j}:
//   ∫x dc = Σ_{j<m} (v_j − v_{j+1}) · c(L_j) + v_m,
// which handles negative values and reduces to expectation for additive c.
Rational choquet_integral(const Capacity& c, const MeasurableFunction& x);

// Permutation sorting x non-increasingly; ties broken by ascending atom
// index so results are deterministic.
AtomPermutation comonotone_permutation(const MeasurableFunction& x);

// The probability with atom weights P(atom π_i) = c(S^π_i) − c(S^π_{i−1})
// along π's prefix chain. Monotonicity of c makes every increment >= 0 and
// the telescoping sum exactly 1.
ProbabilityMeasure permutation_measure(const Capacity& c, const AtomPermutation& pi);

// P^π for every permutation of the atoms, deduplicated exactly, each entry
// tagged with all permutations producing it.
struct PermutationMeasureSet {
  struct Entry {
    ProbabilityMeasure measure;
    std::vector<AtomPermutation> producers;
  };
  std::vector<Entry> measures;
};

// Enumerates all n! permutations; throws BudgetError when n exceeds
// max_enumeration_atoms.
PermutationMeasureSet dominated_extreme_points(const Capacity& c,
                                               int max_enumeration_atoms = 8);

struct SubadditivityCounterexample {
  MeasurableFunction x;
  MeasurableFunction y;
  Rational integral_of_sum;   // ∫(x+y) dc
  Rational sum_of_integrals;  // ∫x dc + ∫y dc
};

// Looks for ∫(X+Y)dc > ∫Xdc + ∫Ydc. Deterministic phase first: all
// indicator pairs (a 2-alternating violation at (A,B) is exactly such a
// pair). Then `sample_budget` random rational vectors with components of
// denominator <= 8 in [-2, 2]. Absence of a hit is "none found", not proof.
std::optional<SubadditivityCounterexample> subadditivity_search(
    const Capacity& c, int sample_budget, std::uint64_t seed);

}  // namespace capkit

#endif  // CAPKIT_CHOQUET_HPP_
