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

#ifndef CAPKIT_CAPACITY_HPP_
#define CAPKIT_CAPACITY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "capkit/ground_set.hpp"
#include "capkit/rational.hpp"

namespace capkit {

// Why a value table was rejected as a capacity. `a`/`b` identify the
// offending set(s): for NotMonotone, `a` is the subset whose value exceeds
// its superset `b`.
struct ValidationIssue {
  enum class Kind {
    WrongLength,
    EmptySetNotZero,
    FullSetNotOne,
    ValueOutOfRange,
    NotMonotone,
  };

  Kind kind;
  Subset a{0};
  Subset b{0};
  Rational value_a;
  Rational value_b;

  std::string describe(const GroundSet& ground) const;
};

class ValidationError : public InputError {
 public:
  ValidationError(const ValidationIssue& issue, const GroundSet& ground)
      : InputError("not a capacity: " + issue.describe(ground)), issue(issue) {}

  ValidationIssue issue;
};

// A normalized monotone set function over the power set of a ground set,
// c(∅) = 0 and c(Ω) = 1, stored as a dense table in binary-counting order
// (bit i of the index = atom i). Immutable once validated.
class Capacity {
 public:
  // First violated axiom in check order: table length, boundary values,
  // range, then monotonicity over cover pairs (A ⊂ B with |B\A| = 1).
  static std::optional<ValidationIssue> find_violation(
      const GroundSet& ground, const std::vector<Rational>& values);

  // Validates and takes ownership; throws ValidationError.
  static Capacity from_values(GroundSet ground, std::vector<Rational> values);

  const GroundSet& ground() const { return ground_; }
  int atom_count() const { return ground_.size(); }
  std::uint32_t subset_count() const { return ground_.subset_count(); }

  const Rational& at(Subset s) const { return values_[s.bits]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  Capacity(GroundSet ground, std::vector<Rational> values)
      : ground_(std::move(ground)), values_(std::move(values)) {}

  GroundSet ground_;
  std::vector<Rational> values_;

  friend class CapacityFactory;
};

namespace detail {
// Construction that skips re-validation; for internal call sites that prove
// the axioms structurally. Misuse is an assertion failure in debug builds.
Capacity make_capacity_unchecked(GroundSet ground, std::vector<Rational> values);
}  // namespace detail

// The partial order on capacities: true iff c2(A) <= c1(A) for every subset.
bool dominates(const Capacity& c1, const Capacity& c2);

// Dual capacity conj(A) = 1 - c(A^c); an involution that swaps the
// k-alternating and k-monotone classes.
Capacity conjugate(const Capacity& c);

// c(A) = Σ_{i∈A} c({i}) for every A. Equivalent to modularity on all pairs.
bool is_additive(const Capacity& c);

// First pair failing the modular equality, if any. Independent route to
// is_additive; kept separate so the two can cross-check each other.
struct ModularityWitness {
  Subset a, b;
  Rational lhs;  // c(A∪B) + c(A∩B)
  Rational rhs;  // c(A) + c(B)
};
std::optional<ModularityWitness> additivity_violation(const Capacity& c);

// Möbius inversion m of a set function: m(A) = Σ_{B⊆A} (-1)^{|A\B|} c(B),
// computed with the fast in-place transform. The zeta transform recovers the
// capacity exactly: c(A) = Σ_{B⊆A} m(B).
class MobiusRepresentation {
 public:
  explicit MobiusRepresentation(const Capacity& c);

  // Masses must sum to 1 with mass(∅) == 0; used by generators that build
  // capacities from prescribed masses. Throws InputError.
  static MobiusRepresentation from_masses(GroundSet ground,
                                          std::vector<Rational> masses);

  const GroundSet& ground() const { return ground_; }
  const Rational& mass(Subset s) const { return masses_[s.bits]; }
  const std::vector<Rational>& masses() const { return masses_; }

  bool all_nonnegative() const;

  // Zeta transform; validates the result table (throws ValidationError when
  // the masses do not induce a monotone capacity).
  Capacity to_capacity() const;

 private:
  MobiusRepresentation(GroundSet ground, std::vector<Rational> masses)
      : ground_(std::move(ground)), masses_(std::move(masses)) {}

  GroundSet ground_;
  std::vector<Rational> masses_;
};

// A capacity certified additive, with direct access to its atom weights.
class ProbabilityMeasure {
 public:
  // Weights must be >= 0 and sum to exactly 1.
  static ProbabilityMeasure from_atom_weights(GroundSet ground,
                                              std::vector<Rational> weights);

  static std::optional<ProbabilityMeasure> try_from_capacity(const Capacity& c);
  static ProbabilityMeasure from_capacity(const Capacity& c);  // throws InputError

  const Capacity& capacity() const { return capacity_; }
  const GroundSet& ground() const { return capacity_.ground(); }
  const Rational& atom_weight(int atom) const { return weights_.at(atom); }
  const std::vector<Rational>& atom_weights() const { return weights_; }
  const Rational& at(Subset s) const { return capacity_.at(s); }

  friend bool operator==(const ProbabilityMeasure&, const ProbabilityMeasure&) = default;

 private:
  ProbabilityMeasure(Capacity capacity, std::vector<Rational> weights)
      : capacity_(std::move(capacity)), weights_(std::move(weights)) {}

  Capacity capacity_;
  std::vector<Rational> weights_;
};

}  // namespace capkit

#endif  // CAPKIT_CAPACITY_HPP_
