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

#include "capkit/capacity.hpp"

#include <cassert>

namespace capkit {

std::string ValidationIssue::describe(const GroundSet& ground) const {
  switch (kind) {
    case Kind::WrongLength:
      return "value table must have exactly " +
             std::to_string(ground.subset_count()) + " entries";
    case Kind::EmptySetNotZero:
      return "c({}) must be 0, got " + format_rational(value_a);
    case Kind::FullSetNotOne:
      return "c(" + ground.subset_braces(ground.full()) + ") must be 1, got " +
             format_rational(value_a);
    case Kind::ValueOutOfRange:
      return "c(" + ground.subset_braces(a) + ") = " + format_rational(value_a) +
             " lies outside [0, 1]";
    case Kind::NotMonotone:
      return "monotonicity fails: c(" + ground.subset_braces(a) + ") = " +
             format_rational(value_a) + " > c(" + ground.subset_braces(b) +
             ") = " + format_rational(value_b);
  }
  return "invalid capacity";
}

std::optional<ValidationIssue> Capacity::find_violation(
    const GroundSet& ground, const std::vector<Rational>& values) {
  const std::uint32_t m = ground.subset_count();
  if (values.size() != m) {
    return ValidationIssue{ValidationIssue::Kind::WrongLength};
  }
  if (values[0] != 0) {
    return ValidationIssue{ValidationIssue::Kind::EmptySetNotZero,
                           kEmptySet, kEmptySet, values[0], {}};
  }
  if (values[m - 1] != 1) {
    return ValidationIssue{ValidationIssue::Kind::FullSetNotOne,
                           ground.full(), ground.full(), values[m - 1], {}};
  }
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    if (values[bits] < 0 || values[bits] > 1) {
      return ValidationIssue{ValidationIssue::Kind::ValueOutOfRange,
                             Subset{bits}, Subset{bits}, values[bits], {}};
    }
  }
  // Cover pairs suffice: every inclusion is a chain of single-atom steps.
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    for (int atom = 0; atom < ground.size(); ++atom) {
      const std::uint32_t with = bits | (std::uint32_t{1} << atom);
      if (with == bits) continue;
      if (values[bits] > values[with]) {
        return ValidationIssue{ValidationIssue::Kind::NotMonotone,
                               Subset{bits}, Subset{with},
                               values[bits], values[with]};
      }
    }
  }
  return std::nullopt;
}

Capacity Capacity::from_values(GroundSet ground, std::vector<Rational> values) {
  if (auto issue = find_violation(ground, values)) {
    throw ValidationError(*issue, ground);
  }
  return Capacity(std::move(ground), std::move(values));
}

namespace detail {
Capacity make_capacity_unchecked(GroundSet ground, std::vector<Rational> values) {
  assert(!Capacity::find_violation(ground, values));
  return Capacity::from_values(std::move(ground), std::move(values));
}
}  // namespace detail

bool dominates(const Capacity& c1, const Capacity& c2) {
  require_same_ground(c1.ground(), c2.ground());
  const std::uint32_t m = c1.subset_count();
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    if (c2.values()[bits] > c1.values()[bits]) return false;
  }
  return true;
}

Capacity conjugate(const Capacity& c) {
  const std::uint32_t m = c.subset_count();
  const std::uint32_t full = c.ground().full().bits;
  std::vector<Rational> values(m);
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    values[bits] = Rational(1) - c.values()[full & ~bits];
  }
  return Capacity::from_values(c.ground(), std::move(values));
}

bool is_additive(const Capacity& c) {
  const std::uint32_t m = c.subset_count();
  for (std::uint32_t bits = 0; bits < m; ++bits) {
    Rational sum = 0;
    for (int atom = 0; atom < c.atom_count(); ++atom) {
      if ((bits >> atom) & 1u) sum += c.values()[std::uint32_t{1} << atom];
    }
    if (sum != c.values()[bits]) return false;
  }
  return true;
}

std::optional<ModularityWitness> additivity_violation(const Capacity& c) {
  const std::uint32_t m = c.subset_count();
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      const Rational lhs = c.values()[a | b] + c.values()[a & b];
      const Rational rhs = c.values()[a] + c.values()[b];
      if (lhs != rhs) {
        return ModularityWitness{Subset{a}, Subset{b}, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

MobiusRepresentation::MobiusRepresentation(const Capacity& c)
    : ground_(c.ground()), masses_(c.values()) {
  // In-place Möbius transform (inverse subset-sum), one bit level at a time.
  const std::uint32_t m = ground_.subset_count();
  for (int atom = 0; atom < ground_.size(); ++atom) {
    const std::uint32_t bit = std::uint32_t{1} << atom;
    for (std::uint32_t bits = 0; bits < m; ++bits) {
      if (bits & bit) masses_[bits] -= masses_[bits ^ bit];
    }
  }
}

MobiusRepresentation MobiusRepresentation::from_masses(
    GroundSet ground, std::vector<Rational> masses) {
  if (masses.size() != ground.subset_count()) {
    throw InputError("mass table must have exactly " +
                     std::to_string(ground.subset_count()) + " entries");
  }
  if (masses[0] != 0) {
    throw InputError("Möbius mass of the empty set must be 0");
  }
  Rational total = 0;
  for (const Rational& mass : masses) total += mass;
  if (total != 1) {
    throw InputError("Möbius masses must sum to 1, got " +
                     format_rational(total));
  }
  return MobiusRepresentation(std::move(ground), std::move(masses));
}

bool MobiusRepresentation::all_nonnegative() const {
  for (const Rational& mass : masses_) {
    if (mass < 0) return false;
  }
  return true;
}

Capacity MobiusRepresentation::to_capacity() const {
  std::vector<Rational> values = masses_;
  const std::uint32_t m = ground_.subset_count();
  for (int atom = 0; atom < ground_.size(); ++atom) {
    const std::uint32_t bit = std::uint32_t{1} << atom;
    for (std::uint32_t bits = 0; bits < m; ++bits) {
      if (bits & bit) values[bits] += values[bits ^ bit];
    }
  }
  return Capacity::from_values(ground_, std::move(values));
}

ProbabilityMeasure ProbabilityMeasure::from_atom_weights(
    GroundSet ground, std::vector<Rational> weights) {
  if (static_cast<int>(weights.size()) != ground.size()) {
    throw InputError("expected one weight per atom");
  }
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw InputError("atom weights must be nonnegative");
    total += w;
  }
  if (total != 1) {
    throw InputError("atom weights must sum to 1, got " +
                     format_rational(total));
  }
  const std::uint32_t m = ground.subset_count();
  std::vector<Rational> values(m, Rational(0));
  for (std::uint32_t bits = 1; bits < m; ++bits) {
    const std::uint32_t low = bits & (bits - 1);  // bits without its lowest atom
    const int atom = std::countr_zero(bits);
    values[bits] = values[low] + weights[atom];
  }
  Capacity capacity = Capacity::from_values(std::move(ground), std::move(values));
  return ProbabilityMeasure(std::move(capacity), std::move(weights));
}

std::optional<ProbabilityMeasure> ProbabilityMeasure::try_from_capacity(
    const Capacity& c) {
  if (!is_additive(c)) return std::nullopt;
  std::vector<Rational> weights;
  weights.reserve(c.atom_count());
  for (int atom = 0; atom < c.atom_count(); ++atom) {
    weights.push_back(c.values()[std::uint32_t{1} << atom]);
  }
  return ProbabilityMeasure(c, std::move(weights));
}

ProbabilityMeasure ProbabilityMeasure::from_capacity(const Capacity& c) {
  if (auto p = try_from_capacity(c)) return *std::move(p);
  throw InputError("capacity is not additive");
}

}  // namespace capkit
