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

#ifndef CAPKIT_GROUND_SET_HPP_
#define CAPKIT_GROUND_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "capkit/errors.hpp"

namespace capkit {

// A subset of a ground set's atoms as a characteristic bitmask: bit i is set
// iff atom i belongs to the subset. Ordering is by the raw integer, which is
// the canonical "subset index" used for tie-breaking everywhere.
struct Subset {
  std::uint32_t bits = 0;

  constexpr bool contains(int atom) const { return (bits >> atom) & 1u; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }

  friend constexpr auto operator<=>(Subset a, Subset b) = default;
};

inline constexpr Subset kEmptySet{0};

constexpr Subset union_of(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
constexpr Subset intersection_of(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
constexpr Subset difference_of(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
constexpr bool is_subset_of(Subset a, Subset b) { return (a.bits & ~b.bits) == 0; }
constexpr bool is_strict_subset_of(Subset a, Subset b) {
  return a.bits != b.bits && is_subset_of(a, b);
}

// The finite ground set: an ordered list of uniquely named atoms. Every
// algebra in this library is the full power set of such a list; callers with
// a coarser algebra reduce it to its atoms first. n is capped at 16 because
// everything downstream enumerates dense 2^n tables.
class GroundSet {
 public:
  static constexpr int kMaxAtoms = 16;

  // Atom names must be unique, non-empty, and free of the characters
  // ',' and '|' reserved by the subset-key and chain syntax.
  explicit GroundSet(std::vector<std::string> atom_names);

  // Convenience ground set with single-letter names "a", "b", ...
  static GroundSet with_letters(int n);

  int size() const { return static_cast<int>(atom_names_.size()); }
  std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }
  Subset full() const { return Subset{subset_count() - 1}; }
  Subset singleton(int atom) const;
  Subset complement(Subset s) const { return Subset{~s.bits & full().bits}; }

  const std::vector<std::string>& atom_names() const { return atom_names_; }
  const std::string& atom_name(int atom) const { return atom_names_.at(atom); }
  // -1 when the name is unknown.
  int atom_index(std::string_view name) const;

  // Canonical file key: atom names joined by ',' in ground-set order; the
  // empty set is the empty string.
  std::string subset_key(Subset s) const;
  Subset parse_subset_key(std::string_view key) const;  // throws InputError

  // Human form "{a,c}"; the empty set prints as "{}".
  std::string subset_braces(Subset s) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> atom_names_;
};

// Throws InputError unless both arguments are the same ground set.
void require_same_ground(const GroundSet& a, const GroundSet& b);

// A bijection on atom positions: order()[i] is the atom placed at position i.
class AtomPermutation {
 public:
  explicit AtomPermutation(std::vector<int> order);  // throws InputError

  static AtomPermutation identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  int at(int position) const { return order_.at(position); }
  const std::vector<int>& order() const { return order_; }

  // Union of the first `count` atoms in permutation order; count == 0 is the
  // empty set, count == n the full set.
  Subset prefix_set(int count) const;  // throws InputError when out of range

  friend bool operator==(const AtomPermutation&, const AtomPermutation&) = default;

 private:
  std::vector<int> order_;
};

// A strictly inclusion-increasing sequence of subsets.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<Subset> sets);  // throws InputError

  bool empty() const { return sets_.empty(); }
  std::size_t size() const { return sets_.size(); }
  const std::vector<Subset>& sets() const { return sets_; }

 private:
  std::vector<Subset> sets_;
};

}  // namespace capkit

#endif  // CAPKIT_GROUND_SET_HPP_
