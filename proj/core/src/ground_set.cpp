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

#include "capkit/ground_set.hpp"

#include <algorithm>
#include <unordered_set>

namespace capkit {

GroundSet::GroundSet(std::vector<std::string> atom_names)
    : atom_names_(std::move(atom_names)) {
  const int n = static_cast<int>(atom_names_.size());
  if (n < 1 || n > kMaxAtoms) {
    throw InputError("ground set must have between 1 and 16 atoms, got " +
                     std::to_string(n));
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& name : atom_names_) {
    if (name.empty()) throw InputError("atom names must be non-empty");
    if (name.find(',') != std::string::npos ||
        name.find('|') != std::string::npos) {
      throw InputError("atom name '" + name +
                       "' contains a reserved character (',' or '|')");
    }
    if (!seen.insert(name).second) {
      throw InputError("duplicate atom name '" + name + "'");
    }
  }
}

GroundSet GroundSet::with_letters(int n) {
  if (n < 1 || n > kMaxAtoms) {
    throw InputError("ground set must have between 1 and 16 atoms, got " +
                     std::to_string(n));
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GroundSet(std::move(names));
}

Subset GroundSet::singleton(int atom) const {
  if (atom < 0 || atom >= size()) {
    throw InputError("atom index " + std::to_string(atom) + " out of range");
  }
  return Subset{std::uint32_t{1} << atom};
}

int GroundSet::atom_index(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (atom_names_[i] == name) return i;
  }
  return -1;
}

std::string GroundSet::subset_key(Subset s) const {
  std::string key;
  for (int i = 0; i < size(); ++i) {
    if (!s.contains(i)) continue;
    if (!key.empty()) key += ',';
    key += atom_names_[i];
  }
  return key;
}

Subset GroundSet::parse_subset_key(std::string_view key) const {
  Subset s{0};
  if (key.empty()) return s;
  std::size_t start = 0;
  int last_index = -1;
  while (true) {
    const std::size_t comma = key.find(',', start);
    const std::string_view name = key.substr(
        start, comma == std::string_view::npos ? comma : comma - start);
    const int index = atom_index(name);
    if (index < 0) {
      throw InputError("unknown atom '" + std::string(name) + "' in subset key '" +
                       std::string(key) + "'");
    }
    if (index <= last_index) {
      throw InputError("subset key '" + std::string(key) +
                       "' must list atoms in ground-set order without repeats");
    }
    last_index = index;
    s.bits |= std::uint32_t{1} << index;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

std::string GroundSet::subset_braces(Subset s) const {
  return "{" + subset_key(s) + "}";
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (a != b) throw InputError("operands belong to different ground sets");
}

AtomPermutation::AtomPermutation(std::vector<int> order)
    : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 1 || n > GroundSet::kMaxAtoms) {
    throw InputError("permutation length out of range");
  }
  std::vector<bool> seen(n, false);
  for (int atom : order_) {
    if (atom < 0 || atom >= n || seen[atom]) {
      throw InputError("permutation is not a bijection on {0..n-1}");
    }
    seen[atom] = true;
  }
}

AtomPermutation AtomPermutation::identity(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return AtomPermutation(std::move(order));
}

Subset AtomPermutation::prefix_set(int count) const {
  if (count < 0 || count > size()) {
    throw InputError("prefix length " + std::to_string(count) +
                     " out of range [0, " + std::to_string(size()) + "]");
  }
  Subset s{0};
  for (int i = 0; i < count; ++i) s.bits |= std::uint32_t{1} << order_[i];
  return s;
}

Chain::Chain(std::vector<Subset> sets) : sets_(std::move(sets)) {
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (!is_strict_subset_of(sets_[i - 1], sets_[i])) {
      throw InputError("chain sets must be strictly increasing under inclusion");
    }
  }
}

}  // namespace capkit
