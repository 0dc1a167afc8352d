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

#ifndef CAPKIT_IO_HPP_
#define CAPKIT_IO_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capkit/capacity.hpp"
#include "capkit/choquet.hpp"

namespace capkit::io {

// Capacity files are JSON:
//   {"ground_set": ["a","b"],
//    "values": {"": "0", "a": "7/10", "b": "7/10", "a,b": "1"}}
// `values` is either a map keyed by comma-joined atom names in ground-set
// order ("" is the empty set, all 2^n keys required) or a dense array of
// length 2^n in binary-counting order (bit i = atom i). Rationals are "p/q"
// strings, decimal strings, or JSON integers; non-integer JSON numbers are
// rejected to keep the exactness contract.

// Parses and returns the raw table without capacity validation, so callers
// can report axiom violations themselves.
std::pair<GroundSet, std::vector<Rational>> read_capacity_table(
    std::string_view text);

// Parse + validate. Throws InputError on malformed text, ValidationError on
// a well-formed table violating the axioms.
Capacity read_capacity(std::string_view text);
Capacity read_capacity_file(const std::string& path);

std::string write_capacity(const Capacity& c, bool dense = false);
void write_capacity_file(const std::string& path, const Capacity& c,
                         bool dense = false);

// Function files: {"ground_set": [...], "values": ["2", "1"]} with one
// rational per atom.
MeasurableFunction read_function(std::string_view text);
MeasurableFunction read_function_file(const std::string& path);
std::string write_function(const MeasurableFunction& x);

std::string read_text_file(const std::string& path);  // throws InputError

// FNV-1a content hash, hex-encoded; used for input provenance in --json
// output.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace capkit::io

#endif  // CAPKIT_IO_HPP_
