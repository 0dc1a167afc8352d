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

#include "capkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace capkit::io {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) throw InputError("file is not valid JSON");
  return parsed;
}

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_string()) {
    if (auto parsed = parse_rational(value.get<std::string>())) return *parsed;
    throw InputError("cannot parse rational '" + value.get<std::string>() +
                     "' at " + where);
  }
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_number()) {
    throw InputError("non-integer JSON number at " + where +
                     "; write exact rationals as strings like \"7/10\"");
  }
  throw InputError("expected a rational at " + where);
}

GroundSet ground_set_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("ground_set")) {
    throw InputError("missing \"ground_set\" field");
  }
  const json& names_json = doc["ground_set"];
  if (!names_json.is_array() || names_json.empty()) {
    throw InputError("\"ground_set\" must be a non-empty array of atom names");
  }
  std::vector<std::string> names;
  for (const json& name : names_json) {
    if (!name.is_string()) throw InputError("atom names must be strings");
    names.push_back(name.get<std::string>());
  }
  return GroundSet(std::move(names));
}

}  // namespace

std::pair<GroundSet, std::vector<Rational>> read_capacity_table(
    std::string_view text) {
  const json doc = parse_json(text);
  GroundSet ground = ground_set_from_json(doc);
  if (!doc.contains("values")) throw InputError("missing \"values\" field");
  const json& values_json = doc["values"];
  const std::uint32_t m = ground.subset_count();

  std::vector<Rational> values;
  if (values_json.is_array()) {
    if (values_json.size() != m) {
      throw InputError("dense \"values\" array must have exactly " +
                       std::to_string(m) + " entries, got " +
                       std::to_string(values_json.size()));
    }
    values.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      values.push_back(
          rational_from_json(values_json[i], "values[" + std::to_string(i) + "]"));
    }
  } else if (values_json.is_object()) {
    // Map form: all 2^n keys required, none invented.
    values.assign(m, Rational(0));
    std::vector<bool> seen(m, false);
    for (const auto& [key, value] : values_json.items()) {
      const Subset s = ground.parse_subset_key(key);
      if (seen[s.bits]) {
        throw InputError("subset key '" + key + "' appears twice");
      }
      seen[s.bits] = true;
      values[s.bits] = rational_from_json(value, "values[\"" + key + "\"]");
    }
    for (std::uint32_t bits = 0; bits < m; ++bits) {
      if (!seen[bits]) {
        throw InputError("map form must cover all subsets; missing \"" +
                         ground.subset_key(Subset{bits}) + "\"");
      }
    }
  } else {
    throw InputError("\"values\" must be an array or an object");
  }
  return {std::move(ground), std::move(values)};
}

Capacity read_capacity(std::string_view text) {
  auto [ground, values] = read_capacity_table(text);
  return Capacity::from_values(std::move(ground), std::move(values));
}

Capacity read_capacity_file(const std::string& path) {
  return read_capacity(read_text_file(path));
}

std::string write_capacity(const Capacity& c, bool dense) {
  json doc;
  doc["ground_set"] = c.ground().atom_names();
  if (dense) {
    json values = json::array();
    for (const Rational& value : c.values()) {
      values.push_back(format_rational(value));
    }
    doc["values"] = std::move(values);
  } else {
    json values = json::object();
    for (std::uint32_t bits = 0; bits < c.subset_count(); ++bits) {
      values[c.ground().subset_key(Subset{bits})] =
          format_rational(c.values()[bits]);
    }
    doc["values"] = std::move(values);
  }
  return doc.dump(2) + "\n";
}

void write_capacity_file(const std::string& path, const Capacity& c,
                         bool dense) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << write_capacity(c, dense);
}

MeasurableFunction read_function(std::string_view text) {
  const json doc = parse_json(text);
  GroundSet ground = ground_set_from_json(doc);
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw InputError("function file needs a \"values\" array");
  }
  const json& values_json = doc["values"];
  if (static_cast<int>(values_json.size()) != ground.size()) {
    throw InputError("function must have exactly one value per atom");
  }
  std::vector<Rational> values;
  for (std::size_t i = 0; i < values_json.size(); ++i) {
    values.push_back(
        rational_from_json(values_json[i], "values[" + std::to_string(i) + "]"));
  }
  return MeasurableFunction(std::move(ground), std::move(values));
}

MeasurableFunction read_function_file(const std::string& path) {
  return read_function(read_text_file(path));
}

std::string write_function(const MeasurableFunction& x) {
  json doc;
  doc["ground_set"] = x.ground().atom_names();
  json values = json::array();
  for (const Rational& value : x.atom_values()) {
    values.push_back(format_rational(value));
  }
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(out);
}

}  // namespace capkit::io
