// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "antimatroid/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "antimatroid/error.hpp"

namespace antimatroid {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what,
                       ErrorCode code = ErrorCode::kParse) {
  throw Error(code, where + ": " + what);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

const json& require_field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& require_array(const json& doc, const char* key, const std::string& where) {
  const json& value = require_field(doc, key, where);
  if (!value.is_array()) fail(where + "/" + key, "expected an array");
  return value;
}

Mask parse_set(const json& arr, const GroundSet& ground, const std::string& where) {
  if (!arr.is_array()) fail(where, "expected an array of element labels");
  Mask mask = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!arr[i].is_string()) fail(at, "element labels must be strings");
    const auto label = arr[i].get<std::string>();
    const auto index = ground.index_of(label);
    if (!index) fail(at, "unknown element \"" + label + "\"");
    const Mask bit = Mask{1} << *index;
    if (mask & bit) fail(at, "element \"" + label + "\" repeated in one set");
    mask |= bit;
  }
  return mask;
}

Rational parse_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  fail(where, "values must be integers or \"p/q\" strings");
}

GroundSet parse_ground(const json& arr, const std::string& where) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) fail(where + "/" + std::to_string(i), "labels must be strings");
    labels.push_back(arr[i].get<std::string>());
  }
  try {
    return GroundSet(std::move(labels));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

SetFamily parse_set_system(std::string_view text) {
  const json doc = parse_document(text);
  const GroundSet ground = parse_ground(require_array(doc, "ground", ""), "/ground");
  const json& family = require_array(doc, "family", "");
  if (family.empty()) fail("/family", "a set system needs at least one feasible set",
                           ErrorCode::kEmptyFamily);
  std::vector<Mask> masks;
  std::map<Mask, std::size_t> seen;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string at = "/family/" + std::to_string(i);
    const Mask m = parse_set(family[i], ground, at);
    if (const auto [it, fresh] = seen.emplace(m, i); !fresh) {
      fail(at, "duplicate member " + ground.format(m) + " (first at /family/" +
                   std::to_string(it->second) + ")");
    }
    masks.push_back(m);
  }
  return SetFamily::from_masks(ground, masks);
}

json subset_to_json(const GroundSet& ground, Mask mask) {
  return json(ground.labels_of(mask));
}

json set_system_to_json(const SetFamily& family) {
  json members = json::array();
  for (Mask m : family.masks()) members.push_back(subset_to_json(family.ground(), m));
  return json{{"ground", family.ground().labels()}, {"family", std::move(members)}};
}

SetFunction parse_set_function(std::string_view text, const RankedSystem& system) {
  const json doc = parse_document(text);
  const json& entries = require_array(doc, "values", "");
  const auto& family = system.family();
  const auto& ground = system.ground();
  std::vector<std::optional<Rational>> values(system.member_count());
  std::size_t upper_entries = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = "/values/" + std::to_string(i);
    const Mask m = parse_set(require_field(entries[i], "set", at), ground, at + "/set");
    const auto index = family.index_of(m);
    if (!index) fail(at + "/set", ground.format(m) + " is not a feasible set", ErrorCode::kNotInDomain);
    if (values[*index]) fail(at, "duplicate value for " + ground.format(m));
    values[*index] = parse_value(require_field(entries[i], "value", at), at + "/value");
    if (*index >= system.lower_count()) ++upper_entries;
  }
  const std::size_t count =
      upper_entries == 0 ? system.lower_count() : system.member_count();
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!values[i]) {
      fail("/values", "no value for feasible set " + ground.format(family.masks()[i]),
           ErrorCode::kMissingValue);
    }
    out.push_back(*values[i]);
  }
  return SetFunction(system, std::move(out));
}

json set_function_to_json(const SetFunction& f) {
  const auto& ground = f.system().ground();
  const auto masks = f.system().family().masks();
  json entries = json::array();
  for (std::size_t i = 0; i < f.domain_size(); ++i) {
    entries.push_back(json{{"set", subset_to_json(ground, masks[i])},
                           {"value", f.values()[i].to_string()}});
  }
  return json{{"values", std::move(entries)}};
}

LinkageFunction parse_linkage(std::string_view text, const GroundSet* ground) {
  const json doc = parse_document(text);
  if (!doc.is_object()) fail("", "expected a JSON object");
  std::optional<GroundSet> declared;
  if (const auto it = doc.find("ground"); it != doc.end()) {
    if (!it->is_array()) fail("/ground", "expected an array");
    declared = parse_ground(*it, "/ground");
  }
  if (declared && ground && !(*declared == *ground)) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "/ground: linkage ground set differs from the system's ground set");
  }
  if (!declared && !ground) fail("", "linkage file has no \"ground\" and no system was given");
  const GroundSet& g = declared ? *declared : *ground;

  std::optional<Rational> fill;
  if (const auto it = doc.find("default"); it != doc.end()) fill = parse_value(*it, "/default");
  const json& entries = require_array(doc, "entries", "");

  const std::size_t n = g.size();
  std::vector<std::optional<Rational>> table(g.subset_count() * n);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = "/entries/" + std::to_string(i);
    const json& x_field = require_field(entries[i], "x", at);
    if (!x_field.is_string()) fail(at + "/x", "element labels must be strings");
    const auto label = x_field.get<std::string>();
    const auto x = g.index_of(label);
    if (!x) fail(at + "/x", "unknown element \"" + label + "\"");
    const Mask m = parse_set(require_field(entries[i], "set", at), g, at + "/set");
    auto& slot = table[m * n + *x];
    if (slot) fail(at, "duplicate entry for (" + label + ", " + g.format(m) + ")");
    slot = parse_value(require_field(entries[i], "value", at), at + "/value");
  }
  LinkageFunction pi(g);
  for (Mask m = 0; m < g.subset_count(); ++m) {
    for (std::size_t x = 0; x < n; ++x) {
      const auto& slot = table[m * n + x];
      if (!slot && !fill) {
        fail("/entries", "no value for (" + g.label(x) + ", " + g.format(m) +
                             ") and no \"default\"",
             ErrorCode::kMissingValue);
      }
      pi.set(x, m, slot ? *slot : *fill);
    }
  }
  return pi;
}

json linkage_to_json(const LinkageFunction& pi) {
  const auto& g = pi.ground();
  json entries = json::array();
  for (Mask m = 0; m < g.subset_count(); ++m) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      entries.push_back(json{{"x", g.label(x)},
                             {"set", subset_to_json(g, m)},
                             {"value", pi(x, m).to_string()}});
    }
  }
  return json{{"ground", g.labels()}, {"entries", std::move(entries)}};
}

std::string dump_canonical(const json& doc) { return doc.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json quasi_concavity_violation_to_json(const GroundSet& ground, const QuasiConcavityViolation& v) {
  return json{{"X", subset_to_json(ground, v.x.mask())},
              {"Y", subset_to_json(ground, v.y.mask())},
              {"Z", subset_to_json(ground, v.z.mask())}};
}

json monotonicity_violation_to_json(const GroundSet& ground, const MonotonicityViolation& v) {
  return json{{"x", ground.label(v.element)},
              {"X", subset_to_json(ground, v.smaller.mask())},
              {"Y", subset_to_json(ground, v.larger.mask())}};
}

json interval_violation_to_json(const GroundSet& ground, const IntervalViolation& v) {
  return json{{"A", subset_to_json(ground, v.lower.mask())},
              {"B", subset_to_json(ground, v.upper.mask())},
              {"a", ground.label(v.element)}};
}

}  // namespace antimatroid
