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

#ifndef ANTIMATROID_IO_HPP_
#define ANTIMATROID_IO_HPP_

#include <string>
#include <string_view>

#include "antimatroid/duality.hpp"
#include "antimatroid/set_family.hpp"
#include "antimatroid/tables.hpp"
#include "json.hpp"

namespace antimatroid {

// Set-system files:
//   {"ground": ["1","2"], "family": [[], ["1"], ["1","2"]]}
// Element order in "ground" fixes the bit positions. Unknown or duplicate
// labels and duplicate members are rejected with the offending JSON path.
SetFamily parse_set_system(std::string_view text);
nlohmann::json set_system_to_json(const SetFamily& family);

// Set-function files:
//   {"values": [{"set": ["1"], "value": "1"}, {"set": [], "value": "3/2"}]}
// Entries must cover 𝓕_{k−1} exactly, or every member of the system.
SetFunction parse_set_function(std::string_view text, const RankedSystem& system);
nlohmann::json set_function_to_json(const SetFunction& f);

// Linkage files:
//   {"ground": [...], "entries": [{"x": "2", "set": [], "value": "2"}], "default": "1"}
// "default" fills unlisted pairs; without it the table must be explicit.
// "ground" is optional when `ground` is supplied; when both are present they
// must agree (kGroundSetMismatch).
LinkageFunction parse_linkage(std::string_view text, const GroundSet* ground = nullptr);
nlohmann::json linkage_to_json(const LinkageFunction& pi);

// Canonical text form used for every emitted file (two-space indent,
// trailing newline).
std::string dump_canonical(const nlohmann::json& doc);

// Reads a whole file; kParse with the path on failure.
std::string read_text_file(const std::string& path);

nlohmann::json subset_to_json(const GroundSet& ground, Mask mask);
nlohmann::json quasi_concavity_violation_to_json(const GroundSet& ground,
                                                 const QuasiConcavityViolation& v);
nlohmann::json monotonicity_violation_to_json(const GroundSet& ground,
                                              const MonotonicityViolation& v);
nlohmann::json interval_violation_to_json(const GroundSet& ground, const IntervalViolation& v);

}  // namespace antimatroid

#endif  // ANTIMATROID_IO_HPP_
