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

#ifndef ANTIMATROID_TESTS_FIXTURES_HPP_
#define ANTIMATROID_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <string_view>
#include <vector>

#include "antimatroid/duality.hpp"
#include "antimatroid/set_family.hpp"
#include "antimatroid/tables.hpp"

namespace antimatroid::testing {

using Labels = std::initializer_list<std::string_view>;

inline SetFamily family_of(std::size_t n, std::initializer_list<Labels> members) {
  const GroundSet g = GroundSet::numbered(n);
  std::vector<Subset> sets;
  for (const auto& m : members) sets.push_back(g.subset_of(m));
  return SetFamily(g, sets);
}

inline Mask mask_of(const SetFamily& f, Labels labels) {
  return f.ground().subset_of(labels).mask();
}

// 2^{1,2}.
inline SetFamily boolean2() { return SetFamily::power_set(GroundSet::numbered(2)); }

// {∅,1,2,12,13,123} over {1,2,3}: an antimatroid of rank 3.
inline SetFamily family_p() {
  return family_of(3, {{}, {"1"}, {"2"}, {"1", "2"}, {"1", "3"}, {"1", "2", "3"}});
}

// {∅,1,2,12,13,124,134} over {1,2,3,4}: accessible, rank 3, not a
// 3-truncated antimatroid.
inline SetFamily family_n() {
  return family_of(4, {{}, {"1"}, {"2"}, {"1", "2"}, {"1", "3"}, {"1", "2", "4"},
                       {"1", "3", "4"}});
}

// π(2, ∅) = 2 and 1 elsewhere, on E = {1,2}.
inline LinkageFunction two_element_linkage() {
  return LinkageFunction::generate(GroundSet::numbered(2),
                                   [](std::size_t x, Mask m) { return x == 1 && m == 0 ? 2 : 1; });
}

// π(x, X) = |E − (X ∪ x)|.
inline LinkageFunction complement_size_linkage(std::size_t n) {
  const GroundSet g = GroundSet::numbered(n);
  const Mask full = g.full_mask();
  return LinkageFunction::generate(g, [full](std::size_t x, Mask m) {
    return popcount(full & ~(m | (Mask{1} << x)));
  });
}

}  // namespace antimatroid::testing

#endif  // ANTIMATROID_TESTS_FIXTURES_HPP_
