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

#ifndef ANTIMATROID_SET_FAMILY_HPP_
#define ANTIMATROID_SET_FAMILY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "antimatroid/subset.hpp"

namespace antimatroid {

// Witness that the (possibly truncated) interval property fails:
// lower ⊂ upper are members, lower ∪ element is a member, upper ∪ element is not.
struct IntervalViolation {
  Subset lower;
  Subset upper;
  std::size_t element = 0;
};

// Witness that the exchange axiom fails: no x in x_set − y_set extends y_set.
struct ExchangeViolation {
  Subset x_set;
  Subset y_set;
};

// An immutable, deduplicated family of feasible sets over one ground set.
// Members are kept in canonical (size, mask) order. Copies share storage
// and the lazily evaluated predicate cache.
class SetFamily {
 public:
  // Deduplicates and sorts. Throws kEmptyFamily on an empty member list and
  // kGroundSetMismatch when a member's width differs from the ground set.
  SetFamily(GroundSet ground, std::span<const Subset> members);
  static SetFamily from_masks(GroundSet ground, std::span<const Mask> masks);
  static SetFamily power_set(GroundSet ground);

  const GroundSet& ground() const noexcept;
  std::size_t size() const noexcept;
  std::span<const Mask> masks() const noexcept;
  Subset member(std::size_t index) const;
  std::vector<Subset> members() const;

  bool contains(Mask mask) const noexcept;
  bool contains(const Subset& x) const;
  // Position of `mask` in canonical order, if it is a member.
  std::optional<std::size_t> index_of(Mask mask) const noexcept;
  // Number of members of cardinality at most `size`; these form a prefix.
  std::size_t count_up_to_size(int size) const noexcept;

  // Axiom (A1): every non-empty member X has x ∈ X with X − x a member.
  bool is_accessible() const;
  // Axiom (A2): for members X ⊄ Y some x ∈ X − Y has Y ∪ x a member.
  bool satisfies_exchange() const;
  bool is_union_closed() const;
  // X ⊆ Y members, x ∉ Y, X ∪ x a member ⇒ Y ∪ x a member.
  bool has_interval_property() const;
  // Accessible and (A2). On accessible families the exchange, union and
  // interval characterizations are cross-checked; disagreement throws
  // kConsistencyViolation.
  bool is_antimatroid() const;

  std::optional<ExchangeViolation> find_exchange_violation() const;
  // Scans upper sets in canonical order, then lower sets, then elements.
  std::optional<IntervalViolation> find_interval_violation() const;
  // Same scan restricted to members of size ≤ k − 1. Requires 1 ≤ k ≤ rank().
  std::optional<IntervalViolation> find_truncated_interval_violation(int k) const;
  bool has_truncated_interval_property(int k) const;

  // Size of a largest member (rank of the ground set).
  int rank() const noexcept;
  // Largest member contained in x; kNoFeasibleSubset if none exists.
  int rank(const Subset& x) const;
  // Members of size ≤ k; requires 1 ≤ k ≤ rank().
  SetFamily truncate(int k) const;

  // Feasible continuations {x ∉ X : X ∪ x a member}; kNotFeasible otherwise.
  Subset continuations(const Subset& x) const;
  // Unique maximal feasible subset. Needs an accessible union-closed family
  // (kNotUnionClosed otherwise).
  Subset basis(const Subset& x) const;
  std::vector<Subset> maximal_feasible_subsets(const Subset& x) const;
  // basis(X ∩ Y) for members X, Y of an accessible union-closed family.
  Subset meet(const Subset& x, const Subset& y) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b);

 private:
  struct Data;
  explicit SetFamily(std::shared_ptr<const Data> data);
  void require_width(const Subset& x) const;
  void require_union_closed_accessible() const;

  std::shared_ptr<const Data> data_;
};

}  // namespace antimatroid

#endif  // ANTIMATROID_SET_FAMILY_HPP_
