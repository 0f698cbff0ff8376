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

#ifndef ANTIMATROID_RANKED_SYSTEM_HPP_
#define ANTIMATROID_RANKED_SYSTEM_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "antimatroid/set_family.hpp"

namespace antimatroid {

// A set system of rank k ≥ 1 in which every member of size ≤ k − 1 has a
// non-empty set of feasible continuations. This is the setting in which a
// set function on the lower layer 𝓕_{k−1} can be defined as the minimum of
// a linkage over continuations.
class RankedSystem {
 public:
  // Throws kInvalidTruncationLevel if the family has rank 0 and
  // kEmptyContinuationSet if some lower member has no continuation.
  explicit RankedSystem(SetFamily family);

  const SetFamily& family() const noexcept { return family_; }
  const GroundSet& ground() const noexcept { return family_.ground(); }
  int k() const noexcept { return k_; }

  std::size_t member_count() const noexcept { return family_.size(); }
  // Members of 𝓕_{k−1}; they are the first lower_count() members.
  std::size_t lower_count() const noexcept { return lower_count_; }
  std::span<const Mask> lower_masks() const noexcept {
    return family_.masks().first(lower_count_);
  }
  // Γ of the i-th member (canonical position).
  Mask continuations(std::size_t member_index) const { return gamma_->at(member_index); }

  // Accessible and satisfies the k-truncated interval property, i.e. the
  // k-truncation of some antimatroid.
  bool is_truncated_antimatroid() const;

  // The unique maximal feasible subset of X ∩ Y for members X, Y.
  // kNotFeasible for non-members; kNotUnionClosed if the maximal subset
  // is not unique (never the case for truncated antimatroids).
  Subset meet(const Subset& x, const Subset& y) const;
  Mask meet_masks(Mask x, Mask y) const;

  friend bool operator==(const RankedSystem& a, const RankedSystem& b) {
    return a.k_ == b.k_ && a.family_ == b.family_;
  }

 private:
  SetFamily family_;
  int k_ = 0;
  std::size_t lower_count_ = 0;
  std::shared_ptr<const std::vector<Mask>> gamma_;
};

// A validated k-truncated antimatroid (E, 𝓕_k).
class TruncatedAntimatroid : public RankedSystem {
 public:
  // Validates family.truncate(k). Throws kInvalidTruncationLevel when k is
  // outside [1, rank] and kNotTruncatedAntimatroid when the truncation is not
  // accessible or violates the k-truncated interval property.
  TruncatedAntimatroid(const SetFamily& family, int k);
  // Uses k = rank(family).
  explicit TruncatedAntimatroid(const SetFamily& family);
};

}  // namespace antimatroid

#endif  // ANTIMATROID_RANKED_SYSTEM_HPP_
