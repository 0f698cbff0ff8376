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

#include "antimatroid/ranked_system.hpp"

#include <string>

#include "antimatroid/error.hpp"

namespace antimatroid {

RankedSystem::RankedSystem(SetFamily family) : family_(std::move(family)) {
  k_ = family_.rank();
  if (k_ < 1) {
    throw Error(ErrorCode::kInvalidTruncationLevel,
                "a set system of rank 0 has no lower layer");
  }
  lower_count_ = family_.count_up_to_size(k_ - 1);
  const Mask full = ground().full_mask();
  const auto masks = family_.masks();
  auto gamma_table = std::make_shared<std::vector<Mask>>(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    Mask gamma = 0;
    for (Mask outside = full & ~masks[i]; outside != 0; outside &= outside - 1) {
      const Mask bit = outside & -outside;
      if (family_.contains(masks[i] | bit)) gamma |= bit;
    }
    (*gamma_table)[i] = gamma;
    if (i < lower_count_ && gamma == 0) {
      throw Error(ErrorCode::kEmptyContinuationSet,
                  "feasible set " + ground().format(masks[i]) +
                      " of size < " + std::to_string(k_) + " has no feasible continuation");
    }
  }
  gamma_ = std::move(gamma_table);
}

bool RankedSystem::is_truncated_antimatroid() const {
  return family_.is_accessible() && family_.has_truncated_interval_property(k_);
}

Mask RankedSystem::meet_masks(Mask x, Mask y) const {
  for (Mask m : {x, y}) {
    if (!family_.contains(m)) {
      throw Error(ErrorCode::kNotFeasible, ground().format(m) + " is not a feasible set");
    }
  }
  const Mask common = x & y;
  const auto masks = family_.masks();
  // The largest member inside the intersection must contain every other one.
  for (auto it = masks.rbegin(); it != masks.rend(); ++it) {
    if (!is_subset(*it, common)) continue;
    for (Mask m : masks) {
      if (is_subset(m, common) && !is_subset(m, *it)) {
        throw Error(ErrorCode::kNotUnionClosed,
                    "maximal feasible subset of " + ground().format(common) +
                        " is not unique");
      }
    }
    return *it;
  }
  throw Error(ErrorCode::kNoFeasibleSubset,
              "no feasible subset of " + ground().format(common));
}

Subset RankedSystem::meet(const Subset& x, const Subset& y) const {
  if (x.width() != ground().size() || y.width() != ground().size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "subset built over a ground set of different size");
  }
  return ground().subset(meet_masks(x.mask(), y.mask()));
}

namespace {

SetFamily validated_truncation(const SetFamily& family, int k) {
  SetFamily truncated = family.truncate(k);
  if (!truncated.is_accessible()) {
    throw Error(ErrorCode::kNotTruncatedAntimatroid,
                "the " + std::to_string(k) + "-truncation is not accessible");
  }
  if (truncated.rank() != k) {
    throw Error(ErrorCode::kNotTruncatedAntimatroid,
                "the " + std::to_string(k) + "-truncation has rank " +
                    std::to_string(truncated.rank()));
  }
  if (const auto v = truncated.find_truncated_interval_violation(k)) {
    const auto& g = family.ground();
    throw Error(ErrorCode::kNotTruncatedAntimatroid,
                "k-truncated interval property fails at A=" + g.format(v->lower.mask()) +
                    ", B=" + g.format(v->upper.mask()) + ", a=" + g.label(v->element));
  }
  return truncated;
}

}  // namespace

TruncatedAntimatroid::TruncatedAntimatroid(const SetFamily& family, int k)
    : RankedSystem(validated_truncation(family, k)) {}

TruncatedAntimatroid::TruncatedAntimatroid(const SetFamily& family)
    : TruncatedAntimatroid(family, family.rank()) {}

}  // namespace antimatroid
