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

#include "antimatroid/tables.hpp"

#include <string>

#include "antimatroid/error.hpp"

namespace antimatroid {

SetFunction::SetFunction(RankedSystem system, std::vector<Rational> values)
    : system_(std::move(system)), values_(std::move(values)) {
  if (values_.size() != system_.lower_count() && values_.size() != system_.member_count()) {
    throw Error(ErrorCode::kMissingValue,
                "set function has " + std::to_string(values_.size()) +
                    " values; expected " + std::to_string(system_.lower_count()) +
                    " (lower layer) or " + std::to_string(system_.member_count()) +
                    " (all members)");
  }
}

FunctionDomain SetFunction::domain() const noexcept {
  return values_.size() == system_.lower_count() ? FunctionDomain::kLower
                                                 : FunctionDomain::kFull;
}

bool SetFunction::is_defined_at(Mask mask) const noexcept {
  const auto index = system_.family().index_of(mask);
  return index && *index < values_.size();
}

const Rational& SetFunction::at(Mask mask) const {
  const auto index = system_.family().index_of(mask);
  if (!index || *index >= values_.size()) {
    throw Error(ErrorCode::kNotInDomain,
                "set function is not defined at " + system_.ground().format(mask));
  }
  return values_[*index];
}

const Rational& SetFunction::at(const Subset& x) const {
  if (x.width() != system_.ground().size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "subset built over a ground set of different size");
  }
  return at(x.mask());
}

LinkageFunction::LinkageFunction(GroundSet ground, Rational fill)
    : ground_(std::move(ground)), table_(ground_.subset_count() * ground_.size(), fill) {}

const Rational& LinkageFunction::at(std::size_t x, const Subset& set) const {
  if (set.width() != ground_.size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "subset built over a ground set of different size");
  }
  if (x >= ground_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  }
  return (*this)(x, set.mask());
}

void LinkageFunction::set(std::size_t x, Mask mask, Rational value) {
  if (x >= ground_.size() || (mask & ~ground_.full_mask()) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "linkage entry outside E × 2^E");
  }
  table_[mask * ground_.size() + x] = value;
}

}  // namespace antimatroid
