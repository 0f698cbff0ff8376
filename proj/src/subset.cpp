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

#include "antimatroid/subset.hpp"

#include <unordered_set>

#include "antimatroid/error.hpp"

namespace antimatroid {

Subset::Subset(Mask mask, std::size_t width)
    : mask_(mask), width_(static_cast<std::uint8_t>(width)) {
  if (width > GroundSet::kMaxSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset width " + std::to_string(width) + " exceeds 16");
  }
  if ((mask >> width) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset mask has bits outside the ground set");
  }
}

Subset Subset::full(std::size_t width) {
  return Subset((Mask{1} << width) - 1, width);
}

Subset Subset::with(std::size_t element) const {
  if (element >= width_) {
    throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  }
  return Subset(mask_ | (Mask{1} << element), width_);
}

Subset Subset::without(std::size_t element) const {
  if (element >= width_) {
    throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  }
  return Subset(mask_ & ~(Mask{1} << element), width_);
}

void Subset::require_same_width(const Subset& other) const {
  if (width_ != other.width_) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "subsets built over ground sets of different size");
  }
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_width(other);
  return is_subset(mask_, other.mask_);
}

Subset Subset::operator|(const Subset& other) const {
  require_same_width(other);
  return Subset(mask_ | other.mask_, width_);
}

Subset Subset::operator&(const Subset& other) const {
  require_same_width(other);
  return Subset(mask_ & other.mask_, width_);
}

Subset Subset::operator-(const Subset& other) const {
  require_same_width(other);
  return Subset(mask_ & ~other.mask_, width_);
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (Mask m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > kMaxSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground set must have between 1 and 16 elements, got " +
                    std::to_string(labels_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ground element " + std::to_string(i) + " has an empty label");
    }
    if (!seen.insert(labels_[i]).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate ground label \"" + labels_[i] + "\"");
    }
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Subset GroundSet::subset_of(std::span<const std::string> labels) const {
  Mask mask = 0;
  for (const auto& label : labels) {
    const auto index = index_of(label);
    if (!index) {
      throw Error(ErrorCode::kInvalidArgument, "unknown element \"" + label + "\"");
    }
    const Mask bit = Mask{1} << *index;
    if (mask & bit) {
      throw Error(ErrorCode::kInvalidArgument, "element \"" + label + "\" repeated");
    }
    mask |= bit;
  }
  return Subset(mask, size());
}

Subset GroundSet::subset_of(std::initializer_list<std::string_view> labels) const {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return subset_of(std::span<const std::string>(owned));
}

std::vector<std::string> GroundSet::labels_of(Mask mask) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if ((mask >> i) & 1u) out.push_back(labels_[i]);
  }
  return out;
}

std::string GroundSet::format(Mask mask) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels_of(mask)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace antimatroid
