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

#ifndef ANTIMATROID_SUBSET_HPP_
#define ANTIMATROID_SUBSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antimatroid {

// Bit i of a mask stands for the i-th declared element of the ground set.
using Mask = std::uint32_t;

inline int popcount(Mask m) noexcept { return std::popcount(m); }

inline bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

// Canonical order on subsets: by cardinality, then by numeric mask.
inline bool canonical_less(Mask a, Mask b) noexcept {
  const int ca = popcount(a);
  const int cb = popcount(b);
  return ca != cb ? ca < cb : a < b;
}

class Subset {
 public:
  Subset() = default;
  // Throws kInvalidArgument if a bit at or above `width` is set.
  Subset(Mask mask, std::size_t width);

  static Subset empty(std::size_t width) { return Subset(0, width); }
  static Subset full(std::size_t width);

  Mask mask() const noexcept { return mask_; }
  std::size_t width() const noexcept { return width_; }
  int size() const noexcept { return popcount(mask_); }
  bool is_empty() const noexcept { return mask_ == 0; }

  bool contains(std::size_t element) const noexcept {
    return element < width_ && ((mask_ >> element) & 1u) != 0;
  }
  Subset with(std::size_t element) const;
  Subset without(std::size_t element) const;

  // The binary operations require both operands to share a width.
  bool is_subset_of(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  Subset operator-(const Subset& other) const;

  std::vector<std::size_t> elements() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  void require_same_width(const Subset& other) const;

  Mask mask_ = 0;
  std::uint8_t width_ = 0;
};

// Strict weak order matching canonical_less on masks.
struct CanonicalOrder {
  bool operator()(const Subset& a, const Subset& b) const noexcept {
    return canonical_less(a.mask(), b.mask());
  }
};

class GroundSet {
 public:
  static constexpr std::size_t kMaxSize = 16;

  // Labels must be unique and non-empty; 1 <= count <= kMaxSize.
  explicit GroundSet(std::vector<std::string> labels);

  // Ground set labelled "1", "2", ..., "n".
  static GroundSet numbered(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Mask full_mask() const noexcept { return (Mask{1} << size()) - 1; }
  std::size_t subset_count() const noexcept { return std::size_t{1} << size(); }

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::full(size()); }
  Subset subset(Mask mask) const { return Subset(mask, size()); }
  // Throws kInvalidArgument on unknown or repeated labels.
  Subset subset_of(std::span<const std::string> labels) const;
  Subset subset_of(std::initializer_list<std::string_view> labels) const;

  std::vector<std::string> labels_of(Mask mask) const;
  // "{1,2}" style rendering in element order.
  std::string format(Mask mask) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace antimatroid

#endif  // ANTIMATROID_SUBSET_HPP_
