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

#ifndef ANTIMATROID_TABLES_HPP_
#define ANTIMATROID_TABLES_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "antimatroid/rational.hpp"
#include "antimatroid/ranked_system.hpp"

namespace antimatroid {

// Where a set function carries values: the lower layer 𝓕_{k−1}, or every
// member of the system (after extension to the size-k sets).
enum class FunctionDomain { kLower, kFull };

// Exact-valued table F over feasible sets. values()[i] belongs to the i-th
// member in canonical order; lookups of non-members are errors.
class SetFunction {
 public:
  // values.size() must equal system.lower_count() or system.member_count();
  // anything else throws kMissingValue.
  SetFunction(RankedSystem system, std::vector<Rational> values);

  template <typename Fn>
  static SetFunction from(RankedSystem system, Fn&& fn,
                          FunctionDomain domain = FunctionDomain::kLower) {
    const std::size_t count =
        domain == FunctionDomain::kLower ? system.lower_count() : system.member_count();
    std::vector<Rational> values;
    values.reserve(count);
    const auto masks = system.family().masks();
    for (std::size_t i = 0; i < count; ++i) values.push_back(Rational(fn(masks[i])));
    return SetFunction(std::move(system), std::move(values));
  }

  const RankedSystem& system() const noexcept { return system_; }
  FunctionDomain domain() const noexcept;
  std::size_t domain_size() const noexcept { return values_.size(); }
  std::span<const Rational> values() const noexcept { return values_; }

  bool is_defined_at(Mask mask) const noexcept;
  // kNotInDomain for infeasible sets and for size-k sets of a lower function.
  const Rational& at(Mask mask) const;
  const Rational& at(const Subset& x) const;

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  RankedSystem system_;
  std::vector<Rational> values_;
};

// Total table π : E × 2^E → Q, including pairs with x ∈ X.
class LinkageFunction {
 public:
  explicit LinkageFunction(GroundSet ground, Rational fill = Rational(0));

  template <typename Fn>
  static LinkageFunction generate(GroundSet ground, Fn&& fn) {
    LinkageFunction pi(std::move(ground));
    const std::size_t n = pi.ground().size();
    for (Mask m = 0; m < pi.ground().subset_count(); ++m) {
      for (std::size_t x = 0; x < n; ++x) pi.table_[m * n + x] = Rational(fn(x, m));
    }
    return pi;
  }

  const GroundSet& ground() const noexcept { return ground_; }

  // Unchecked lookup for hot loops.
  const Rational& operator()(std::size_t x, Mask mask) const noexcept {
    return table_[mask * ground_.size() + x];
  }
  const Rational& at(std::size_t x, const Subset& set) const;
  void set(std::size_t x, Mask mask, Rational value);

  // Row-major by mask, then element.
  std::span<const Rational> table() const noexcept { return table_; }

  friend bool operator==(const LinkageFunction&, const LinkageFunction&) = default;

 private:
  GroundSet ground_;
  std::vector<Rational> table_;
};

}  // namespace antimatroid

#endif  // ANTIMATROID_TABLES_HPP_
