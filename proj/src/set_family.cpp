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

#include "antimatroid/set_family.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>

#include "antimatroid/error.hpp"

namespace antimatroid {

namespace {

enum : std::int8_t { kUnknown = -1, kFalse = 0, kTrue = 1 };

// Lazily evaluated predicate slot. Evaluation is idempotent, so racing
// writers store the same value.
class CachedFlag {
 public:
  template <typename Fn>
  bool get(Fn&& evaluate) const {
    std::int8_t v = value_.load(std::memory_order_acquire);
    if (v == kUnknown) {
      v = evaluate() ? kTrue : kFalse;
      value_.store(v, std::memory_order_release);
    }
    return v == kTrue;
  }

 private:
  mutable std::atomic<std::int8_t> value_{kUnknown};
};

}  // namespace

struct SetFamily::Data {
  GroundSet ground;
  std::vector<Mask> masks;
  std::vector<std::int32_t> index;   // mask -> position or -1
  std::vector<std::size_t> prefix;   // prefix[s] = #members of size < s
  CachedFlag accessible;
  CachedFlag exchange;
  CachedFlag union_closed;
  CachedFlag interval;

  Data(GroundSet g, std::vector<Mask> m) : ground(std::move(g)), masks(std::move(m)) {
    std::sort(masks.begin(), masks.end(), canonical_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    index.assign(ground.subset_count(), -1);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      index[masks[i]] = static_cast<std::int32_t>(i);
    }
    const std::size_t n = ground.size();
    prefix.assign(n + 2, 0);
    for (std::size_t s = 0; s <= n + 1; ++s) {
      prefix[s] = static_cast<std::size_t>(
          std::count_if(masks.begin(), masks.end(),
                        [s](Mask m) { return static_cast<std::size_t>(popcount(m)) < s; }));
    }
  }

  bool has(Mask m) const noexcept { return m < index.size() && index[m] >= 0; }
};

SetFamily::SetFamily(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

SetFamily::SetFamily(GroundSet ground, std::span<const Subset> members) {
  if (members.empty()) {
    throw Error(ErrorCode::kEmptyFamily, "a set system needs at least one feasible set");
  }
  std::vector<Mask> masks;
  masks.reserve(members.size());
  for (const auto& s : members) {
    if (s.width() != ground.size()) {
      throw Error(ErrorCode::kGroundSetMismatch,
                  "member built over a ground set of different size");
    }
    masks.push_back(s.mask());
  }
  data_ = std::make_shared<const Data>(std::move(ground), std::move(masks));
}

SetFamily SetFamily::from_masks(GroundSet ground, std::span<const Mask> masks) {
  if (masks.empty()) {
    throw Error(ErrorCode::kEmptyFamily, "a set system needs at least one feasible set");
  }
  for (Mask m : masks) {
    if ((m & ~ground.full_mask()) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "member mask has bits outside the ground set");
    }
  }
  return SetFamily(std::make_shared<const Data>(
      std::move(ground), std::vector<Mask>(masks.begin(), masks.end())));
}

SetFamily SetFamily::power_set(GroundSet ground) {
  std::vector<Mask> masks(ground.subset_count());
  for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = static_cast<Mask>(m);
  return SetFamily(std::make_shared<const Data>(std::move(ground), std::move(masks)));
}

const GroundSet& SetFamily::ground() const noexcept { return data_->ground; }
std::size_t SetFamily::size() const noexcept { return data_->masks.size(); }
std::span<const Mask> SetFamily::masks() const noexcept { return data_->masks; }

Subset SetFamily::member(std::size_t index) const {
  return Subset(data_->masks.at(index), data_->ground.size());
}

std::vector<Subset> SetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(size());
  for (Mask m : data_->masks) out.emplace_back(m, data_->ground.size());
  return out;
}

bool SetFamily::contains(Mask mask) const noexcept { return data_->has(mask); }

bool SetFamily::contains(const Subset& x) const {
  require_width(x);
  return data_->has(x.mask());
}

std::optional<std::size_t> SetFamily::index_of(Mask mask) const noexcept {
  if (!data_->has(mask)) return std::nullopt;
  return static_cast<std::size_t>(data_->index[mask]);
}

std::size_t SetFamily::count_up_to_size(int size) const noexcept {
  if (size < 0) return 0;
  const auto s = static_cast<std::size_t>(size) + 1;
  return s >= data_->prefix.size() ? data_->masks.size() : data_->prefix[s];
}

void SetFamily::require_width(const Subset& x) const {
  if (x.width() != data_->ground.size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "subset built over a ground set of different size");
  }
}

bool SetFamily::is_accessible() const {
  return data_->accessible.get([this] {
    for (Mask x : data_->masks) {
      if (x == 0) continue;
      bool ok = false;
      for (Mask rest = x; rest != 0 && !ok; rest &= rest - 1) {
        ok = data_->has(x & ~(rest & -rest));
      }
      if (!ok) return false;
    }
    return true;
  });
}

std::optional<ExchangeViolation> SetFamily::find_exchange_violation() const {
  const auto n = data_->ground.size();
  for (Mask x : data_->masks) {
    for (Mask y : data_->masks) {
      if (is_subset(x, y)) continue;
      bool ok = false;
      for (Mask diff = x & ~y; diff != 0 && !ok; diff &= diff - 1) {
        ok = data_->has(y | (diff & -diff));
      }
      if (!ok) return ExchangeViolation{Subset(x, n), Subset(y, n)};
    }
  }
  return std::nullopt;
}

bool SetFamily::satisfies_exchange() const {
  return data_->exchange.get([this] { return !find_exchange_violation().has_value(); });
}

bool SetFamily::is_union_closed() const {
  return data_->union_closed.get([this] {
    const auto& masks = data_->masks;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        if (!data_->has(masks[i] | masks[j])) return false;
      }
    }
    return true;
  });
}

namespace {

std::optional<IntervalViolation> scan_interval(const GroundSet& ground,
                                               std::span<const Mask> candidates,
                                               const std::vector<std::int32_t>& index) {
  const auto n = ground.size();
  const Mask full = ground.full_mask();
  auto has = [&index](Mask m) { return index[m] >= 0; };
  for (Mask y : candidates) {
    for (Mask x : candidates) {
      if (!is_subset(x, y) || x == y) continue;
      for (Mask outside = full & ~y; outside != 0; outside &= outside - 1) {
        const Mask bit = outside & -outside;
        if (has(x | bit) && !has(y | bit)) {
          return IntervalViolation{Subset(x, n), Subset(y, n),
                                   static_cast<std::size_t>(std::countr_zero(bit))};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntervalViolation> SetFamily::find_interval_violation() const {
  return scan_interval(data_->ground, data_->masks, data_->index);
}

bool SetFamily::has_interval_property() const {
  return data_->interval.get([this] { return !find_interval_violation().has_value(); });
}

std::optional<IntervalViolation> SetFamily::find_truncated_interval_violation(int k) const {
  if (k < 1 || k > rank()) {
    throw Error(ErrorCode::kInvalidTruncationLevel,
                "truncation level " + std::to_string(k) + " outside [1, " +
                    std::to_string(rank()) + "]");
  }
  const auto lower = masks().first(count_up_to_size(k - 1));
  return scan_interval(data_->ground, lower, data_->index);
}

bool SetFamily::has_truncated_interval_property(int k) const {
  return !find_truncated_interval_violation(k).has_value();
}

bool SetFamily::is_antimatroid() const {
  if (!is_accessible()) return false;
  const bool exchange = satisfies_exchange();
  const bool union_closed = is_union_closed();
  const bool interval = has_interval_property();
  if (exchange != union_closed || exchange != interval) {
    throw Error(ErrorCode::kConsistencyViolation,
                "antimatroid characterizations disagree on an accessible family "
                "(exchange=" + std::to_string(exchange) +
                    ", union-closed=" + std::to_string(union_closed) +
                    ", interval=" + std::to_string(interval) + ")");
  }
  return exchange;
}

int SetFamily::rank() const noexcept { return popcount(data_->masks.back()); }

int SetFamily::rank(const Subset& x) const {
  require_width(x);
  const auto& masks = data_->masks;
  for (auto it = masks.rbegin(); it != masks.rend(); ++it) {
    if (is_subset(*it, x.mask())) return popcount(*it);
  }
  throw Error(ErrorCode::kNoFeasibleSubset,
              "no feasible subset of " + data_->ground.format(x.mask()));
}

SetFamily SetFamily::truncate(int k) const {
  if (k < 1 || k > rank()) {
    throw Error(ErrorCode::kInvalidTruncationLevel,
                "truncation level " + std::to_string(k) + " outside [1, " +
                    std::to_string(rank()) + "]");
  }
  const auto kept = masks().first(count_up_to_size(k));
  return from_masks(data_->ground, kept);
}

Subset SetFamily::continuations(const Subset& x) const {
  require_width(x);
  if (!data_->has(x.mask())) {
    throw Error(ErrorCode::kNotFeasible,
                data_->ground.format(x.mask()) + " is not a feasible set");
  }
  Mask gamma = 0;
  for (Mask outside = data_->ground.full_mask() & ~x.mask(); outside != 0;
       outside &= outside - 1) {
    const Mask bit = outside & -outside;
    if (data_->has(x.mask() | bit)) gamma |= bit;
  }
  return Subset(gamma, data_->ground.size());
}

void SetFamily::require_union_closed_accessible() const {
  if (!is_accessible() || !is_union_closed()) {
    throw Error(ErrorCode::kNotUnionClosed,
                "unique basis requires an accessible union-closed family");
  }
}

Subset SetFamily::basis(const Subset& x) const {
  require_width(x);
  require_union_closed_accessible();
  Mask joined = 0;
  for (Mask m : data_->masks) {
    if (is_subset(m, x.mask())) joined |= m;
  }
  return Subset(joined, data_->ground.size());
}

std::vector<Subset> SetFamily::maximal_feasible_subsets(const Subset& x) const {
  require_width(x);
  std::vector<Mask> inside;
  for (Mask m : data_->masks) {
    if (is_subset(m, x.mask())) inside.push_back(m);
  }
  std::vector<Subset> out;
  for (Mask m : inside) {
    const bool dominated = std::any_of(inside.begin(), inside.end(), [m](Mask o) {
      return o != m && is_subset(m, o);
    });
    if (!dominated) out.emplace_back(m, data_->ground.size());
  }
  return out;
}

Subset SetFamily::meet(const Subset& x, const Subset& y) const {
  require_width(x);
  require_width(y);
  require_union_closed_accessible();
  for (const auto* s : {&x, &y}) {
    if (!data_->has(s->mask())) {
      throw Error(ErrorCode::kNotFeasible,
                  data_->ground.format(s->mask()) + " is not a feasible set");
    }
  }
  return basis(x & y);
}

bool operator==(const SetFamily& a, const SetFamily& b) {
  return a.data_ == b.data_ ||
         (a.ground() == b.ground() && a.data_->masks == b.data_->masks);
}

}  // namespace antimatroid
