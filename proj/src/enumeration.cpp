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

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "antimatroid/error.hpp"
#include "antimatroid/theorem_lab.hpp"

namespace antimatroid {

std::string_view family_class_name(FamilyClass c) noexcept {
  switch (c) {
    case FamilyClass::kAllFamilies: return "all-families";
    case FamilyClass::kAccessible: return "accessible";
    case FamilyClass::kContinuable: return "accessible-with-nonempty-continuations";
    case FamilyClass::kAntimatroid: return "antimatroid";
    case FamilyClass::kAccessibleNonTruncated:
      return "accessible-non-antimatroid-with-nonempty-continuations";
  }
  return "unknown";
}

std::optional<FamilyClass> parse_family_class(std::string_view name) noexcept {
  for (auto c : {FamilyClass::kAllFamilies, FamilyClass::kAccessible, FamilyClass::kContinuable,
                 FamilyClass::kAntimatroid, FamilyClass::kAccessibleNonTruncated}) {
    if (family_class_name(c) == name) return c;
  }
  if (name == "all") return FamilyClass::kAllFamilies;
  if (name == "continuable" || name == "accessible-with-nonempty-Γ") {
    return FamilyClass::kContinuable;
  }
  if (name == "non-truncated" || name == "accessible-non-antimatroid" ||
      name == "accessible-non-antimatroid-with-nonempty-Γ") {
    return FamilyClass::kAccessibleNonTruncated;
  }
  return std::nullopt;
}

void check_guardrails(const EnumerationSpec& spec) {
  const std::size_t limit = spec.family_class == FamilyClass::kAntimatroid ? 5 : 4;
  if (spec.n < 1 || spec.n > limit) {
    throw Error(ErrorCode::kGuardrailExceeded,
                "n = " + std::to_string(spec.n) + " outside [1, " + std::to_string(limit) +
                    "] for class " + std::string(family_class_name(spec.family_class)));
  }
  if (spec.k && (*spec.k < 0 || static_cast<std::size_t>(*spec.k) > spec.n)) {
    throw Error(ErrorCode::kGuardrailExceeded,
                "k = " + std::to_string(*spec.k) + " outside [0, n]");
  }
}

namespace {

// Non-empty subsets of E in canonical order; bit j of a family code marks
// subsets[j] as a member. ∅ is always a member.
std::vector<Mask> canonical_nonempty_subsets(std::size_t n) {
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) out.push_back(m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SetFamily family_from_code(const GroundSet& ground, const std::vector<Mask>& subsets,
                           std::uint64_t code) {
  std::vector<Mask> masks{0};
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    if ((code >> j) & 1u) masks.push_back(subsets[j]);
  }
  return SetFamily::from_masks(ground, masks);
}

// Depth-first construction deciding subsets in canonical order. When a
// subset is decided every smaller one already is, so accessibility and
// union-closure can be enforced locally.
class Builder {
 public:
  Builder(std::size_t n, bool union_closed)
      : subsets_(canonical_nonempty_subsets(n)),
        included_(std::size_t{1} << n, 0),
        union_closed_(union_closed) {
    included_[0] = 1;
  }

  std::vector<std::uint64_t> run() {
    codes_.clear();
    descend(0, 0);
    std::sort(codes_.begin(), codes_.end());
    return codes_;
  }

 private:
  void descend(std::size_t j, std::uint64_t code) {
    if (j == subsets_.size()) {
      codes_.push_back(code);
      return;
    }
    const Mask x = subsets_[j];
    bool reachable = false;
    for (Mask rest = x; rest != 0 && !reachable; rest &= rest - 1) {
      reachable = included_[x & ~(rest & -rest)] != 0;
    }
    bool forced = false;
    if (union_closed_) {
      // Included proper subsets are closed under union, so X is a union of
      // two of them exactly when their overall union is X.
      Mask joined = 0;
      for (Mask sub = (x - 1) & x; sub != 0; sub = (sub - 1) & x) {
        if (included_[sub]) joined |= sub;
      }
      forced = joined == x;
    }
    if (!forced) descend(j + 1, code);
    if (reachable) {
      included_[x] = 1;
      descend(j + 1, code | (std::uint64_t{1} << j));
      included_[x] = 0;
    }
  }

  std::vector<Mask> subsets_;
  std::vector<char> included_;
  bool union_closed_;
  std::vector<std::uint64_t> codes_;
};

bool has_nonempty_continuations(const SetFamily& family) {
  const int k = family.rank();
  if (k < 1) return false;
  const Mask full = family.ground().full_mask();
  const auto lower = family.masks().first(family.count_up_to_size(k - 1));
  for (Mask x : lower) {
    bool any = false;
    for (Mask outside = full & ~x; outside != 0 && !any; outside &= outside - 1) {
      any = family.contains(x | (outside & -outside));
    }
    if (!any) return false;
  }
  return true;
}

bool in_class(const SetFamily& family, FamilyClass c) {
  switch (c) {
    case FamilyClass::kAllFamilies:
      return true;
    case FamilyClass::kAccessible:
      return family.is_accessible();
    case FamilyClass::kAntimatroid:
      return family.is_antimatroid();
    case FamilyClass::kContinuable:
      return family.is_accessible() && has_nonempty_continuations(family);
    case FamilyClass::kAccessibleNonTruncated:
      return family.is_accessible() && has_nonempty_continuations(family) &&
             !family.has_truncated_interval_property(family.rank());
  }
  return false;
}

}  // namespace

std::size_t enumerate_families(const EnumerationSpec& spec,
                               const std::function<void(const SetFamily&)>& visit) {
  check_guardrails(spec);
  const GroundSet ground = GroundSet::numbered(spec.n);
  const auto subsets = canonical_nonempty_subsets(spec.n);
  std::size_t count = 0;
  auto emit = [&](std::uint64_t code) {
    SetFamily family = family_from_code(ground, subsets, code);
    if (spec.k && family.rank() != *spec.k) return;
    if (!in_class(family, spec.family_class)) return;
    ++count;
    visit(family);
  };
  if (spec.family_class == FamilyClass::kAllFamilies) {
    const std::uint64_t codes = std::uint64_t{1} << subsets.size();
    for (std::uint64_t code = 0; code < codes; ++code) emit(code);
    return count;
  }
  const bool union_closed = spec.family_class == FamilyClass::kAntimatroid;
  for (std::uint64_t code : Builder(spec.n, union_closed).run()) emit(code);
  return count;
}

std::vector<SetFamily> collect_families(const EnumerationSpec& spec) {
  std::vector<SetFamily> out;
  enumerate_families(spec, [&out](const SetFamily& f) { out.push_back(f); });
  return out;
}

std::vector<SetFamily> antimatroids_by_axioms(std::size_t n) {
  check_guardrails({n, FamilyClass::kAllFamilies, std::nullopt});
  const GroundSet ground = GroundSet::numbered(n);
  const auto subsets = canonical_nonempty_subsets(n);
  std::vector<SetFamily> out;
  const std::uint64_t codes = std::uint64_t{1} << subsets.size();
  for (std::uint64_t code = 0; code < codes; ++code) {
    SetFamily family = family_from_code(ground, subsets, code);
    if (family.is_accessible() && family.satisfies_exchange()) out.push_back(std::move(family));
  }
  return out;
}

Prng::Prng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Prng::next() { return engine_(); }

std::uint64_t Prng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::int64_t Prng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return lo + static_cast<std::int64_t>(below(span));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) noexcept {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(seed);
  for (std::uint64_t v : {a, b, c}) h = mix(h ^ mix(v));
  return h;
}

FunctionEnumeration enumerate_set_functions(const RankedSystem& system,
                                            std::span<const Rational> codomain,
                                            std::uint64_t seed,
                                            const std::function<void(const SetFunction&)>& visit,
                                            std::uint64_t cap) {
  if (codomain.empty()) throw Error(ErrorCode::kInvalidArgument, "empty codomain");
  if (cap == 0) throw Error(ErrorCode::kInvalidArgument, "function cap must be positive");
  const std::size_t m = system.lower_count();
  const std::uint64_t base = codomain.size();

  FunctionEnumeration result;
  bool saturated = false;
  result.total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (result.total > std::numeric_limits<std::uint64_t>::max() / base) {
      saturated = true;
      result.total = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    result.total *= base;
  }

  std::vector<Rational> values(m);
  auto emit_index = [&](std::uint64_t index) {
    for (std::size_t i = 0; i < m; ++i) {
      values[i] = codomain[index % base];
      index /= base;
    }
    visit(SetFunction(system, values));
    ++result.visited;
  };

  if (!saturated && result.total <= cap) {
    for (std::uint64_t index = 0; index < result.total; ++index) emit_index(index);
    return result;
  }
  result.subsampled = true;
  Prng rng(seed);
  if (saturated) {
    for (std::uint64_t j = 0; j < cap; ++j) {
      for (std::size_t i = 0; i < m; ++i) values[i] = codomain[rng.below(base)];
      visit(SetFunction(system, values));
      ++result.visited;
    }
    return result;
  }
  const std::uint64_t offset = rng.below(result.total / cap);
  for (std::uint64_t j = 0; j < cap; ++j) {
    const auto step = static_cast<unsigned __int128>(j) * result.total / cap;
    emit_index(offset + static_cast<std::uint64_t>(step));
  }
  return result;
}

LinkageFunction random_monotone_linkage(const GroundSet& ground, std::uint64_t seed,
                                        std::int64_t lo, std::int64_t hi) {
  Prng rng(seed);
  const std::size_t n = ground.size();
  const std::size_t subsets = ground.subset_count();
  std::vector<std::int64_t> table(subsets * n);
  for (auto& v : table) v = rng.uniform(lo, hi);
  // Supersets have larger masks, so a descending sweep sees them first.
  for (std::size_t s = subsets; s-- > 0;) {
    const auto mask = static_cast<Mask>(s);
    for (Mask outside = ground.full_mask() & ~mask; outside != 0; outside &= outside - 1) {
      const Mask larger = mask | (outside & -outside);
      for (std::size_t x = 0; x < n; ++x) {
        table[mask * n + x] = std::max(table[mask * n + x], table[larger * n + x]);
      }
    }
  }
  return LinkageFunction::generate(ground,
                                   [&](std::size_t x, Mask m) { return table[m * n + x]; });
}

CounterexampleLinkage counterexample_linkage(const SetFamily& family, int k) {
  if (!family.is_accessible()) {
    throw Error(ErrorCode::kInvalidArgument, "counterexample construction needs an accessible family");
  }
  if (k != family.rank()) {
    throw Error(ErrorCode::kInvalidTruncationLevel,
                "k = " + std::to_string(k) + " differs from the rank " +
                    std::to_string(family.rank()));
  }
  const RankedSystem system(family);  // validates non-empty continuations
  const auto violation = family.find_truncated_interval_violation(k);
  if (!violation) {
    throw Error(ErrorCode::kNoViolation,
                "the system satisfies the k-truncated interval property");
  }
  const Mask a_set = violation->lower.mask();
  const std::size_t a = violation->element;
  const Mask a_bit = Mask{1} << a;
  const Mask full = family.ground().full_mask();
  auto pi = LinkageFunction::generate(family.ground(), [&](std::size_t x, Mask m) {
    if ((m >> x) & 1u) return 0;
    if (x == a && is_subset(a_set, m) && is_subset(m, full & ~a_bit)) return 1;
    return 2;
  });
  return CounterexampleLinkage{std::move(pi), violation->lower, violation->upper, a};
}

}  // namespace antimatroid
