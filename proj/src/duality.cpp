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

#include "antimatroid/duality.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "antimatroid/error.hpp"

namespace antimatroid {

namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kGroundSetMismatch, "linkage and system use different ground sets");
  }
}

std::size_t domain_count(const RankedSystem& system, FunctionDomain domain) {
  return domain == FunctionDomain::kLower ? system.lower_count() : system.member_count();
}

}  // namespace

QuasiConcavityChecker::QuasiConcavityChecker(const RankedSystem& system, FunctionDomain domain)
    : ground_(system.ground()),
      masks_(system.family().masks().begin(), system.family().masks().end()),
      domain_size_(domain_count(system, domain)) {
  std::vector<std::uint32_t> inside;
  for (std::size_t i = 0; i < domain_size_; ++i) {
    for (std::size_t j = i + 1; j < domain_size_; ++j) {
      const Mask common = masks_[i] & masks_[j];
      inside.clear();
      // Members inside X ∩ Y are no larger than X, hence inside the domain.
      for (std::size_t t = 0; t < domain_size_; ++t) {
        if (is_subset(masks_[t], common)) inside.push_back(static_cast<std::uint32_t>(t));
      }
      for (std::uint32_t z : inside) {
        const bool dominated = std::any_of(inside.begin(), inside.end(), [&](std::uint32_t o) {
          return o != z && is_subset(masks_[z], masks_[o]);
        });
        if (!dominated) {
          triples_.push_back(Triple{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), z});
        }
      }
    }
  }
}

std::optional<QuasiConcavityViolation> QuasiConcavityChecker::find_violation(
    std::span<const Rational> values) const {
  if (values.size() < domain_size_) {
    throw Error(ErrorCode::kMissingValue, "set function does not cover the checked domain");
  }
  const auto n = ground_.size();
  for (const auto& t : triples_) {
    if (values[t.z] < std::min(values[t.x], values[t.y])) {
      return QuasiConcavityViolation{Subset(masks_[t.x], n), Subset(masks_[t.y], n),
                                     Subset(masks_[t.z], n)};
    }
  }
  return std::nullopt;
}

bool QuasiConcavityChecker::holds(std::span<const Rational> values) const {
  if (values.size() < domain_size_) {
    throw Error(ErrorCode::kMissingValue, "set function does not cover the checked domain");
  }
  for (const auto& t : triples_) {
    if (values[t.z] < std::min(values[t.x], values[t.y])) return false;
  }
  return true;
}

std::optional<QuasiConcavityViolation> find_quasi_concavity_violation(const SetFunction& f) {
  return QuasiConcavityChecker(f.system(), f.domain()).find_violation(f.values());
}

bool is_quasi_concave(const SetFunction& f) {
  return !find_quasi_concavity_violation(f).has_value();
}

std::optional<MonotonicityViolation> find_monotonicity_violation(const LinkageFunction& pi) {
  const auto n = pi.ground().size();
  const Mask full = pi.ground().full_mask();
  for (Mask m = 0; m <= full; ++m) {
    for (Mask outside = full & ~m; outside != 0; outside &= outside - 1) {
      const Mask larger = m | (outside & -outside);
      for (std::size_t x = 0; x < n; ++x) {
        if (pi(x, m) < pi(x, larger)) {
          return MonotonicityViolation{x, Subset(m, n), Subset(larger, n)};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_monotone(const LinkageFunction& pi) {
  return !find_monotonicity_violation(pi).has_value();
}

namespace {

// Minimum of π over Γ(X) for each lower member, with the attaining element.
void extract_into(const LinkageFunction& pi, const RankedSystem& system,
                  std::vector<Rational>& values, std::vector<std::size_t>* witnesses) {
  require_same_ground(pi.ground(), system.ground());
  const auto masks = system.lower_masks();
  values.resize(masks.size());
  if (witnesses) witnesses->resize(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    Mask gamma = system.continuations(i);
    if (gamma == 0) {
      throw Error(ErrorCode::kEmptyContinuationSet,
                  system.ground().format(masks[i]) + " has no feasible continuation");
    }
    auto best_x = static_cast<std::size_t>(std::countr_zero(gamma));
    const Rational* best = &pi(best_x, masks[i]);
    for (gamma &= gamma - 1; gamma != 0; gamma &= gamma - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(gamma));
      const Rational& v = pi(x, masks[i]);
      if (v < *best) {
        best = &v;
        best_x = x;
      }
    }
    values[i] = *best;
    if (witnesses) (*witnesses)[i] = best_x;
  }
}

}  // namespace

SetFunction extract_set_function(const LinkageFunction& pi, const RankedSystem& system) {
  std::vector<Rational> values;
  extract_into(pi, system, values, nullptr);
  return SetFunction(system, std::move(values));
}

std::optional<RepresentationCertificate> certify_representation(const LinkageFunction& pi,
                                                                const SetFunction& f) {
  std::vector<Rational> values;
  std::vector<std::size_t> witnesses;
  extract_into(pi, f.system(), values, &witnesses);
  if (!std::equal(values.begin(), values.end(), f.values().begin())) return std::nullopt;
  return RepresentationCertificate{f, pi, std::move(witnesses)};
}

bool represents(const LinkageFunction& pi, const SetFunction& f) {
  std::vector<Rational> values;
  extract_into(pi, f.system(), values, nullptr);
  return std::equal(values.begin(), values.end(), f.values().begin());
}

SetFunction extend_to_maximal(const SetFunction& f, const LinkageFunction& pi) {
  if (!represents(pi, f)) {
    throw Error(ErrorCode::kNotARepresentation,
                "extension needs F to be the extraction of the given linkage");
  }
  const auto& system = f.system();
  const auto masks = system.family().masks();
  const std::size_t lower = system.lower_count();
  if (lower == 0) {
    throw Error(ErrorCode::kEmptyFamily, "the lower layer of the system is empty");
  }
  std::vector<Rational> values(f.values().begin(), f.values().begin() + lower);
  const Rational lower_min = *std::min_element(values.begin(), values.end());
  const Mask full = system.ground().full_mask();
  for (std::size_t i = lower; i < masks.size(); ++i) {
    const Mask outside = full & ~masks[i];
    if (outside == 0) {
      values.push_back(lower_min);
      continue;
    }
    Rational best = pi(static_cast<std::size_t>(std::countr_zero(outside)), masks[i]);
    for (Mask rest = outside & (outside - 1); rest != 0; rest &= rest - 1) {
      best = std::min(best, pi(static_cast<std::size_t>(std::countr_zero(rest)), masks[i]));
    }
    values.push_back(best);
  }
  return SetFunction(system, std::move(values));
}

LinkageFunction build_canonical_linkage(const SetFunction& f) {
  const auto& system = f.system();
  const auto& ground = system.ground();
  const std::size_t lower = system.lower_count();
  if (lower == 0) {
    throw Error(ErrorCode::kEmptyFamily, "the lower layer of the system is empty");
  }
  const auto lower_values = f.values().first(lower);
  const Rational lower_min = *std::min_element(lower_values.begin(), lower_values.end());

  const std::size_t n = ground.size();
  const std::size_t subsets = ground.subset_count();
  // value_index[mask] = position of mask in 𝓕_{k−1}, or -1.
  std::vector<std::int32_t> value_index(subsets, -1);
  const auto masks = system.lower_masks();
  for (std::size_t i = 0; i < lower; ++i) value_index[masks[i]] = static_cast<std::int32_t>(i);

  // best[X * n + x] = index of the max of F over lower members A ⊇ X with
  // x ∉ A, or -1 when there is none.
  std::vector<std::int32_t> best(subsets * n, -1);
  for (std::size_t s = subsets; s-- > 0;) {
    const auto mask = static_cast<Mask>(s);
    for (std::size_t x = 0; x < n; ++x) {
      const Mask bit_x = Mask{1} << x;
      if (mask & bit_x) continue;
      std::int32_t b = value_index[mask];
      for (Mask outside = ground.full_mask() & ~mask & ~bit_x; outside != 0;
           outside &= outside - 1) {
        const std::int32_t c = best[(mask | (outside & -outside)) * n + x];
        if (c >= 0 && (b < 0 || lower_values[b] < lower_values[c])) b = c;
      }
      best[s * n + x] = b;
    }
  }
  return LinkageFunction::generate(ground, [&](std::size_t x, Mask m) {
    const std::int32_t b = best[m * n + x];
    return b >= 0 ? lower_values[b] : lower_min;
  });
}

LinkageFunction meet_linkages(const LinkageFunction& a, const LinkageFunction& b) {
  if (!(a.ground() == b.ground())) {
    throw Error(ErrorCode::kGroundSetMismatch, "linkage functions over different ground sets");
  }
  return LinkageFunction::generate(a.ground(), [&](std::size_t x, Mask m) {
    return std::min(a(x, m), b(x, m));
  });
}

bool dominates_canonical(const LinkageFunction& pi, const SetFunction& f) {
  if (!represents(pi, f)) {
    throw Error(ErrorCode::kNotARepresentation, "linkage does not represent the set function");
  }
  const LinkageFunction canonical = build_canonical_linkage(f);
  const auto& system = f.system();
  const auto masks = system.lower_masks();
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (Mask gamma = system.continuations(i); gamma != 0; gamma &= gamma - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(gamma));
      if (pi(x, masks[i]) < canonical(x, masks[i])) return false;
    }
  }
  return true;
}

std::vector<Subset> interval_maximizers(const SetFunction& f, std::size_t x, const Subset& lower) {
  const auto& system = f.system();
  const auto& ground = system.ground();
  if (lower.width() != ground.size()) {
    throw Error(ErrorCode::kGroundSetMismatch, "subset built over a ground set of different size");
  }
  if (x >= ground.size()) {
    throw Error(ErrorCode::kInvalidArgument, "element index out of range");
  }
  const Mask bit_x = Mask{1} << x;
  const auto masks = system.lower_masks();
  const Rational* best = nullptr;
  std::vector<Subset> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (!is_subset(lower.mask(), masks[i]) || (masks[i] & bit_x) != 0) continue;
    const Rational& v = f.values()[i];
    if (best == nullptr || *best < v) {
      best = &v;
      out.clear();
    }
    if (v == *best) out.push_back(ground.subset(masks[i]));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyInterval,
                "no member A of the lower layer with " + ground.format(lower.mask()) +
                    " ⊆ A ⊆ E − " + ground.label(x));
  }
  return out;
}

Subset interval_argmax(const SetFunction& f, std::size_t x, const Subset& lower) {
  return interval_maximizers(f, x, lower).front();
}

}  // namespace antimatroid
