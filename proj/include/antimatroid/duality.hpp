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

#ifndef ANTIMATROID_DUALITY_HPP_
#define ANTIMATROID_DUALITY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "antimatroid/rational.hpp"
#include "antimatroid/ranked_system.hpp"
#include "antimatroid/tables.hpp"

namespace antimatroid {

// F(Z) < min{F(X), F(Y)} for a maximal feasible subset Z of X ∩ Y.
struct QuasiConcavityViolation {
  Subset x;
  Subset y;
  Subset z;
};

// π(element, smaller) < π(element, larger) although smaller ⊆ larger.
struct MonotonicityViolation {
  std::size_t element = 0;
  Subset smaller;
  Subset larger;
};

// Precomputed (X, Y, Z) triples for one system and domain, so that many
// functions over the same system can be tested without recomputing maximal
// feasible subsets. Every maximal feasible subset of X ∩ Y is listed, which
// covers systems that are not union-closed.
class QuasiConcavityChecker {
 public:
  QuasiConcavityChecker(const RankedSystem& system, FunctionDomain domain);

  // `values` is indexed by canonical member position (a SetFunction's
  // values()); it must cover the checker's domain.
  std::optional<QuasiConcavityViolation> find_violation(std::span<const Rational> values) const;
  bool holds(std::span<const Rational> values) const;

  std::size_t domain_size() const noexcept { return domain_size_; }

 private:
  struct Triple {
    std::uint32_t x, y, z;
  };
  GroundSet ground_;
  std::vector<Mask> masks_;
  std::size_t domain_size_;
  std::vector<Triple> triples_;
};

// For all members X, Y in F's domain and every maximal feasible subset Z of
// X ∩ Y: F(Z) ≥ min{F(X), F(Y)}.
std::optional<QuasiConcavityViolation> find_quasi_concavity_violation(const SetFunction& f);
bool is_quasi_concave(const SetFunction& f);

// Checked on covering pairs (X, X ∪ y) over all of E × 2^E.
std::optional<MonotonicityViolation> find_monotonicity_violation(const LinkageFunction& pi);
bool is_monotone(const LinkageFunction& pi);

// F(X) = min over x ∈ Γ(X) of π(x, X) on the lower layer 𝓕_{k−1}.
SetFunction extract_set_function(const LinkageFunction& pi, const RankedSystem& system);

// Evidence that π represents F: for each lower member X (canonical order)
// the smallest element x* ∈ Γ(X) with F(X) = π(x*, X).
struct RepresentationCertificate {
  SetFunction function;
  LinkageFunction linkage;
  std::vector<std::size_t> witnesses;
};

std::optional<RepresentationCertificate> certify_representation(const LinkageFunction& pi,
                                                                const SetFunction& f);
bool represents(const LinkageFunction& pi, const SetFunction& f);

// Extends F = extract(π) to the size-k members by F(X) = min over x ∈ E − X
// of π(x, X). For X = E that minimum is empty and F(E) is set to the
// minimum of F over 𝓕_{k−1}. Throws kNotARepresentation when F is not the
// extraction of π.
SetFunction extend_to_maximal(const SetFunction& f, const LinkageFunction& pi);

// π_F(x, X) = max{F(A) : A ∈ 𝓕_{k−1}, X ⊆ A ⊆ E − x} when x ∉ X and that
// interval is non-empty, and min of F over 𝓕_{k−1} otherwise. Only the
// lower-layer values of F are read. kEmptyFamily if 𝓕_{k−1} is empty.
LinkageFunction build_canonical_linkage(const SetFunction& f);

// Pointwise minimum; kGroundSetMismatch on different ground sets.
LinkageFunction meet_linkages(const LinkageFunction& a, const LinkageFunction& b);

// π_F(x, X) ≤ π(x, X) for all X ∈ 𝓕_{k−1}, x ∈ Γ(X). Requires that π
// represents F (kNotARepresentation otherwise).
bool dominates_canonical(const LinkageFunction& pi, const SetFunction& f);

// Members A of 𝓕_{k−1} with X ⊆ A ⊆ E − x maximizing F, in canonical
// order. kEmptyInterval when the interval is empty (including x ∈ X).
std::vector<Subset> interval_maximizers(const SetFunction& f, std::size_t x, const Subset& lower);
// The canonical-order first maximizer.
Subset interval_argmax(const SetFunction& f, std::size_t x, const Subset& lower);

}  // namespace antimatroid

#endif  // ANTIMATROID_DUALITY_HPP_
