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

#ifndef ANTIMATROID_THEOREM_LAB_HPP_
#define ANTIMATROID_THEOREM_LAB_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antimatroid/duality.hpp"
#include "antimatroid/set_family.hpp"
#include "antimatroid/tables.hpp"
#include "json.hpp"

namespace antimatroid {

// Classes of ∅-containing families over 2^E.
enum class FamilyClass {
  kAllFamilies,
  kAccessible,
  // Accessible, rank k ≥ 1, and Γ(X) ≠ ∅ for every X ∈ 𝓕_{k−1}.
  kContinuable,
  kAntimatroid,
  // Continuable but not a k-truncated antimatroid for k = rank.
  kAccessibleNonTruncated,
};

std::string_view family_class_name(FamilyClass c) noexcept;
std::optional<FamilyClass> parse_family_class(std::string_view name) noexcept;

struct EnumerationSpec {
  std::size_t n = 0;
  FamilyClass family_class = FamilyClass::kAntimatroid;
  // Keeps only families of this rank.
  std::optional<int> k;
};

// n ≤ 5 for antimatroids, n ≤ 4 otherwise; kGuardrailExceeded when violated.
void check_guardrails(const EnumerationSpec& spec);

// Visits every family of the class exactly once, ordered by the bit code
// that marks which non-empty subsets (in canonical order) are members.
// Returns the number of families visited.
std::size_t enumerate_families(const EnumerationSpec& spec,
                               const std::function<void(const SetFamily&)>& visit);
std::vector<SetFamily> collect_families(const EnumerationSpec& spec);

// Second recognizer path: every ∅-containing family filtered by (A1) ∧ (A2).
// n ≤ 4.
std::vector<SetFamily> antimatroids_by_axioms(std::size_t n);

// Deterministic random source: std::mt19937_64, with bounded draws by
// rejection sampling so streams do not depend on the standard library's
// distribution implementations.
class Prng {
 public:
  explicit Prng(std::uint64_t seed);
  std::uint64_t next();
  // Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// splitmix64-based mixing of a base seed with stream coordinates.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0) noexcept;

struct FunctionEnumeration {
  // codomain^|𝓕_{k−1}|, saturated at UINT64_MAX.
  std::uint64_t total = 0;
  std::uint64_t visited = 0;
  bool subsampled = false;
};

inline constexpr std::uint64_t kDefaultFunctionCap = 200000;

// All assignments 𝓕_{k−1} → codomain when there are at most `cap` of them;
// otherwise `cap` systematically spaced assignments with a seeded offset.
FunctionEnumeration enumerate_set_functions(const RankedSystem& system,
                                            std::span<const Rational> codomain,
                                            std::uint64_t seed,
                                            const std::function<void(const SetFunction&)>& visit,
                                            std::uint64_t cap = kDefaultFunctionCap);

// raw(x, Y) uniform in [lo, hi] drawn mask-major, then
// π(x, X) = max{raw(x, Y) : Y ⊇ X}. Monotone by construction.
LinkageFunction random_monotone_linkage(const GroundSet& ground, std::uint64_t seed,
                                        std::int64_t lo, std::int64_t hi);

// Linkage exposing a failure of the k-truncated interval property:
// π(x, X) = 0 if x ∈ X, 1 if x = a and A ⊆ X ⊆ E − a, 2 otherwise.
struct CounterexampleLinkage {
  LinkageFunction linkage;
  Subset lower_set;  // A
  Subset upper_set;  // B
  std::size_t element = 0;  // a
};

// Requires an accessible family of rank k with non-empty Γ on 𝓕_{k−1}.
// kNoViolation if the family satisfies the k-truncated interval property.
CounterexampleLinkage counterexample_linkage(const SetFamily& family, int k);

struct VerifyOptions {
  std::size_t samples = 1000;       // random linkage tables per system
  std::int64_t raw_min = 0;         // raw linkage values
  std::int64_t raw_max = 8;
  std::int64_t codomain_max = 2;    // set functions take values 0..codomain_max
  std::uint64_t function_cap = kDefaultFunctionCap;
};

struct VerificationReport {
  std::string theorem;
  EnumerationSpec spec;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t passes = 0;
  std::vector<nlohmann::json> failures;
  double elapsed_ms = 0;

  bool passed() const noexcept { return passes == instances && failures.empty(); }
  // Failures are sorted by their serialized form. Timing is the only
  // run-dependent field and can be left out.
  nlohmann::json to_json(bool include_timing = true) const;
};

// Theorem suites, in report order.
inline constexpr std::string_view kTheoremIds[] = {
    "characterization_consistency", "structural_invariants", "main_forward",
    "extraction_quasi_concave", "null_dominance",         "semilattice_meet",
    "maximal_extension",        "proof_replay",           "converse_counterexample",
};

std::vector<VerificationReport> verify_all(const EnumerationSpec& spec, std::uint64_t seed,
                                           const VerifyOptions& options = {});

nlohmann::json reports_to_json(std::span<const VerificationReport> reports,
                               bool include_timing = true);

}  // namespace antimatroid

#endif  // ANTIMATROID_THEOREM_LAB_HPP_
