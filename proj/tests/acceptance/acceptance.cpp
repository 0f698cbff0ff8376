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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "antimatroid/duality.hpp"
#include "antimatroid/theorem_lab.hpp"
#include "oracle/adapter.hpp"

namespace {

using namespace antimatroid;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20260101;
constexpr double kExampleSeconds = 1.0;
constexpr double kForwardSeconds = 60.0;
constexpr std::size_t kTablesPerAntimatroid = 1000;
constexpr std::int64_t kRawMin = 0;
constexpr std::int64_t kRawMax = 8;
constexpr std::uint64_t kFunctionCap = 200000;
constexpr int kMaxN = 4;
constexpr int kReplayMaxN = 3;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
  bool passed() const { return failures == 0 && checks > 0; }
};

bool report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", id, ok ? "PASS" : "FAIL", title, detail.c_str());
  std::fflush(stdout);
  return ok;
}

std::string summary(const Tally& t, double secs) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%llu checks, %llu failures, %.2f s",
                static_cast<unsigned long long>(t.checks),
                static_cast<unsigned long long>(t.failures), secs);
  std::string s = buf;
  if (t.failures) s += "; first: " + t.first_failure;
  return s;
}

std::vector<SetFamily> antimatroids_up_to(int n_max) {
  std::vector<SetFamily> out;
  for (int n = 1; n <= n_max; ++n) {
    for (auto& f : collect_families({static_cast<std::size_t>(n), FamilyClass::kAntimatroid,
                                     std::nullopt})) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::string describe(const SetFamily& f) {
  std::string s = "[";
  for (Mask m : f.masks()) s += f.ground().format(m);
  return s + "]";
}

// 1. The two-element example.
bool criterion1() {
  const auto start = Clock::now();
  Tally t;
  const GroundSet g = GroundSet::numbered(2);
  const RankedSystem system(SetFamily::power_set(g));
  const auto pi = LinkageFunction::generate(
      g, [](std::size_t x, Mask m) { return x == 1 && m == 0 ? 2 : 1; });
  const SetFunction f = extract_set_function(pi, system);
  t.expect(f.domain_size() == 3, [] { return "F is not defined on exactly three sets"; });
  for (const Rational& v : f.values()) {
    t.expect(v == Rational(1), [&] { return "F takes value " + v.to_string(); });
  }
  const LinkageFunction pf = build_canonical_linkage(f);
  t.expect(pf.table().size() == 8, [] { return "π_F does not have eight pairs"; });
  for (const Rational& v : pf.table()) {
    t.expect(v == Rational(1), [&] { return "π_F takes value " + v.to_string(); });
  }
  t.expect(represents(pf, f), [] { return "π_F does not represent F"; });
  t.expect(dominates_canonical(pi, f), [] { return "π_F ≰ π"; });
  t.expect(!(pf == pi), [] { return "π_F = π"; });
  const double secs = seconds_since(start);
  t.expect(secs < kExampleSeconds, [] { return "runtime bound exceeded"; });
  return report(1, "two-element example", t.passed(), summary(t, secs));
}

// Shared by criteria 2 and 3: non-quasi-concave enumerated functions.
struct ForwardResult {
  Tally forward;
  Tally non_quasi_concave;
};

// 2. Quasi-concave F ⇒ extract(π_F) = F, over enumerated F with values
// in {0,1,2}.
bool criterion2(const std::vector<SetFamily>& antimatroids, ForwardResult& out) {
  const auto start = Clock::now();
  const std::vector<Rational> codomain{0, 1, 2};
  std::uint64_t functions = 0;
  std::uint64_t subsampled = 0;
  for (std::size_t i = 0; i < antimatroids.size(); ++i) {
    const SetFamily& fam = antimatroids[i];
    for (int k = 1; k <= fam.rank(); ++k) {
      const RankedSystem system(fam.truncate(k));
      const QuasiConcavityChecker checker(system, FunctionDomain::kLower);
      const auto r = enumerate_set_functions(
          system, codomain, derive_seed(kSeed, 2, i, k),
          [&](const SetFunction& f) {
            const bool qc = checker.holds(f.values());
            const bool roundtrip = extract_set_function(build_canonical_linkage(f), system) == f;
            if (qc) {
              out.forward.expect(roundtrip, [&] {
                return "roundtrip fails on " + describe(system.family());
              });
            } else {
              out.non_quasi_concave.expect(!roundtrip, [&] {
                return "non-quasi-concave F survives the roundtrip on " +
                       describe(system.family());
              });
            }
          },
          kFunctionCap);
      functions += r.visited;
      subsampled += r.subsampled;
    }
  }
  const double secs = seconds_since(start);
  out.forward.expect(secs < kForwardSeconds, [] { return "suite exceeded its time bound"; });
  return report(2, "forward duality", out.forward.passed(),
                summary(out.forward, secs) + ", " + std::to_string(functions) + " functions, " +
                    std::to_string(subsampled) + " subsampled systems");
}

// Criteria 3, 4, 5 and the extension part of 8 share the random tables.
struct RandomTableResults {
  Tally extraction;
  Tally null;
  Tally semilattice;
  Tally extension;
  std::uint64_t tables = 0;
  double seconds = 0;
};

RandomTableResults run_random_tables(const std::vector<SetFamily>& antimatroids) {
  const auto start = Clock::now();
  RandomTableResults res;
  for (std::size_t i = 0; i < antimatroids.size(); ++i) {
    const SetFamily& fam = antimatroids[i];
    const GroundSet& g = fam.ground();
    std::vector<RankedSystem> systems;
    std::vector<QuasiConcavityChecker> lower_checkers;
    std::vector<QuasiConcavityChecker> full_checkers;
    for (int k = 1; k <= fam.rank(); ++k) {
      systems.emplace_back(fam.truncate(k));
      lower_checkers.emplace_back(systems.back(), FunctionDomain::kLower);
      full_checkers.emplace_back(systems.back(), FunctionDomain::kFull);
    }
    std::vector<std::optional<LinkageFunction>> previous(systems.size());
    for (std::size_t s = 0; s < kTablesPerAntimatroid; ++s) {
      const LinkageFunction pi =
          random_monotone_linkage(g, derive_seed(kSeed, 3, i, s), kRawMin, kRawMax);
      ++res.tables;
      res.extraction.expect(is_monotone(pi), [&] {
        return "generated table is not monotone on " + describe(fam);
      });
      for (std::size_t j = 0; j < systems.size(); ++j) {
        const RankedSystem& system = systems[j];
        const SetFunction f = extract_set_function(pi, system);
        auto where = [&] {
          return describe(system.family()) + " table " + std::to_string(s);
        };
        res.extraction.expect(lower_checkers[j].holds(f.values()),
                              [&] { return "extracted F not quasi-concave on " + where(); });

        const LinkageFunction pf = build_canonical_linkage(f);
        bool below = true;
        const auto lower = system.lower_masks();
        for (std::size_t x_index = 0; x_index < lower.size() && below; ++x_index) {
          const Mask gamma = system.continuations(x_index);
          for (std::size_t x = 0; x < g.size(); ++x) {
            if (((gamma >> x) & 1u) && pi(x, lower[x_index]) < pf(x, lower[x_index])) {
              below = false;
            }
          }
        }
        res.null.expect(below, [&] { return "π_F ≰ π on " + where(); });
        res.null.expect(represents(pf, f), [&] { return "π_F misses F on " + where(); });

        const LinkageFunction m = meet_linkages(pi, pf);
        res.semilattice.expect(is_monotone(m) && represents(m, f),
                               [&] { return "min(π, π_F) fails on " + where(); });
        res.semilattice.expect(meet_linkages(pi, pi) == pi && meet_linkages(pf, pi) == m,
                               [&] { return "idempotence or commutativity fails on " + where(); });
        if (previous[j]) {
          const LinkageFunction& q = *previous[j];
          const SetFunction fq = extract_set_function(q, system);
          const LinkageFunction chained = meet_linkages(m, build_canonical_linkage(fq));
          // A meet of two validated pairs is monotone; it represents the
          // common function when both sides represent the same one.
          res.semilattice.expect(is_monotone(chained), [&] {
            return "meet of validated pairs not monotone on " + where();
          });
          res.semilattice.expect(
              meet_linkages(meet_linkages(pi, pf), q) == meet_linkages(pi, meet_linkages(pf, q)),
              [&] { return "associativity fails on " + where(); });
          res.semilattice.expect(represents(meet_linkages(m, meet_linkages(pf, pi)), f), [&] {
            return "meet of same-F pairs misses F on " + where();
          });
        }
        previous[j] = pi;

        const SetFunction full = extend_to_maximal(f, pi);
        res.extension.expect(full_checkers[j].holds(full.values()),
                             [&] { return "extension not quasi-concave on " + where(); });
      }
    }
  }
  res.seconds = seconds_since(start);
  return res;
}

bool criterion3(const RandomTableResults& r, const ForwardResult& forward) {
  Tally combined = r.extraction;
  combined.checks += forward.non_quasi_concave.checks;
  combined.failures += forward.non_quasi_concave.failures;
  if (combined.first_failure.empty()) combined.first_failure = forward.non_quasi_concave.first_failure;
  return report(3, "extraction quasi-concavity and converse roundtrip", combined.passed(),
                summary(combined, r.seconds) + ", " + std::to_string(r.tables) + " tables, " +
                    std::to_string(forward.non_quasi_concave.checks) +
                    " non-quasi-concave functions");
}

// 6. Systems that are not k-truncated antimatroids admit a monotone π
// whose extraction is not quasi-concave.
bool criterion6() {
  const auto start = Clock::now();
  Tally t;
  std::uint64_t systems = 0;
  for (int n = 1; n <= kMaxN; ++n) {
    const std::set<oracle::Family> truncations = oracle::truncated_antimatroids(n);
    std::uint64_t oracle_count = 0;
    for (const oracle::Family& f : oracle::families_with_empty(n)) {
      if (!oracle::accessible(f) || oracle::rank(f) == 0) continue;
      const int k = oracle::rank(f);
      bool continuable = true;
      for (const auto& x : oracle::lower(f, k)) continuable = continuable && !oracle::gamma(f, x, n).empty();
      if (continuable && !truncations.count(f)) ++oracle_count;
    }
    const auto families = collect_families(
        {static_cast<std::size_t>(n), FamilyClass::kAccessibleNonTruncated, std::nullopt});
    t.expect(families.size() == oracle_count, [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(families.size()) +
             " systems, oracle finds " + std::to_string(oracle_count);
    });
    for (const SetFamily& fam : families) {
      ++systems;
      const int k = fam.rank();
      const auto cex = counterexample_linkage(fam, k);
      const RankedSystem system(fam);
      const SetFunction f = extract_set_function(cex.linkage, system);
      const Mask a = cex.lower_set.mask();
      const Mask b = cex.upper_set.mask();
      const Mask aa = a | (Mask{1} << cex.element);
      t.expect(is_monotone(cex.linkage) &&
                   oracle::monotone(oracle::from_linkage(cex.linkage), n),
               [&] { return "π not monotone on " + describe(fam); });
      t.expect(!is_quasi_concave(f), [&] { return "F quasi-concave on " + describe(fam); });
      t.expect(f.at(a) == Rational(1) && f.at(b) == Rational(2) && f.at(aa) == Rational(2),
               [&] { return "F(A), F(B), F(A∪a) pattern broken on " + describe(fam); });
      t.expect(!fam.contains(b | (Mask{1} << cex.element)),
               [&] { return "B∪a feasible on " + describe(fam); });
    }
  }
  return report(6, "converse counterexamples", t.passed(),
                summary(t, seconds_since(start)) + ", " + std::to_string(systems) + " systems");
}

// 7. The antimatroid characterizations agree on accessible families.
bool criterion7() {
  const auto start = Clock::now();
  Tally t;
  std::vector<std::size_t> counts;
  for (int n = 1; n <= kMaxN; ++n) {
    std::size_t oracle_count = 0;
    for (const SetFamily& fam :
         collect_families({static_cast<std::size_t>(n), FamilyClass::kAccessible, std::nullopt})) {
      const bool a2 = fam.satisfies_exchange();
      t.expect(a2 == fam.is_union_closed() && a2 == fam.has_interval_property() &&
                   a2 == fam.is_antimatroid(),
               [&] { return "characterizations disagree on " + describe(fam); });
      oracle_count += oracle::antimatroid(oracle::from_family(fam));
    }
    const std::size_t lib_count =
        collect_families({static_cast<std::size_t>(n), FamilyClass::kAntimatroid, std::nullopt})
            .size();
    t.expect(lib_count == oracle_count, [&] {
      return "n=" + std::to_string(n) + " count " + std::to_string(lib_count) + " vs oracle " +
             std::to_string(oracle_count);
    });
    counts.push_back(lib_count);
  }
  t.expect(counts[0] == 2 && counts[1] == 6, [] { return "small counts differ from 2 and 6"; });
  t.expect(antimatroids_by_axioms(3).size() == counts[2],
           [] { return "n=3 recognizer paths disagree"; });
  std::string detail = summary(t, seconds_since(start)) + ", counts";
  for (std::size_t c : counts) detail += " " + std::to_string(c);
  return report(7, "characterization consistency", t.passed(), detail);
}

// Every combination of interval maximizers A^x, x ∈ Γ(X), has meet X.
void replay_all_choices(const SetFunction& f, Tally& t) {
  const RankedSystem& system = f.system();
  const GroundSet& g = system.ground();
  const auto lower = system.lower_masks();
  for (std::size_t xi = 0; xi < lower.size(); ++xi) {
    const Subset x = g.subset(lower[xi]);
    std::vector<std::vector<Subset>> choices;
    for (std::size_t e : g.subset(system.continuations(xi)).elements()) {
      choices.push_back(interval_maximizers(f, e, x));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      Subset meet = choices[0][pick[0]];
      for (std::size_t c = 1; c < choices.size(); ++c) meet = system.meet(meet, choices[c][pick[c]]);
      t.expect(meet == x, [&] {
        return "meet of maximizers is " + g.format(meet.mask()) + " for X=" + g.format(x.mask());
      });
      std::size_t c = 0;
      while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }
}

bool criterion8(const std::vector<SetFamily>& antimatroids, const RandomTableResults& tables) {
  const auto start = Clock::now();
  Tally t;
  for (const SetFamily& fam : antimatroids) {
    const GroundSet& g = fam.ground();
    for (Mask m = 0; m < g.subset_count(); ++m) {
      const Subset b = fam.basis(g.subset(m));
      t.expect((fam.continuations(b).mask() & m) == 0,
               [&] { return "Γ(B(X)) meets X=" + g.format(m) + " on " + describe(fam); });
    }
  }
  std::uint64_t replayed = 0;
  const std::vector<Rational> codomain{0, 1, 2};
  for (std::size_t i = 0; i < antimatroids.size(); ++i) {
    const SetFamily& fam = antimatroids[i];
    if (fam.ground().size() > static_cast<std::size_t>(kReplayMaxN)) continue;
    for (int k = 1; k <= fam.rank(); ++k) {
      const RankedSystem system(fam.truncate(k));
      enumerate_set_functions(system, codomain, derive_seed(kSeed, 8, i, k),
                              [&](const SetFunction& f) {
                                ++replayed;
                                replay_all_choices(f, t);
                              });
    }
  }
  Tally combined = t;
  combined.checks += tables.extension.checks;
  combined.failures += tables.extension.failures;
  if (combined.first_failure.empty()) combined.first_failure = tables.extension.first_failure;
  return report(8, "structural invariants, proof replay and extension", combined.passed(),
                summary(combined, seconds_since(start)) + ", " + std::to_string(replayed) +
                    " replayed functions");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  bool ok = criterion1();
  const std::vector<SetFamily> antimatroids = antimatroids_up_to(kMaxN);
  ForwardResult forward;
  ok &= criterion2(antimatroids, forward);
  const RandomTableResults tables = run_random_tables(antimatroids);
  ok &= criterion3(tables, forward);
  ok &= report(4, "null dominance", tables.null.passed(), summary(tables.null, tables.seconds));
  ok &= report(5, "semilattice", tables.semilattice.passed(),
               summary(tables.semilattice, tables.seconds));
  ok &= criterion6();
  ok &= criterion7();
  ok &= criterion8(antimatroids, tables);
  std::printf("acceptance: %s in %.1f s\n", ok ? "all criteria pass" : "FAILURES",
              seconds_since(start));
  return ok ? 0 : 1;
}
