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
#include <chrono>
#include <map>

#include "antimatroid/error.hpp"
#include "antimatroid/io.hpp"
#include "antimatroid/theorem_lab.hpp"

namespace antimatroid {

using nlohmann::json;

json VerificationReport::to_json(bool include_timing) const {
  std::vector<std::string> serialized;
  serialized.reserve(failures.size());
  for (const auto& f : failures) serialized.push_back(f.dump());
  std::sort(serialized.begin(), serialized.end());
  json sorted = json::array();
  for (const auto& s : serialized) sorted.push_back(json::parse(s));

  json spec_json{{"n", spec.n}, {"class", std::string(family_class_name(spec.family_class))}};
  spec_json["k"] = spec.k ? json(*spec.k) : json(nullptr);
  json out{{"theorem", theorem},  {"spec", std::move(spec_json)},
           {"seed", seed},        {"instances", instances},
           {"passes", passes},    {"failures", std::move(sorted)}};
  if (include_timing) out["elapsed_ms"] = elapsed_ms;
  return out;
}

json reports_to_json(std::span<const VerificationReport> reports, bool include_timing) {
  json list = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    list.push_back(r.to_json(include_timing));
    passed = passed && r.passed();
  }
  return json{{"passed", passed}, {"reports", std::move(list)}};
}

namespace {

using Clock = std::chrono::steady_clock;

class Suite {
 public:
  Suite(std::string theorem, const EnumerationSpec& spec, std::uint64_t seed) {
    report_.theorem = std::move(theorem);
    report_.spec = spec;
    report_.seed = seed;
  }

  template <typename Payload>
  void record(bool ok, Payload&& payload) {
    ++report_.instances;
    if (ok) {
      ++report_.passes;
    } else {
      report_.failures.push_back(payload());
    }
  }

  // Times a block of work attributed to this suite.
  template <typename Fn>
  void timed(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    report_.elapsed_ms +=
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

struct Suites {
  std::map<std::string_view, Suite> by_id;
  Suites(const EnumerationSpec& spec, std::uint64_t seed) {
    for (auto id : kTheoremIds) by_id.emplace(id, Suite(std::string(id), spec, seed));
  }
  Suite& operator[](std::string_view id) { return by_id.at(id); }
};

json instance_payload(const RankedSystem& system) {
  return json{{"system", set_system_to_json(system.family())}, {"k", system.k()}};
}

// Meets of lower members, by canonical index.
class MeetTable {
 public:
  explicit MeetTable(const RankedSystem& system) : size_(system.lower_count()) {
    const auto masks = system.lower_masks();
    table_.resize(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = i; j < size_; ++j) {
        const Mask m = system.meet_masks(masks[i], masks[j]);
        const auto index = static_cast<std::uint32_t>(*system.family().index_of(m));
        table_[i * size_ + j] = table_[j * size_ + i] = index;
      }
    }
  }
  std::uint32_t operator()(std::uint32_t i, std::uint32_t j) const { return table_[i * size_ + j]; }

 private:
  std::size_t size_;
  std::vector<std::uint32_t> table_;
};

// Lower members of each interval [X, E − x]_{𝓕_{k−1}} for X lower and
// x ∈ Γ(X), in canonical order.
class IntervalIndex {
 public:
  explicit IntervalIndex(const RankedSystem& system) {
    const auto masks = system.lower_masks();
    for (std::size_t i = 0; i < masks.size(); ++i) {
      std::vector<std::vector<std::uint32_t>> per_x;
      for (Mask gamma = system.continuations(i); gamma != 0; gamma &= gamma - 1) {
        const Mask bit = gamma & -gamma;
        std::vector<std::uint32_t> members;
        for (std::size_t t = 0; t < masks.size(); ++t) {
          if (is_subset(masks[i], masks[t]) && (masks[t] & bit) == 0) {
            members.push_back(static_cast<std::uint32_t>(t));
          }
        }
        per_x.push_back(std::move(members));
      }
      intervals_.push_back(std::move(per_x));
    }
  }
  const std::vector<std::vector<std::uint32_t>>& operator[](std::size_t i) const {
    return intervals_[i];
  }

 private:
  std::vector<std::vector<std::vector<std::uint32_t>>> intervals_;
};

// For each lower X and x ∈ Γ(X), the meet over x of a chosen maximizer A^x of
// F on [X, E − x] must give back X. With `all_ties` every combination of
// maximizers is tried; otherwise the canonical (first) one.
std::optional<json> replay_proof(const RankedSystem& system, const MeetTable& meets,
                                 const IntervalIndex& intervals,
                                 std::span<const Rational> values, bool all_ties) {
  const auto masks = system.lower_masks();
  auto argmax = [&values](const std::vector<std::uint32_t>& interval) {
    std::uint32_t best = interval.front();
    for (std::uint32_t t : interval) {
      if (values[best] < values[t]) best = t;
    }
    return best;
  };
  std::vector<std::vector<std::uint32_t>> choices;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (!all_ties) {
      std::uint32_t acc = static_cast<std::uint32_t>(i);
      bool first = true;
      for (const auto& interval : intervals[i]) {
        const std::uint32_t a = argmax(interval);
        acc = first ? a : meets(acc, a);
        first = false;
      }
      if (acc == i) continue;
    }
    choices.clear();
    for (const auto& interval : intervals[i]) {
      std::vector<std::uint32_t> best{interval.front()};
      for (std::size_t p = 1; p < interval.size(); ++p) {
        const std::uint32_t t = interval[p];
        if (values[best.front()] < values[t]) {
          best.assign(1, t);
        } else if (all_ties && values[t] == values[best.front()]) {
          best.push_back(t);
        }
      }
      choices.push_back(std::move(best));
    }
    // Odometer over one maximizer per continuation.
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::uint32_t acc = choices[0][pick[0]];
      for (std::size_t c = 1; c < choices.size(); ++c) acc = meets(acc, choices[c][pick[c]]);
      if (acc != i) {
        json chosen = json::array();
        for (std::size_t c = 0; c < choices.size(); ++c) {
          chosen.push_back(subset_to_json(system.ground(), masks[choices[c][pick[c]]]));
        }
        return json{{"X", subset_to_json(system.ground(), masks[i])},
                    {"argmax_sets", std::move(chosen)},
                    {"meet", subset_to_json(system.ground(), masks[acc])}};
      }
      std::size_t c = 0;
      while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }
  return std::nullopt;
}

void run_duality_suites(const RankedSystem& system, std::uint64_t stream, std::uint64_t seed,
                        const VerifyOptions& options, Suites& suites) {
  const QuasiConcavityChecker lower_checker(system, FunctionDomain::kLower);
  const QuasiConcavityChecker full_checker(system, FunctionDomain::kFull);
  const MeetTable meets(system);
  const IntervalIndex intervals(system);
  const bool all_ties = system.ground().size() <= 3;
  const auto k = static_cast<std::uint64_t>(system.k());

  std::vector<Rational> codomain;
  for (std::int64_t v = 0; v <= options.codomain_max; ++v) codomain.emplace_back(v);

  Suite& forward = suites["main_forward"];
  Suite& replay = suites["proof_replay"];
  enumerate_set_functions(
      system, codomain, derive_seed(seed, stream, k, 0),
      [&](const SetFunction& f) {
        forward.timed([&] {
          const bool qc = lower_checker.holds(f.values());
          const LinkageFunction canonical = build_canonical_linkage(f);
          const bool monotone = is_monotone(canonical);
          const bool roundtrip = represents(canonical, f);
          forward.record(qc == roundtrip && monotone, [&] {
            json p = instance_payload(system);
            p["function"] = set_function_to_json(f);
            p["quasi_concave"] = qc;
            p["canonical_monotone"] = monotone;
            p["roundtrip"] = roundtrip;
            return p;
          });
        });
        replay.timed([&] {
          const auto failure = replay_proof(system, meets, intervals, f.values(), all_ties);
          replay.record(!failure, [&] {
            json p = instance_payload(system);
            p["function"] = set_function_to_json(f);
            p["violation"] = *failure;
            return p;
          });
        });
      },
      options.function_cap);

  Suite& extraction = suites["extraction_quasi_concave"];
  Suite& null_suite = suites["null_dominance"];
  Suite& semilattice = suites["semilattice_meet"];
  Suite& extension = suites["maximal_extension"];
  std::optional<LinkageFunction> previous;
  for (std::size_t t = 0; t < options.samples; ++t) {
    const LinkageFunction pi = random_monotone_linkage(
        system.ground(), derive_seed(seed, stream, k, t + 1), options.raw_min, options.raw_max);
    auto payload = [&](const char* what, json detail) {
      return [&, what, detail = std::move(detail)] {
        json p = instance_payload(system);
        p["linkage"] = linkage_to_json(pi);
        p["check"] = what;
        p["detail"] = detail;
        return p;
      };
    };

    std::optional<SetFunction> extracted;
    extraction.timed([&] {
      const bool monotone = is_monotone(pi);
      extracted = extract_set_function(pi, system);
      const auto violation = lower_checker.find_violation(extracted->values());
      extraction.record(monotone && !violation,
                        payload("extraction", violation ? quasi_concavity_violation_to_json(
                                                              system.ground(), *violation)
                                                        : json{{"generator_monotone", monotone}}));
    });
    const SetFunction& f = *extracted;

    LinkageFunction canonical = build_canonical_linkage(f);
    null_suite.timed([&] {
      const bool dominated = dominates_canonical(pi, f);
      const bool canonical_represents = represents(canonical, f);
      null_suite.record(dominated && canonical_represents,
                        payload("null", json{{"dominates", dominated},
                                             {"canonical_represents", canonical_represents}}));
    });

    semilattice.timed([&] {
      const LinkageFunction met = meet_linkages(pi, canonical);
      const LinkageFunction met_again = meet_linkages(met, pi);
      const LinkageFunction& third = previous ? *previous : canonical;
      const bool pair_ok = is_monotone(met) && represents(met, f);
      const bool chained_ok = is_monotone(met_again) && represents(met_again, f);
      const bool idempotent = meet_linkages(pi, pi) == pi;
      const bool commutative = met == meet_linkages(canonical, pi);
      const bool associative = meet_linkages(met, third) ==
                               meet_linkages(pi, meet_linkages(canonical, third));
      semilattice.record(pair_ok && chained_ok && idempotent && commutative && associative,
                         payload("semilattice", json{{"pair", pair_ok},
                                                     {"chained", chained_ok},
                                                     {"idempotent", idempotent},
                                                     {"commutative", commutative},
                                                     {"associative", associative}}));
    });

    extension.timed([&] {
      const SetFunction extended = extend_to_maximal(f, pi);
      const auto violation = full_checker.find_violation(extended.values());
      extension.record(!violation, [&] {
        json p = payload("extension", json(nullptr))();
        p["function"] = set_function_to_json(extended);
        p["detail"] = quasi_concavity_violation_to_json(system.ground(), *violation);
        return p;
      });
    });
    previous = pi;
  }
}

// Γ(B(X)) ⊆ E − X, basis and meet laws, the Γ form of the interval
// property and truncation invariants on an antimatroid.
std::optional<json> structural_failure(const SetFamily& family, std::uint64_t seed) {
  const auto& ground = family.ground();
  const std::size_t n = ground.size();
  for (Mask x = 0; x <= ground.full_mask(); ++x) {
    const Subset xs(x, n);
    const Subset b = family.basis(xs);
    if (!b.is_subset_of(xs)) return json{{"check", "basis_subset"}, {"X", subset_to_json(ground, x)}};
    if ((b == xs) != family.contains(x)) {
      return json{{"check", "basis_fixed_point"}, {"X", subset_to_json(ground, x)}};
    }
    if ((family.continuations(b).mask() & x) != 0) {
      return json{{"check", "continuations_of_basis"}, {"X", subset_to_json(ground, x)}};
    }
  }
  const auto masks = family.masks();
  const std::size_t m = masks.size();
  auto meet = [&](Mask a, Mask b) { return family.meet(Subset(a, n), Subset(b, n)).mask(); };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Mask a = masks[i], b = masks[j];
      const Mask ab = meet(a, b);
      if (ab != meet(b, a) || meet(a, a) != a || !family.contains(ab) || !is_subset(ab, a & b)) {
        return json{{"check", "meet_pair"}, {"X", subset_to_json(ground, a)},
                    {"Y", subset_to_json(ground, b)}};
      }
      if (is_subset(a, b)) {
        const Mask ga = family.continuations(Subset(a, n)).mask();
        const Mask gb = family.continuations(Subset(b, n)).mask();
        if (!is_subset(ga & ~b, gb)) {
          return json{{"check", "continuation_interval"}, {"X", subset_to_json(ground, a)},
                      {"Y", subset_to_json(ground, b)}};
        }
      }
    }
  }
  auto associative = [&](Mask a, Mask b, Mask c) {
    return meet(meet(a, b), c) == meet(a, meet(b, c));
  };
  if (m * m * m <= 40000) {
    for (Mask a : masks)
      for (Mask b : masks)
        for (Mask c : masks)
          if (!associative(a, b, c)) {
            return json{{"check", "meet_associative"}, {"X", subset_to_json(ground, a)},
                        {"Y", subset_to_json(ground, b)}, {"Z", subset_to_json(ground, c)}};
          }
  } else {
    Prng rng(seed);
    for (int t = 0; t < 2000; ++t) {
      const Mask a = masks[rng.below(m)], b = masks[rng.below(m)], c = masks[rng.below(m)];
      if (!associative(a, b, c)) {
        return json{{"check", "meet_associative"}, {"X", subset_to_json(ground, a)},
                    {"Y", subset_to_json(ground, b)}, {"Z", subset_to_json(ground, c)}};
      }
    }
  }
  for (int k = 1; k <= family.rank(); ++k) {
    const SetFamily truncated = family.truncate(k);
    if (!truncated.is_accessible() || !truncated.has_truncated_interval_property(k)) {
      return json{{"check", "truncation"}, {"k", k}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<VerificationReport> verify_all(const EnumerationSpec& spec, std::uint64_t seed,
                                           const VerifyOptions& options) {
  check_guardrails(spec);
  if (options.codomain_max < 0 || options.raw_max < options.raw_min) {
    throw Error(ErrorCode::kInvalidArgument, "empty value range");
  }
  Suites suites(spec, seed);
  std::uint64_t stream = 0;
  enumerate_families(spec, [&](const SetFamily& family) {
    ++stream;
    if (!family.is_accessible()) return;

    Suite& charz = suites["characterization_consistency"];
    bool antimatroid = false;
    charz.timed([&] {
      const bool exchange = family.satisfies_exchange();
      const bool union_closed = family.is_union_closed();
      const bool interval = family.has_interval_property();
      antimatroid = exchange && union_closed && interval;
      charz.record(exchange == union_closed && exchange == interval, [&] {
        return json{{"system", set_system_to_json(family)},
                    {"exchange", exchange},
                    {"union_closed", union_closed},
                    {"interval", interval}};
      });
    });

    if (antimatroid) {
      Suite& structural = suites["structural_invariants"];
      structural.timed([&] {
        const auto failure = structural_failure(family, derive_seed(seed, stream));
        structural.record(!failure, [&] {
          return json{{"system", set_system_to_json(family)}, {"violation", *failure}};
        });
      });
      for (int k = 1; k <= family.rank(); ++k) {
        run_duality_suites(TruncatedAntimatroid(family, k), stream, seed, options, suites);
      }
      return;
    }

    const int rank = family.rank();
    if (rank < 1) return;
    std::optional<RankedSystem> system;
    try {
      system.emplace(family);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyContinuationSet) throw;
      return;
    }
    if (system->is_truncated_antimatroid()) {
      run_duality_suites(*system, stream, seed, options, suites);
      return;
    }
    Suite& converse = suites["converse_counterexample"];
    converse.timed([&] {
      const auto cex = counterexample_linkage(family, rank);
      const bool monotone = is_monotone(cex.linkage);
      const SetFunction f = extract_set_function(cex.linkage, *system);
      const bool qc = is_quasi_concave(f);
      const Mask a_mask = cex.lower_set.mask();
      const Mask b_mask = cex.upper_set.mask();
      const Mask aa_mask = a_mask | (Mask{1} << cex.element);
      const bool pattern = f.at(a_mask) == Rational(1) && f.at(aa_mask) == Rational(2) &&
                           f.at(b_mask) == Rational(2);
      converse.record(monotone && !qc && pattern, [&] {
        json p = instance_payload(*system);
        p["linkage"] = linkage_to_json(cex.linkage);
        p["function"] = set_function_to_json(f);
        p["witness"] = interval_violation_to_json(
            family.ground(), IntervalViolation{cex.lower_set, cex.upper_set, cex.element});
        p["monotone"] = monotone;
        p["quasi_concave"] = qc;
        return p;
      });
    });
  });

  std::vector<VerificationReport> reports;
  for (auto id : kTheoremIds) reports.push_back(suites[id].take());
  return reports;
}

}  // namespace antimatroid
