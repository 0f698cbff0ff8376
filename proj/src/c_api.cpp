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

#include "antimatroid/antimatroid.h"

#include <cstring>
#include <new>
#include <string>

#include "antimatroid/duality.hpp"
#include "antimatroid/error.hpp"
#include "antimatroid/io.hpp"
#include "antimatroid/theorem_lab.hpp"

struct am_system {
  antimatroid::SetFamily family;
};

struct am_function {
  antimatroid::SetFunction function;
};

struct am_linkage {
  antimatroid::LinkageFunction linkage;
};

namespace {

using namespace antimatroid;
using nlohmann::json;

thread_local std::string last_error;

am_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return AM_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return AM_ERR_PARSE;
    case ErrorCode::kGroundSetMismatch: return AM_ERR_GROUND_SET_MISMATCH;
    case ErrorCode::kNotFeasible: return AM_ERR_NOT_FEASIBLE;
    case ErrorCode::kNotUnionClosed: return AM_ERR_NOT_UNION_CLOSED;
    case ErrorCode::kNoFeasibleSubset: return AM_ERR_NO_FEASIBLE_SUBSET;
    case ErrorCode::kInvalidTruncationLevel: return AM_ERR_INVALID_TRUNCATION_LEVEL;
    case ErrorCode::kNotTruncatedAntimatroid: return AM_ERR_NOT_TRUNCATED_ANTIMATROID;
    case ErrorCode::kEmptyContinuationSet: return AM_ERR_EMPTY_CONTINUATION_SET;
    case ErrorCode::kMissingValue: return AM_ERR_MISSING_VALUE;
    case ErrorCode::kNotInDomain: return AM_ERR_NOT_IN_DOMAIN;
    case ErrorCode::kEmptyFamily: return AM_ERR_EMPTY_FAMILY;
    case ErrorCode::kEmptyInterval: return AM_ERR_EMPTY_INTERVAL;
    case ErrorCode::kNotARepresentation: return AM_ERR_NOT_A_REPRESENTATION;
    case ErrorCode::kNoViolation: return AM_ERR_NO_VIOLATION;
    case ErrorCode::kGuardrailExceeded: return AM_ERR_GUARDRAIL_EXCEEDED;
    case ErrorCode::kConsistencyViolation: return AM_ERR_CONSISTENCY_VIOLATION;
  }
  return AM_ERR_INTERNAL;
}

template <typename Fn>
am_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    return AM_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return AM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AM_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// The system restricted to sets of size ≤ k (k ≤ 0: the whole system).
RankedSystem ranked(const SetFamily& family, int k) {
  return RankedSystem(k > 0 ? family.truncate(k) : family);
}

Subset parse_labels(const GroundSet& ground, const char* set_json) {
  require(set_json, "set");
  json doc;
  try {
    doc = json::parse(set_json);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::kParse, "a set must be a JSON array of labels");
  std::vector<std::string> labels;
  for (const auto& item : doc) {
    if (!item.is_string()) throw Error(ErrorCode::kParse, "element labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  return ground.subset_of(labels);
}

std::string subset_text(const GroundSet& ground, const Subset& s) {
  return subset_to_json(ground, s.mask()).dump();
}

}  // namespace

extern "C" {

uint32_t am_abi_version(void) { return AM_ABI_VERSION; }

const char* am_version_string(void) { return "0.1.0"; }

const char* am_status_name(am_status status) {
  switch (status) {
    case AM_OK: return "OK";
    case AM_ERR_INTERNAL: return "InternalError";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(ErrorCode::kConsistencyViolation); ++c) {
    if (to_status(static_cast<ErrorCode>(c)) == status) {
      return error_code_name(static_cast<ErrorCode>(c)).data();
    }
  }
  return "Unknown";
}

const char* am_last_error(void) { return last_error.c_str(); }

void am_string_free(char* text) { std::free(text); }

am_status am_system_from_json(const char* text, am_system** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new am_system{parse_set_system(text)};
  });
}

void am_system_free(am_system* system) { delete system; }

am_status am_system_to_json(const am_system* system, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    *out = dup_string(dump_canonical(set_system_to_json(system->family)));
  });
}

am_status am_system_properties_get(const am_system* system, am_system_properties* out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const auto& f = system->family;
    am_system_properties p{};
    p.accessible = f.is_accessible();
    p.exchange = f.satisfies_exchange();
    p.union_closed = f.is_union_closed();
    p.interval = f.has_interval_property();
    p.antimatroid = f.is_antimatroid();
    p.rank = f.rank();
    p.ground_size = f.ground().size();
    p.member_count = f.size();
    *out = p;
  });
}

am_status am_system_truncated_interval(const am_system* system, int k, int* out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    *out = system->family.has_truncated_interval_property(k);
  });
}

am_status am_system_interval_violation(const am_system* system, int k, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const auto& f = system->family;
    const auto v = k == 0 ? f.find_interval_violation() : f.find_truncated_interval_violation(k);
    *out = v ? dup_string(interval_violation_to_json(f.ground(), *v).dump()) : nullptr;
  });
}

am_status am_system_truncate(const am_system* system, int k, am_system** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    *out = new am_system{system->family.truncate(k)};
  });
}

am_status am_system_continuations(const am_system* system, const char* set_json, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const auto& g = system->family.ground();
    *out = dup_string(subset_text(g, system->family.continuations(parse_labels(g, set_json))));
  });
}

am_status am_system_basis(const am_system* system, const char* set_json, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    const auto& g = system->family.ground();
    *out = dup_string(subset_text(g, system->family.basis(parse_labels(g, set_json))));
  });
}

am_status am_function_from_json(const am_system* system, int k, const char* text,
                                am_function** out) {
  return guarded([&] {
    require(system, "system");
    require(text, "text");
    require(out, "out");
    *out = new am_function{parse_set_function(text, ranked(system->family, k))};
  });
}

void am_function_free(am_function* function) { delete function; }

am_status am_function_to_json(const am_function* function, char** out) {
  return guarded([&] {
    require(function, "function");
    require(out, "out");
    *out = dup_string(dump_canonical(set_function_to_json(function->function)));
  });
}

am_status am_function_quasi_concave(const am_function* function, int* holds, char** violation) {
  return guarded([&] {
    require(function, "function");
    require(holds, "holds");
    const auto v = find_quasi_concavity_violation(function->function);
    *holds = !v;
    if (violation) {
      *violation = v ? dup_string(quasi_concavity_violation_to_json(
                                      function->function.system().ground(), *v)
                                      .dump())
                     : nullptr;
    }
  });
}

am_status am_function_equal(const am_function* a, const am_function* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->function == b->function;
  });
}

am_status am_linkage_from_json(const am_system* system, const char* text, am_linkage** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const GroundSet* ground = system ? &system->family.ground() : nullptr;
    *out = new am_linkage{parse_linkage(text, ground)};
  });
}

void am_linkage_free(am_linkage* linkage) { delete linkage; }

am_status am_linkage_to_json(const am_linkage* linkage, char** out) {
  return guarded([&] {
    require(linkage, "linkage");
    require(out, "out");
    *out = dup_string(dump_canonical(linkage_to_json(linkage->linkage)));
  });
}

am_status am_linkage_monotone(const am_linkage* linkage, int* holds, char** violation) {
  return guarded([&] {
    require(linkage, "linkage");
    require(holds, "holds");
    const auto v = find_monotonicity_violation(linkage->linkage);
    *holds = !v;
    if (violation) {
      *violation =
          v ? dup_string(monotonicity_violation_to_json(linkage->linkage.ground(), *v).dump())
            : nullptr;
    }
  });
}

am_status am_linkage_meet(const am_linkage* a, const am_linkage* b, am_linkage** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new am_linkage{meet_linkages(a->linkage, b->linkage)};
  });
}

am_status am_linkage_equal(const am_linkage* a, const am_linkage* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = a->linkage == b->linkage;
  });
}

am_status am_linkage_random_monotone(const am_system* system, uint64_t seed, int64_t lo,
                                     int64_t hi, am_linkage** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    *out = new am_linkage{random_monotone_linkage(system->family.ground(), seed, lo, hi)};
  });
}

am_status am_dualize(const am_function* function, am_linkage** out) {
  return guarded([&] {
    require(function, "function");
    require(out, "out");
    *out = new am_linkage{build_canonical_linkage(function->function)};
  });
}

am_status am_extract(const am_linkage* linkage, const am_system* system, int k,
                     am_function** out) {
  return guarded([&] {
    require(linkage, "linkage");
    require(system, "system");
    require(out, "out");
    *out = new am_function{extract_set_function(linkage->linkage, ranked(system->family, k))};
  });
}

am_status am_extend_to_maximal(const am_function* function, const am_linkage* linkage,
                               am_function** out) {
  return guarded([&] {
    require(function, "function");
    require(linkage, "linkage");
    require(out, "out");
    *out = new am_function{extend_to_maximal(function->function, linkage->linkage)};
  });
}

am_status am_represents(const am_linkage* linkage, const am_function* function, int* out) {
  return guarded([&] {
    require(linkage, "linkage");
    require(function, "function");
    require(out, "out");
    *out = represents(linkage->linkage, function->function);
  });
}

am_status am_dominates_canonical(const am_linkage* linkage, const am_function* function,
                                 int* out) {
  return guarded([&] {
    require(linkage, "linkage");
    require(function, "function");
    require(out, "out");
    *out = dominates_canonical(linkage->linkage, function->function);
  });
}

am_status am_counterexample_linkage(const am_system* system, int k, am_linkage** out,
                                    char** witness) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    auto cex = counterexample_linkage(system->family, k);
    if (witness) {
      *witness = dup_string(interval_violation_to_json(
                                system->family.ground(),
                                IntervalViolation{cex.lower_set, cex.upper_set, cex.element})
                                .dump());
    }
    *out = new am_linkage{std::move(cex.linkage)};
  });
}

void am_verify_options_init(am_verify_options* options) {
  if (options == nullptr) return;
  const VerifyOptions defaults;
  *options = am_verify_options{};
  options->n = 3;
  options->family_class = nullptr;
  options->k = -1;
  options->seed = 1;
  options->samples = defaults.samples;
  options->codomain_max = defaults.codomain_max;
  options->raw_min = defaults.raw_min;
  options->raw_max = defaults.raw_max;
  options->function_cap = defaults.function_cap;
  options->include_timing = 1;
}

namespace {

EnumerationSpec make_spec(uint32_t n, const char* family_class, int k) {
  EnumerationSpec spec;
  spec.n = n;
  if (family_class != nullptr) {
    const auto c = parse_family_class(family_class);
    if (!c) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("unknown family class \"") + family_class + "\"");
    }
    spec.family_class = *c;
  }
  if (k >= 0) spec.k = k;
  return spec;
}

struct StopEnumeration {};

}  // namespace

am_status am_enumerate(uint32_t n, const char* family_class, int k, am_family_visitor visitor,
                       void* user_data, uint64_t* count) {
  return guarded([&] {
    const EnumerationSpec spec = make_spec(n, family_class, k);
    std::uint64_t visited = 0;
    try {
      enumerate_families(spec, [&](const SetFamily& family) {
        ++visited;
        if (visitor && visitor(set_system_to_json(family).dump().c_str(), user_data) != 0) {
          throw StopEnumeration{};
        }
      });
    } catch (const StopEnumeration&) {
    }
    if (count) *count = visited;
  });
}

am_status am_verify(const am_verify_options* options, char** report_json, int* all_passed) {
  return guarded([&] {
    require(options, "options");
    const EnumerationSpec spec = make_spec(options->n, options->family_class, options->k);
    if (options->samples > (uint64_t{1} << 32)) {
      throw Error(ErrorCode::kGuardrailExceeded, "too many samples per system");
    }
    VerifyOptions opts;
    opts.samples = static_cast<std::size_t>(options->samples);
    opts.codomain_max = options->codomain_max;
    opts.raw_min = options->raw_min;
    opts.raw_max = options->raw_max;
    opts.function_cap = options->function_cap;
    const auto reports = verify_all(spec, options->seed, opts);
    const json doc = reports_to_json(reports, options->include_timing != 0);
    if (report_json) *report_json = dup_string(dump_canonical(doc));
    if (all_passed) *all_passed = doc.at("passed").get<bool>();
  });
}

am_status am_example_files(char** system_json, char** linkage_json, char** function_json) {
  return guarded([&] {
    const GroundSet ground = GroundSet::numbered(2);
    const SetFamily family = SetFamily::power_set(ground);
    const std::size_t two = 1;
    const auto pi = LinkageFunction::generate(ground, [&](std::size_t x, Mask m) {
      return x == two && m == 0 ? 2 : 1;
    });
    const SetFunction f = extract_set_function(pi, RankedSystem(family));
    if (system_json) *system_json = dup_string(dump_canonical(set_system_to_json(family)));
    if (linkage_json) *linkage_json = dup_string(dump_canonical(linkage_to_json(pi)));
    if (function_json) *function_json = dup_string(dump_canonical(set_function_to_json(f)));
  });
}

}  // extern "C"
