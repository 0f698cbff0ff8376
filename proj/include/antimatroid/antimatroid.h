/*
 * Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the antimatroid library.
 *
 * Objects are opaque handles created by *_from_json / operation calls and
 * released with the matching *_free function. Every call returns an
 * am_status; on failure am_last_error() describes the problem for the
 * calling thread. Strings returned through char** out-parameters are
 * heap-allocated and must be released with am_string_free().
 *
 * Boolean results are reported as int (0 or 1).
 */
#ifndef ANTIMATROID_ANTIMATROID_H_
#define ANTIMATROID_ANTIMATROID_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ANTIMATROID_BUILDING_LIBRARY)
#define AM_API __attribute__((visibility("default")))
#else
#define AM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define AM_ABI_VERSION 1u

typedef enum am_status {
  AM_OK = 0,
  AM_ERR_INVALID_ARGUMENT = 1,
  AM_ERR_PARSE = 2,
  AM_ERR_GROUND_SET_MISMATCH = 3,
  AM_ERR_NOT_FEASIBLE = 4,
  AM_ERR_NOT_UNION_CLOSED = 5,
  AM_ERR_NO_FEASIBLE_SUBSET = 6,
  AM_ERR_INVALID_TRUNCATION_LEVEL = 7,
  AM_ERR_NOT_TRUNCATED_ANTIMATROID = 8,
  AM_ERR_EMPTY_CONTINUATION_SET = 9,
  AM_ERR_MISSING_VALUE = 10,
  AM_ERR_NOT_IN_DOMAIN = 11,
  AM_ERR_EMPTY_FAMILY = 12,
  AM_ERR_EMPTY_INTERVAL = 13,
  AM_ERR_NOT_A_REPRESENTATION = 14,
  AM_ERR_NO_VIOLATION = 15,
  AM_ERR_GUARDRAIL_EXCEEDED = 16,
  AM_ERR_CONSISTENCY_VIOLATION = 17,
  AM_ERR_INTERNAL = 99
} am_status;

typedef struct am_system am_system;     /* set system (E, F) */
typedef struct am_function am_function; /* set function on a ranked system */
typedef struct am_linkage am_linkage;   /* linkage table on E x 2^E */

typedef struct am_system_properties {
  int accessible;
  int exchange;
  int union_closed;
  int interval;
  int antimatroid;
  int rank;
  size_t ground_size;
  size_t member_count;
} am_system_properties;

typedef struct am_verify_options {
  uint32_t n;
  const char* family_class; /* e.g. "antimatroid"; NULL means "antimatroid" */
  int k;                    /* rank filter, < 0 for none */
  uint64_t seed;
  uint64_t samples;         /* random linkage tables per system */
  int64_t codomain_max;     /* set functions take values 0..codomain_max */
  int64_t raw_min;
  int64_t raw_max;
  uint64_t function_cap;
  int include_timing;
} am_verify_options;

/* Called once per enumerated family with its set-system JSON; return
 * nonzero to stop early. */
typedef int (*am_family_visitor)(const char* system_json, void* user_data);

AM_API uint32_t am_abi_version(void);
AM_API const char* am_version_string(void);
AM_API const char* am_status_name(am_status status);
AM_API const char* am_last_error(void);
AM_API void am_string_free(char* text);

/* ---- set systems ---- */
AM_API am_status am_system_from_json(const char* text, am_system** out);
AM_API void am_system_free(am_system* system);
AM_API am_status am_system_to_json(const am_system* system, char** out);
AM_API am_status am_system_properties_get(const am_system* system, am_system_properties* out);
/* k-truncated interval property; requires 1 <= k <= rank. */
AM_API am_status am_system_truncated_interval(const am_system* system, int k, int* out);
/* First interval-property violation as {"A","B","a"} JSON, or *out = NULL
 * when none. k == 0 checks the untruncated property. */
AM_API am_status am_system_interval_violation(const am_system* system, int k, char** out);
AM_API am_status am_system_truncate(const am_system* system, int k, am_system** out);
/* Label lists use JSON arrays, e.g. "[\"1\",\"2\"]". */
AM_API am_status am_system_continuations(const am_system* system, const char* set_json,
                                         char** out);
AM_API am_status am_system_basis(const am_system* system, const char* set_json, char** out);

/* ---- set functions ----
 * k selects the truncation level of the system (k <= 0: the system's rank);
 * the function lives on the k-truncation. */
AM_API am_status am_function_from_json(const am_system* system, int k, const char* text,
                                       am_function** out);
AM_API void am_function_free(am_function* function);
AM_API am_status am_function_to_json(const am_function* function, char** out);
/* *holds = 1 if quasi-concave; otherwise *violation receives {"X","Y","Z"}
 * (pass NULL to skip). */
AM_API am_status am_function_quasi_concave(const am_function* function, int* holds,
                                           char** violation);
AM_API am_status am_function_equal(const am_function* a, const am_function* b, int* out);

/* ---- linkage functions ----
 * system may be NULL when the file declares its own "ground". */
AM_API am_status am_linkage_from_json(const am_system* system, const char* text,
                                      am_linkage** out);
AM_API void am_linkage_free(am_linkage* linkage);
AM_API am_status am_linkage_to_json(const am_linkage* linkage, char** out);
AM_API am_status am_linkage_monotone(const am_linkage* linkage, int* holds, char** violation);
AM_API am_status am_linkage_meet(const am_linkage* a, const am_linkage* b, am_linkage** out);
AM_API am_status am_linkage_equal(const am_linkage* a, const am_linkage* b, int* out);
AM_API am_status am_linkage_random_monotone(const am_system* system, uint64_t seed,
                                            int64_t lo, int64_t hi, am_linkage** out);

/* ---- duality ---- */
AM_API am_status am_dualize(const am_function* function, am_linkage** out);
AM_API am_status am_extract(const am_linkage* linkage, const am_system* system, int k,
                            am_function** out);
AM_API am_status am_extend_to_maximal(const am_function* function, const am_linkage* linkage,
                                      am_function** out);
AM_API am_status am_represents(const am_linkage* linkage, const am_function* function,
                               int* out);
AM_API am_status am_dominates_canonical(const am_linkage* linkage, const am_function* function,
                                        int* out);
/* witness receives {"A","B","a"}. */
AM_API am_status am_counterexample_linkage(const am_system* system, int k, am_linkage** out,
                                           char** witness);

/* ---- theorem lab ---- */
AM_API void am_verify_options_init(am_verify_options* options);
AM_API am_status am_enumerate(uint32_t n, const char* family_class, int k,
                              am_family_visitor visitor, void* user_data, uint64_t* count);
AM_API am_status am_verify(const am_verify_options* options, char** report_json,
                           int* all_passed);
/* Two-element ground set with the power set, the linkage that is 2 at
 * (2, {}) and 1 elsewhere, and the set function it induces. */
AM_API am_status am_example_files(char** system_json, char** linkage_json,
                                  char** function_json);

#ifdef __cplusplus
}
#endif

#endif /* ANTIMATROID_ANTIMATROID_H_ */
