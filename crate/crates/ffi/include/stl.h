#ifndef STL_H
#define STL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StlStatus {
  STL_STATUS_OK = 0,
  STL_STATUS_NULL_POINTER = 1,
  STL_STATUS_INVALID_ARGUMENT = 2,
  STL_STATUS_CAPACITY = 3,
  STL_STATUS_PARSE = 4,
  STL_STATUS_INVALID_UTF8 = 5,
  STL_STATUS_OVERFLOW = 6,
  STL_STATUS_BUFFER_TOO_SMALL = 7,
  STL_STATUS_PANIC = 8,
} StlStatus;

// Opaque digraph handle.
typedef struct StlDigraph StlDigraph;

// Opaque search report handle.
typedef struct StlSearchReport StlSearchReport;

typedef struct StlInvariants {
  int64_t le;
  int64_t m1;
  int64_t c2;
  int64_t e;
} StlInvariants;

typedef uint32_t StlQuantity;

typedef struct StlExactValue {
  int64_t value;
  int64_t numerator;
  int64_t denominator;
} StlExactValue;

typedef uint32_t StlObjective;

typedef uint32_t StlScope;

#define STL_OBJECTIVE_LE 0

#define STL_OBJECTIVE_M1 1

#define STL_OBJECTIVE_ARCS 2

#define STL_SCOPE_ALL 0

#define STL_SCOPE_CONNECTED_ONLY 1

#define STL_QUANTITY_EX_LE 0

#define STL_QUANTITY_EX_ARCS 1

#define STL_QUANTITY_EX_M1 2

#define STL_QUANTITY_EX_CLIQUE 3

#define STL_QUANTITY_EX_COMPLETE_DIGRAPH 4

#define STL_QUANTITY_EX_TOURNAMENT 5

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failed call on this thread; empty after a
// successful call. Valid until the next call on the same thread.
const char *stl_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void stl_string_free(char *s);

// Empty digraph on `n` vertices.
//
// # Safety
// `out_graph` must be valid for writes.
enum StlStatus stl_digraph_new(size_t n, struct StlDigraph **out_graph);

// # Safety
// `g` must be null or a handle from this library, not yet freed.
void stl_digraph_free(struct StlDigraph *g);

// # Safety
// `g` must be a live handle not used concurrently.
enum StlStatus stl_digraph_add_arc(struct StlDigraph *g, size_t u, size_t v);

// Builds a family member from its spec string, e.g. `fnk:n=5,k=3,s=2`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out_graph` valid for writes.
enum StlStatus stl_digraph_from_family(const char *spec, struct StlDigraph **out_graph);

// # Safety
// `text` must be a NUL-terminated string; `out_graph` valid for writes.
enum StlStatus stl_digraph_parse_arclist(const char *text, struct StlDigraph **out_graph);

// # Safety
// `g` must be a live handle; `out_text` valid for writes.
enum StlStatus stl_digraph_to_arclist(const struct StlDigraph *g, char **out_text);

// # Safety
// `g` must be a live handle; the out pointers valid for writes.
enum StlStatus stl_digraph_size(const struct StlDigraph *g, size_t *out_n, size_t *out_e);

// # Safety
// `g` must be a live handle; `out_inv` valid for writes.
enum StlStatus stl_invariants(const struct StlDigraph *g, struct StlInvariants *out_inv);

// `trace(L²)` by explicit matrix multiplication.
//
// # Safety
// `g` must be a live handle; `out_trace` valid for writes.
enum StlStatus stl_trace_l_squared(const struct StlDigraph *g, int64_t *out_trace);

// Writes the outdegree of each vertex, by label, into `buf[0..n]`.
//
// # Safety
// `g` must be a live handle; `buf` valid for `buf_len` writes.
enum StlStatus stl_out_degrees(const struct StlDigraph *g, uint32_t *buf, size_t buf_len);

// Looks for a directed cycle of exactly `len` vertices. On success
// `*out_found` says whether one exists; if so its vertices, in cycle order,
// are written to `buf[0..len]`.
//
// # Safety
// `g` must be a live handle; `out_found` valid for writes; `buf` valid for
// `buf_len` writes.
enum StlStatus stl_find_cycle(const struct StlDigraph *g,
                              size_t len,
                              bool *out_found,
                              uint32_t *buf,
                              size_t buf_len);

// # Safety
// `g` and `h` must be live handles; `out_iso` valid for writes.
enum StlStatus stl_are_isomorphic(const struct StlDigraph *g,
                                  const struct StlDigraph *h,
                                  bool *out_iso);

// Exact closed-form value. `k` is ignored for `STL_QUANTITY_EX_M1`.
//
// # Safety
// `out_value` must be valid for writes.
enum StlStatus stl_formula(StlQuantity quantity,
                           size_t n,
                           size_t k,
                           struct StlExactValue *out_value);

// Exhaustive extremal search. `jobs` of 0 means one worker.
//
// # Safety
// `out_report` must be valid for writes.
enum StlStatus stl_search(size_t n,
                          size_t forbidden_len,
                          StlObjective objective,
                          StlScope scope,
                          size_t jobs,
                          struct StlSearchReport **out_report);

// # Safety
// `report` must be null or a handle from [`stl_search`], not yet freed.
void stl_report_free(struct StlSearchReport *report);

// # Safety
// `report` must be a live handle; the out pointers valid for writes.
enum StlStatus stl_report_summary(const struct StlSearchReport *report,
                                  int64_t *out_max_value,
                                  size_t *out_witness_count);

// Copies witness `index` (in canonical order) into a new digraph handle.
//
// # Safety
// `report` must be a live handle; `out_graph` valid for writes.
enum StlStatus stl_report_witness(const struct StlSearchReport *report,
                                  size_t index,
                                  struct StlDigraph **out_graph);

// The report as JSON. With `include_timing` false, `elapsed_ms` is written
// as 0 so the text is reproducible.
//
// # Safety
// `report` must be a live handle; `out_json` valid for writes.
enum StlStatus stl_report_to_json(const struct StlSearchReport *report,
                                  bool include_timing,
                                  char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* STL_H */
