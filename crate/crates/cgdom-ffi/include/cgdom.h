/* C interface to the cgdom library: finite groups, commuting graphs, exact domination numbers. */

#pragma once

/* Generated with cbindgen:0.26.0 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which group-derived graph to build.
 */
typedef enum CgdomGraphKind {
  CGDOM_GRAPH_KIND_COMMUTING = 0,
  CGDOM_GRAPH_KIND_PROPER_COMMUTING = 1,
  CGDOM_GRAPH_KIND_ENHANCED_POWER = 2,
  CGDOM_GRAPH_KIND_PROPER_ENHANCED_POWER = 3,
} CgdomGraphKind;

/**
 * Status code returned by every fallible function.
 */
typedef enum CgdomStatus {
  CGDOM_STATUS_OK = 0,
  CGDOM_STATUS_NULL_POINTER = 1,
  CGDOM_STATUS_INVALID_UTF8 = 2,
  CGDOM_STATUS_INVALID_ARGUMENT = 3,
  CGDOM_STATUS_SIZE_LIMIT = 4,
  CGDOM_STATUS_NOT_A_GROUP = 5,
  CGDOM_STATUS_PARSE_ERROR = 6,
  CGDOM_STATUS_NOT_APPLICABLE = 7,
  CGDOM_STATUS_IO_ERROR = 8,
  /**
   * An internal invariant failed; the operation was abandoned safely.
   */
  CGDOM_STATUS_INTERNAL = 9,
} CgdomStatus;

/**
 * Opaque simple-graph handle.
 */
typedef struct CgdomGraph CgdomGraph;

/**
 * Opaque finite group handle.
 */
typedef struct CgdomGroup CgdomGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; never freed.
 */
const char *cgdom_version(void);

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread; do not free it.
 */
const char *cgdom_last_error(void);

/**
 * Releases a string returned through any `out` parameter here.
 *
 * # Safety
 * `s` must have been produced by this library and not freed already.
 */
void cgdom_string_free(char *s);

/**
 * Builds a group from a family descriptor such as "dihedral(10)" or
 * "direct(quaternion(8),cyclic(3))". `cap` bounds the order; 0 means the
 * default cap (4096).
 *
 * # Safety
 * `descriptor` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CgdomStatus cgdom_group_build(const char *descriptor, uintptr_t cap, struct CgdomGroup **out);

/**
 * Parses the group file format (name/order/table/labels); the table is
 * validated and any axiom violation is an error.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CgdomStatus cgdom_group_from_json(const char *json, uintptr_t cap, struct CgdomGroup **out);

/**
 * # Safety
 * `group` must come from a constructor here and not be freed twice.
 */
void cgdom_group_free(struct CgdomGroup *group);

/**
 * # Safety
 * `group` and `out` must be valid pointers.
 */
enum CgdomStatus cgdom_group_order(const struct CgdomGroup *group, uint32_t *out);

/**
 * The canonical construction descriptor.
 *
 * # Safety
 * `group` and `out` must be valid pointers; free the result with
 * `cgdom_string_free`.
 */
enum CgdomStatus cgdom_group_descriptor(const struct CgdomGroup *group, char **out);

/**
 * The group file format (same as the CLI `make` output).
 *
 * # Safety
 * `group` and `out` must be valid pointers; free the result with
 * `cgdom_string_free`.
 */
enum CgdomStatus cgdom_group_to_json(const struct CgdomGroup *group, char **out);

/**
 * All derived invariants (center size, centralizer counts, maximal cyclic
 * counts, AC and nilpotency flags, ...) as a JSON object.
 *
 * # Safety
 * `group` and `out` must be valid pointers; free the result with
 * `cgdom_string_free`.
 */
enum CgdomStatus cgdom_group_invariants_json(const struct CgdomGroup *group, char **out);

/**
 * Builds one of the group-derived graphs.
 *
 * # Safety
 * `group` and `out` must be valid pointers.
 */
enum CgdomStatus cgdom_graph_build(const struct CgdomGroup *group,
                                   enum CgdomGraphKind kind,
                                   struct CgdomGraph **out);

/**
 * # Safety
 * `graph` must come from `cgdom_graph_build` and not be freed twice.
 */
void cgdom_graph_free(struct CgdomGraph *graph);

/**
 * # Safety
 * `graph` and `out` must be valid pointers.
 */
enum CgdomStatus cgdom_graph_vertex_count(const struct CgdomGraph *graph, uint32_t *out);

/**
 * # Safety
 * `graph` and `out` must be valid pointers.
 */
enum CgdomStatus cgdom_graph_edge_count(const struct CgdomGraph *graph, uint64_t *out);

/**
 * Graph export format ({n, edges, labels}).
 *
 * # Safety
 * `graph` and `out` must be valid pointers; free the result with
 * `cgdom_string_free`.
 */
enum CgdomStatus cgdom_graph_to_json(const struct CgdomGraph *graph, char **out);

/**
 * Exact domination (total = false) or total domination (total = true) with
 * certificate, as JSON: value, existence, method, bounds, node count, and the
 * witness as vertex labels. `budget_secs` of 0 means no time limit.
 *
 * # Safety
 * `graph` and `out` must be valid pointers; free the result with
 * `cgdom_string_free`.
 */
enum CgdomStatus cgdom_gamma_json(const struct CgdomGraph *graph,
                                  bool total,
                                  uint64_t budget_secs,
                                  char **out);

/**
 * Runs the whole theorem suite for one group and returns the report as JSON
 * (the same shape the CLI's verify report uses per group).
 *
 * # Safety
 * `group` and `out` must be valid pointers; free the result with
 * `cgdom_string_free`.
 */
enum CgdomStatus cgdom_group_suite_json(const struct CgdomGroup *group,
                                        uint64_t budget_secs,
                                        char **out);

/**
 * Evaluates a parameterized closed-form prediction. `id` is one of suzuki,
 * pq, p4, pgl2, psl2, spectrum; `params` is the space-separated integer
 * parameter list (for example id = "pq", params = "3 7").
 *
 * # Safety
 * `id`, `params` and `out` must be valid pointers; free the result with
 * `cgdom_string_free`.
 */
enum CgdomStatus cgdom_formula_json(const char *id, const char *params, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus
