#ifndef ZF_H
#define ZF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The numeric values of the first six match the exit codes
 * of the `zf` command line tool.
 */
typedef enum ZfStatus {
  ZF_STATUS_OK = 0,
  ZF_STATUS_VERIFICATION_FAILED = 1,
  ZF_STATUS_PARSE_ERROR = 2,
  ZF_STATUS_INVALID_DECOMPOSITION = 3,
  ZF_STATUS_INTERNAL = 4,
  ZF_STATUS_BUDGET_EXCEEDED = 5,
  ZF_STATUS_NULL_POINTER = 6,
  ZF_STATUS_INVALID_ARGUMENT = 7,
} ZfStatus;

typedef struct ZfDecomposition ZfDecomposition;

typedef struct ZfGraph ZfGraph;

typedef struct ZfResult ZfResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread, or an empty string.
 * The pointer is valid until the next failing call on the thread.
 */
const char *zf_last_error(void);

/**
 * Static name of a status code.
 */
const char *zf_status_name(enum ZfStatus status);

/**
 * Parses a graph in edge-list format (`n m` header, then `m` lines `u v`).
 *
 * # Safety
 * `text` must point to `len` readable bytes and `out` must be writable.
 */
enum ZfStatus zf_graph_parse(const uint8_t *text, size_t len, struct ZfGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` endpoint ids.
 *
 * # Safety
 * `edges` must point to `2 * m` readable ids and `out` must be writable.
 */
enum ZfStatus zf_graph_from_edges(size_t n, const size_t *edges, size_t m, struct ZfGraph **out);

/**
 * # Safety
 * `graph` must be null or a handle from this library not yet freed.
 */
void zf_graph_free(struct ZfGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t zf_graph_vertex_count(const struct ZfGraph *graph);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t zf_graph_edge_count(const struct ZfGraph *graph);

/**
 * Parses and validates a path decomposition of `graph` (one bag per line).
 *
 * # Safety
 * `graph` must be a live handle, `text` must point to `len` readable bytes
 * and `out` must be writable.
 */
enum ZfStatus zf_decomposition_parse(const struct ZfGraph *graph,
                                     const uint8_t *text,
                                     size_t len,
                                     struct ZfDecomposition **out);

/**
 * Minimum-width decomposition, for graphs of at most 12 vertices.
 *
 * # Safety
 * `graph` must be a live handle and `out` must be writable.
 */
enum ZfStatus zf_decomposition_exact(const struct ZfGraph *graph, struct ZfDecomposition **out);

/**
 * Width of a decomposition, or 0 for a null handle.
 *
 * # Safety
 * `pd` must be null or a live handle.
 */
size_t zf_decomposition_width(const struct ZfDecomposition *pd);

/**
 * # Safety
 * `pd` must be null or a handle from this library not yet freed.
 */
void zf_decomposition_free(struct ZfDecomposition *pd);

/**
 * Runs the approximation on every component and self-verifies the result.
 * With a null `pd`, components of at most 12 vertices are decomposed
 * exactly.
 *
 * # Safety
 * `graph` must be a live handle, `pd` null or a live decomposition of that
 * graph, and `out` writable.
 */
enum ZfStatus zf_solve(const struct ZfGraph *graph,
                       const struct ZfDecomposition *pd,
                       struct ZfResult **out);

/**
 * # Safety
 * `result` must be null or a handle from this library not yet freed.
 */
void zf_result_free(struct ZfResult *result);

/**
 * Borrowed view of the zero forcing set, ascending.
 *
 * # Safety
 * `result` must be a live handle; `data` and `len` must be writable.
 */
enum ZfStatus zf_result_zero_forcing_set(const struct ZfResult *result,
                                         const size_t **data,
                                         size_t *len);

/**
 * Number of forts in the packing.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
size_t zf_result_fort_count(const struct ZfResult *result);

/**
 * Borrowed view of fort `index`, ascending.
 *
 * # Safety
 * `result` must be a live handle; `data` and `len` must be writable.
 */
enum ZfStatus zf_result_fort(const struct ZfResult *result,
                             size_t index,
                             const size_t **data,
                             size_t *len);

/**
 * Borrowed view of the forcing arc set as `tail, head` pairs; `len`
 * receives the number of arcs.
 *
 * # Safety
 * `result` must be a live handle; `data` and `len` must be writable.
 */
enum ZfStatus zf_result_arcs(const struct ZfResult *result, const size_t **data, size_t *len);

/**
 * Width of the decomposition the result was computed from.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
size_t zf_result_width(const struct ZfResult *result);

/**
 * The result's certificate as a NUL-terminated JSON document, or null for
 * a null handle.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
const char *zf_result_certificate(const struct ZfResult *result);

/**
 * Checks a certificate against `graph`. Returns `Ok` when every claim
 * holds, `VerificationFailed` when one does not (the report is then in
 * [`zf_last_error`]) and `ParseError` for a malformed certificate.
 *
 * # Safety
 * `graph` must be a live handle and `json` must point to `len` readable
 * bytes.
 */
enum ZfStatus zf_verify_certificate(const struct ZfGraph *graph, const uint8_t *json, size_t len);

/**
 * Whether `set` (of `len` ids) forces the whole graph.
 *
 * # Safety
 * `graph` must be a live handle, `set` must point to `len` readable ids
 * and `out` must be writable.
 */
enum ZfStatus zf_is_zero_forcing_set(const struct ZfGraph *graph,
                                     const size_t *set,
                                     size_t len,
                                     bool *out);

/**
 * Exact zero forcing number, for graphs of at most 16 vertices.
 *
 * # Safety
 * `graph` must be a live handle and `out` must be writable.
 */
enum ZfStatus zf_exact_zero_forcing_number(const struct ZfGraph *graph, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZF_H */
