#ifndef LCEC_H
#define LCEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
enum LcecStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  LCEC_STATUS_OK = 0,
  LCEC_STATUS_NULL_POINTER = -1,
  LCEC_STATUS_INVALID_UTF8 = -2,
  LCEC_STATUS_PARSE_ERROR = -3,
  LCEC_STATUS_INVALID_ARGUMENT = -4,
  LCEC_STATUS_INTERNAL = -5,
  LCEC_STATUS_PANIC = -6,
};
#ifndef __cplusplus
typedef int32_t LcecStatus;
#endif // __cplusplus

/**
 * An undirected simple graph.
 */
typedef struct LcecGraph LcecGraph;

/**
 * Outcome of recognition: a colouring or a non-colourability certificate.
 */
typedef struct LcecResult LcecResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next failing call on the thread.
 */
const char *lcec_last_error(void);

/**
 * Parses the edge-list text format into a new graph.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer to
 * writable storage for one handle.
 */
int32_t lcec_graph_parse(const char *text, struct LcecGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2 * m`
 * consecutive endpoints.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (it may be null when
 * `m == 0`) and `out` must be valid for one handle.
 */
int32_t lcec_graph_from_edges(size_t n, const size_t *edges, size_t m, struct LcecGraph **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
size_t lcec_graph_vertex_count(const struct LcecGraph *g);

/**
 * Number of edges, or 0 for a null handle. Edge ids run over `0..m` in
 * input order, duplicates removed.
 *
 * # Safety
 * `g` must be null or a live handle from this library.
 */
size_t lcec_graph_edge_count(const struct LcecGraph *g);

/**
 * Writes the endpoints of edge `id`.
 *
 * # Safety
 * `g` must be a live handle; `u` and `v` must be writable.
 */
int32_t lcec_graph_edge(const struct LcecGraph *g, size_t id, size_t *u, size_t *v);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void lcec_graph_free(struct LcecGraph *g);

/**
 * Runs the auxiliary-graph recognizer.
 *
 * # Safety
 * `g` must be a live graph handle and `out` valid for one handle.
 */
int32_t lcec_recognize(const struct LcecGraph *g, struct LcecResult **out);

/**
 * 1 when the graph is colourable, 0 when not, negative status on error.
 *
 * # Safety
 * `r` must be null or a live result handle.
 */
int32_t lcec_result_is_colourable(const struct LcecResult *r);

/**
 * Colour (1 or 2) of edge `id` in the colouring of a colourable result.
 *
 * # Safety
 * `r` must be a live result handle and `colour` writable.
 */
int32_t lcec_result_colour(const struct LcecResult *r, size_t id, uint8_t *colour);

/**
 * JSON document of the result: status, colouring or odd cycle, count and
 * (when not colourable) the kaleidoscope. Owned by the result.
 *
 * # Safety
 * `r` must be null or a live result handle.
 */
const char *lcec_result_json(const struct LcecResult *r);

/**
 * Releases a result. Null is ignored.
 *
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void lcec_result_free(struct LcecResult *r);

/**
 * Checks a colouring given as one colour per edge id. Writes 1 to `valid`
 * when locally complete, else 0.
 *
 * # Safety
 * `g` must be a live graph handle, `colours` must point to `len`
 * readable bytes and `valid` must be writable.
 */
int32_t lcec_verify_colouring(const struct LcecGraph *g,
                              const uint8_t *colours,
                              size_t len,
                              int32_t *valid);

/**
 * Runs the structural dispatcher and returns its report as a newly
 * allocated JSON string, released with [`lcec_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
int32_t lcec_structural_json(const struct LcecGraph *g, char **out);

/**
 * Releases a string allocated by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void lcec_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCEC_H */
