#ifndef EVOLALG_H
#define EVOLALG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum EvolEngine {
  EVOL_ENGINE_LINEAR = 0,
  EVOL_ENGINE_GROEBNER = 1,
} EvolEngine;

typedef enum EvolStatus {
  EVOL_STATUS_OK = 0,
  EVOL_STATUS_NULL_POINTER = 1,
  EVOL_STATUS_INVALID_UTF8 = 2,
  EVOL_STATUS_PARSE_ERROR = 3,
  EVOL_STATUS_INVALID_ARGUMENT = 4,
  EVOL_STATUS_PRECONDITION = 5,
  /**
   * A configured bound or engine limit was hit; the answer is unknown.
   */
  EVOL_STATUS_ENGINE_LIMIT = 6,
  EVOL_STATUS_INTERNAL = 7,
  EVOL_STATUS_PANIC = 8,
} EvolStatus;

typedef enum EvolState {
  EVOL_STATE_NO = 0,
  EVOL_STATE_YES = 1,
  EVOL_STATE_UNDETERMINED = 2,
} EvolState;

/**
 * Opaque algebra handle.
 */
typedef struct EvolAlgebra EvolAlgebra;

/**
 * Analysis options. A null pointer means the defaults from
 * `evolalg_options_default`.
 */
typedef struct EvolOptions {
  enum EvolEngine engine;
  size_t support_bound;
  uint32_t height_cap;
} EvolOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

struct EvolOptions evolalg_options_default(void);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next library call on the same thread.
 */
const char *evolalg_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *evolalg_version(void);

/**
 * Parses an algebra file (JSON text).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum EvolStatus evolalg_algebra_from_json(const char *json, struct EvolAlgebra **out);

/**
 * Builds an algebra from `n*n` row-major structure constants
 * `num[k] / den[k]`; column `i` holds the coordinates of `e_i^2`.
 *
 * # Safety
 * `num` and `den` must point to `n*n` readable values and `out` must be valid.
 */
enum EvolStatus evolalg_algebra_from_matrix(size_t n,
                                            const int64_t *num,
                                            const int64_t *den,
                                            struct EvolAlgebra **out);

/**
 * # Safety
 * `a` must be null or a handle from this library that was not freed yet.
 */
void evolalg_algebra_free(struct EvolAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum EvolStatus evolalg_algebra_dim(const struct EvolAlgebra *a, size_t *out);

/**
 * Serializes the algebra back to the JSON file format.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum EvolStatus evolalg_algebra_to_json(const struct EvolAlgebra *a, char **out);

/**
 * Full JSON report, the same document the command line prints with `--json`.
 *
 * # Safety
 * `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
 */
enum EvolStatus evolalg_analyze_json(const struct EvolAlgebra *a,
                                     const struct EvolOptions *opts,
                                     char **out);

/**
 * Graphviz text for the graph of the natural basis.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum EvolStatus evolalg_graph_dot(const struct EvolAlgebra *a, char **out);

/**
 * `Yes` when the algebra has a nonzero absolute zero divisor.
 *
 * # Safety
 * `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
 */
enum EvolStatus evolalg_degeneracy(const struct EvolAlgebra *a,
                                   const struct EvolOptions *opts,
                                   enum EvolState *out);

/**
 * # Safety
 * `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
 */
enum EvolStatus evolalg_semiprime(const struct EvolAlgebra *a,
                                  const struct EvolOptions *opts,
                                  enum EvolState *out);

/**
 * # Safety
 * `a` must be a live handle, `opts` null or valid, and `out` a valid pointer.
 */
enum EvolStatus evolalg_prime(const struct EvolAlgebra *a,
                              const struct EvolOptions *opts,
                              enum EvolState *out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum EvolStatus evolalg_von_neumann_regular(const struct EvolAlgebra *a, bool *out);

/**
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum EvolStatus evolalg_centroid_dim(const struct EvolAlgebra *a, size_t *out);

/**
 * Number of connected components of the graph.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum EvolStatus evolalg_component_count(const struct EvolAlgebra *a, size_t *out);

/**
 * Stabilizing index of the upper annihilating series.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum EvolStatus evolalg_annihilator_index(const struct EvolAlgebra *a, size_t *out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library that was not freed yet.
 */
void evolalg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EVOLALG_H */
