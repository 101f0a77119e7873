#ifndef B3QUOT_H
#define B3QUOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum B3Status {
  B3_STATUS_OK = 0,
  B3_STATUS_NULL_POINTER = 1,
  B3_STATUS_INVALID_UTF8 = 2,
  B3_STATUS_PARSE = 3,
  B3_STATUS_INVALID_PARAMETERS = 4,
  B3_STATUS_MISSING_ROOT = 5,
  B3_STATUS_INVALID_SPEC = 6,
  B3_STATUS_CONSTRUCTION_CHECK = 7,
  B3_STATUS_ARITHMETIC = 8,
  B3_STATUS_OUT_OF_RANGE = 9,
  B3_STATUS_PANIC = 10,
} B3Status;

/**
 * A number field `Q[t]/(m)` plus the root hints used when searching for roots.
 */
typedef struct B3Context B3Context;

/**
 * A constructed representation.
 */
typedef struct B3Representation B3Representation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread (empty after a success). Do not free.
 */
const char *b3_last_error(void);

/**
 * Library version as a static string. Do not free.
 */
const char *b3_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void b3_string_free(char *s);

/**
 * Creates a field context by name: `Q`, `gaussian`, `zeta5`, `zeta120`, `cyclotomic:N`,
 * `sqrt:D` or `modulus:c0,c1,...` (ascending rational coefficients, monic, squarefree).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum B3Status b3_context_new(const char *name, struct B3Context **out);

/**
 * # Safety
 * `ctx` must come from `b3_context_new` and not be freed twice. Null is ignored.
 */
void b3_context_free(struct B3Context *ctx);

/**
 * Degree of the field over `Q`, or 0 for a null handle.
 *
 * # Safety
 * `ctx` must be null or a live context handle.
 */
size_t b3_context_degree(const struct B3Context *ctx);

/**
 * Builds a representation from a JSON spec `{"dim": d, "X": [...], "h"?, "f"?, "variant"?}`.
 *
 * # Safety
 * `ctx` must be a live context; `spec_json` a NUL-terminated string; `out` writable.
 */
enum B3Status b3_representation_build(const struct B3Context *ctx,
                                      const char *spec_json,
                                      struct B3Representation **out);

/**
 * # Safety
 * `rep` must come from `b3_representation_build` and not be freed twice. Null is ignored.
 */
void b3_representation_free(struct B3Representation *rep);

/**
 * Dimension of a representation, or 0 for a null handle.
 *
 * # Safety
 * `rep` must be null or a live handle.
 */
size_t b3_representation_dim(const struct B3Representation *rep);

/**
 * Entry `(row, col)` (0-based) of `g1` (`generator = 1`) or `g2` (`generator = 2`).
 *
 * # Safety
 * `rep` must be a live handle; `out` writable.
 */
enum B3Status b3_representation_entry(const struct B3Representation *rep,
                                      uint32_t generator,
                                      size_t row,
                                      size_t col,
                                      char **out);

/**
 * Full JSON of a representation (spec and both matrices).
 *
 * # Safety
 * `rep` must be a live handle; `out` writable.
 */
enum B3Status b3_representation_to_json(const struct B3Representation *rep, char **out);

/**
 * Scalar by which `(g1 g2)^3` acts.
 *
 * # Safety
 * `rep` must be a live handle; `out` writable.
 */
enum B3Status b3_representation_central_value(const struct B3Representation *rep, char **out);

/**
 * Braid relation, minimal polynomial and every spectral identity.
 *
 * # Safety
 * `rep` must be a live handle; `all_ok` writable.
 */
enum B3Status b3_representation_verify(const struct B3Representation *rep, bool *all_ok);

/**
 * Whether `g1, g2` generate the full matrix algebra.
 *
 * # Safety
 * `rep` must be a live handle; `irreducible` writable.
 */
enum B3Status b3_representation_is_irreducible(const struct B3Representation *rep,
                                               bool *irreducible);

/**
 * Evaluates a braid word such as `"(s1 s2)^3"`; writes `{"matrix", "trace", "word"}` JSON.
 *
 * # Safety
 * `rep` must be a live handle; `word` a NUL-terminated string; `out` writable.
 */
enum B3Status b3_representation_eval_word(const struct B3Representation *rep,
                                          const char *word,
                                          char **out);

/**
 * Semisimplicity verdict for `X` given as a JSON list; optionally writes the failing
 * predicate names as a JSON list (pass null to skip).
 *
 * # Safety
 * `ctx` must be a live context; `x_json` a NUL-terminated string; `verdict` writable;
 * `failing` null or writable.
 */
enum B3Status b3_semisimple(const struct B3Context *ctx,
                            const char *x_json,
                            bool *verdict,
                            char **failing);

/**
 * Number of representations `enumerate_irreps` builds on `X` with this context's roots,
 * and how many root choices it had to defer.
 *
 * # Safety
 * `ctx` must be a live context; `x_json` a NUL-terminated string; outputs writable.
 */
enum B3Status b3_enumerate_count(const struct B3Context *ctx,
                                 const char *x_json,
                                 size_t *built,
                                 size_t *deferred);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* B3QUOT_H */
