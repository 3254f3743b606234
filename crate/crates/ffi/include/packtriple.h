#ifndef PACKTRIPLE_H
#define PACKTRIPLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define PT_OK 0

/**
 * The triple has no packing.
 */
#define PT_NO_PACKING 1

#define PT_ERR_NULL -1

#define PT_ERR_PARSE -2

#define PT_ERR_INVALID -3

#define PT_ERR_GUARD -4

#define PT_ERR_PRECONDITION -5

/**
 * An output buffer is too small.
 */
#define PT_ERR_BUFFER -6

#define PT_ERR_INTERNAL -7

#define PT_ERR_IO -8

#define PT_ERR_PANIC -9

#define PT_METHOD_BRUTE 0

#define PT_METHOD_BACKTRACK 1

#define PT_METHOD_CONSTRUCTIVE 2

#define PT_THEOREM_SS_PRODUCT 0

#define PT_THEOREM_LEMMA7 1

#define PT_THEOREM_COR8 2

#define PT_THEOREM_BE 3

#define PT_PREDICT_MUST_PACK 0

#define PT_PREDICT_EXCEPTION_NO_PACK 1

#define PT_PREDICT_NONE 2

/**
 * Which graph `pt_triple_add_edge` edits.
 */
#define PT_GRAPH_G1 1

#define PT_GRAPH_G2 2

#define PT_GRAPH_YELLOW 3

/**
 * Opaque triple handle.
 */
typedef struct PtTriple PtTriple;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last error on this thread. Valid until the next call
 * into the library from the same thread; never null.
 */
const char *pt_last_error_message(void);

/**
 * Parses the text triple format into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t pt_triple_parse(const char *text, struct PtTriple **out);

/**
 * A new triple on `n + n` vertices with no edges.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
int32_t pt_triple_new(uintptr_t n, struct PtTriple **out);

/**
 * Adds an edge to `G1`, `G2` or the yellow graph (`PT_GRAPH_*`). Yellow
 * pairs are `(V1 vertex, V2 vertex)`.
 *
 * # Safety
 * `t` must be a live handle.
 */
int32_t pt_triple_add_edge(struct PtTriple *t, int32_t which, uintptr_t a, uintptr_t b);

/**
 * Builds a named family (`"BE1"`, `"FIG2D"`, `"KK_CLIQUE"`, ...). Zero
 * for `n`, `m`, `mp` or `k` means "not given".
 *
 * # Safety
 * `family` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t pt_triple_generate(const char *family,
                           uintptr_t n,
                           uintptr_t m,
                           uintptr_t mp,
                           uintptr_t k,
                           struct PtTriple **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `t` must be null or a handle not yet freed.
 */
void pt_triple_free(struct PtTriple *t);

/**
 * Number of vertices on each side, or 0 for a null handle.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
uintptr_t pt_triple_order(const struct PtTriple *t);

/**
 * Serializes to the text format; free the result with `pt_string_free`.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
int32_t pt_triple_to_string(const struct PtTriple *t, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void pt_string_free(char *s);

/**
 * Searches for a packing with `method` (`PT_METHOD_*`). On `PT_OK` the
 * first `n` entries of `perm` hold `f(0), ..., f(n-1)`.
 *
 * # Safety
 * `t` must be a live handle and `perm` must point to `len` writable slots.
 */
int32_t pt_solve(const struct PtTriple *t, int32_t method, uintptr_t *perm, uintptr_t len);

/**
 * Checks whether `perm[0..len]` is a packing; writes the answer to `result`.
 *
 * # Safety
 * `t` must be a live handle, `perm` must point to `len` readable slots and
 * `result` must be a valid pointer.
 */
int32_t pt_is_packing(const struct PtTriple *t, const uintptr_t *perm, uintptr_t len, bool *result);

/**
 * Runs one hypothesis checker (`PT_THEOREM_*`) and writes its prediction
 * (`PT_PREDICT_*`).
 *
 * # Safety
 * `t` must be a live handle and `prediction` a valid pointer.
 */
int32_t pt_check(const struct PtTriple *t, int32_t theorem, int32_t *prediction);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PACKTRIPLE_H */
