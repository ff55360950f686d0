#ifndef HYPERLAT_H
#define HYPERLAT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of an isometry test.
 */
typedef enum HlIso {
  HL_ISO_DISTINCT = 0,
  HL_ISO_ISOMORPHIC = 1,
  HL_ISO_UNKNOWN = 2,
} HlIso;

/**
 * Result codes.
 */
typedef enum HlStatus {
  HL_STATUS_OK = 0,
  HL_STATUS_NULL_POINTER = 1,
  HL_STATUS_INVALID_UTF8 = 2,
  HL_STATUS_PARSE = 3,
  HL_STATUS_INVALID_ARGUMENT = 4,
  HL_STATUS_DEGENERATE = 5,
  HL_STATUS_OVERFLOW = 6,
  HL_STATUS_INDEX_OUT_OF_RANGE = 7,
  HL_STATUS_COMPUTATION = 8,
  HL_STATUS_PANIC = 9,
} HlStatus;

/**
 * An integral lattice.
 */
typedef struct HlLattice HlLattice;

/**
 * The output of Vinberg's algorithm.
 */
typedef struct HlVinbergRun HlVinbergRun;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Owned by the library.
 */
const char *hl_last_error(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, released once.
 */
void hl_string_free(char *s);

/**
 * Build a lattice from an expression such as `U+E8(2)+A1`.
 *
 * # Safety
 * `expr` must be a NUL terminated string and `out` a valid pointer.
 */
enum HlStatus hl_lattice_from_expr(const char *expr, struct HlLattice **out);

/**
 * Build a lattice from a row-major symmetric `n x n` Gram matrix.
 *
 * # Safety
 * `gram` must point to `n * n` integers and `out` must be a valid pointer.
 */
enum HlStatus hl_lattice_from_gram(const int64_t *gram, size_t n, struct HlLattice **out);

/**
 * # Safety
 * `l` must be null or a handle from this library, released once.
 */
void hl_lattice_free(struct HlLattice *l);

/**
 * # Safety
 * `l` must be a valid handle and `out` a valid pointer.
 */
enum HlStatus hl_lattice_rank(const struct HlLattice *l, size_t *out);

/**
 * Signature as numbers of positive and negative squares.
 *
 * # Safety
 * `l` must be a valid handle; `pos` and `neg` valid pointers.
 */
enum HlStatus hl_lattice_signature(const struct HlLattice *l, size_t *pos, size_t *neg);

/**
 * Determinant of the Gram matrix; fails with `Overflow` beyond 64 bits.
 *
 * # Safety
 * `l` must be a valid handle and `out` a valid pointer.
 */
enum HlStatus hl_lattice_det(const struct HlLattice *l, int64_t *out);

/**
 * Copy the Gram matrix, row-major, into `buf` of length `len >= rank^2`.
 *
 * # Safety
 * `l` must be a valid handle and `buf` must hold `len` integers.
 */
enum HlStatus hl_lattice_gram(const struct HlLattice *l, int64_t *buf, size_t len);

/**
 * Invariants of the lattice as a JSON object.
 *
 * # Safety
 * `l` must be a valid handle; `out` receives a string for [`hl_string_free`].
 */
enum HlStatus hl_lattice_info_json(const struct HlLattice *l, char **out);

/**
 * Decide whether two lattices are isometric.
 *
 * # Safety
 * `a` and `b` must be valid handles and `out` a valid pointer.
 */
enum HlStatus hl_lattice_isomorphic(const struct HlLattice *a,
                                    const struct HlLattice *b,
                                    enum HlIso *out);

/**
 * Run Vinberg's algorithm on a hyperbolic lattice.
 *
 * `controller` may be null to let the library choose; otherwise it holds
 * `rank` coordinates. `max_height` bounds the search when positive.
 *
 * # Safety
 * `l` must be a valid handle, `controller` null or `rank` integers, `out` valid.
 */
enum HlStatus hl_vinberg_run(const struct HlLattice *l,
                             const int64_t *controller,
                             int64_t max_height,
                             struct HlVinbergRun **out);

/**
 * # Safety
 * `r` must be null or a handle from this library, released once.
 */
void hl_vinberg_free(struct HlVinbergRun *r);

/**
 * Whether the run terminated with a polyhedron of finite volume.
 *
 * # Safety
 * `r` must be a valid handle and `out` a valid pointer.
 */
enum HlStatus hl_vinberg_finite_volume(const struct HlVinbergRun *r, bool *out);

/**
 * # Safety
 * `r` must be a valid handle and `out` a valid pointer.
 */
enum HlStatus hl_vinberg_root_count(const struct HlVinbergRun *r, size_t *out);

/**
 * Copy root `index` into `buf` of length `len >= rank` and its norm into `norm`.
 *
 * # Safety
 * `r` must be a valid handle, `buf` must hold `len` integers, `norm` valid.
 */
enum HlStatus hl_vinberg_root(const struct HlVinbergRun *r,
                              size_t index,
                              int64_t *buf,
                              size_t len,
                              int64_t *norm);

/**
 * Coxeter diagram of a finished run as JSON.
 *
 * # Safety
 * `r` must be a valid handle; `out` receives a string for [`hl_string_free`].
 */
enum HlStatus hl_vinberg_diagram_json(const struct HlVinbergRun *r, char **out);

/**
 * Run the built-in consistency checks and write the report as JSON.
 *
 * `only` is null for every group or a comma separated list of group names.
 *
 * # Safety
 * `only` must be null or a NUL terminated string; `out` and `passed` valid.
 */
enum HlStatus hl_verify_json(const char *only, char **out, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERLAT_H */
