#ifndef SKELBETTI_H
#define SKELBETTI_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Outcome of a library call.
 */
typedef enum SbStatus {
  SB_STATUS_OK = 0,
  SB_STATUS_NULL_POINTER = 1,
  SB_STATUS_INVALID_ARGUMENT = 2,
  SB_STATUS_PARSE = 3,
  SB_STATUS_UNSUPPORTED_FIELD = 4,
  SB_STATUS_OUT_OF_RANGE = 5,
  SB_STATUS_NOT_A_MATROID = 6,
  SB_STATUS_INCONSISTENT_TABLE = 7,
  SB_STATUS_INTERNAL = 8,
} SbStatus;

/**
 * Grading convention of a Betti table.
 */
typedef enum SbConvention {
  /**
   * Resolution of the Stanley-Reisner ring; `β_{0,0} = 1`.
   */
  SB_CONVENTION_RING = 0,
  /**
   * Resolution of the Stanley-Reisner ideal; homological index shifted by one.
   */
  SB_CONVENTION_IDEAL = 1,
} SbConvention;

/**
 * A graded Betti table over a prime field.
 */
typedef struct SbBettiTable SbBettiTable;

/**
 * A simplicial complex.
 */
typedef struct SbComplex SbComplex;

/**
 * A matroid given by its bases.
 */
typedef struct SbMatroid SbMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failed call on this thread, or null.
 *
 * The pointer stays valid until the next library call on the same thread.
 */
const char *sb_last_error_message(void);

/**
 * Releases a string returned by the library.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void sb_string_free(char *s);

/**
 * Complex on `{1,...,n}` generated by `count` facet masks.
 *
 * # Safety
 * `facets` must point to `count` readable masks; `out` must be writable.
 */
enum SbStatus sb_complex_new(size_t n,
                             const uint32_t *facets,
                             size_t count,
                             struct SbComplex **out);

/**
 * Complex from facet-list text (`n = k` header, one facet per line).
 *
 * # Safety
 * `source` must be a nul-terminated string; `out` must be writable.
 */
enum SbStatus sb_complex_parse(const char *source, struct SbComplex **out);

/**
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void sb_complex_free(struct SbComplex *c);

/**
 * Dimension of the complex (`-1` for the complex `{∅}`).
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_complex_dimension(const struct SbComplex *c, ptrdiff_t *out);

/**
 * Copies up to `cap` entries `f_{-1}, f_0, ...` into `buf` and stores the
 * full length in `len`. Call with `cap = 0` to query the length.
 *
 * # Safety
 * `buf` must have room for `cap` values; `len` must be writable.
 */
enum SbStatus sb_complex_f_vector(const struct SbComplex *c,
                                  uint64_t *buf,
                                  size_t cap,
                                  size_t *len);

/**
 * The `i`-skeleton, for `-1 <= i <= dim`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_complex_skeleton(const struct SbComplex *c, ptrdiff_t i, struct SbComplex **out);

/**
 * Graded Betti table of the complex over GF(`p`).
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_betti(const struct SbComplex *c,
                       uint64_t p,
                       enum SbConvention convention,
                       struct SbBettiTable **out);

/**
 * `β_{i,j}`; zero outside the support or for a null handle.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
uint64_t sb_table_get(const struct SbBettiTable *t, size_t i, size_t j);

/**
 * Projective dimension of the ring the table describes.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_table_projective_dimension(const struct SbBettiTable *t, size_t *out);

/**
 * JSON form of the table; release with [`sb_string_free`].
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_table_to_json(const struct SbBettiTable *t, char **out);

/**
 * # Safety
 * `source` must be a nul-terminated string; `out` must be writable.
 */
enum SbStatus sb_table_from_json(const char *source, struct SbBettiTable **out);

/**
 * # Safety
 * `t` must be null or a live handle from this library.
 */
void sb_table_free(struct SbBettiTable *t);

/**
 * Table of the codimension-one skeleton, from the table of a complex of
 * dimension `dim` (`0` infers it). The result uses the ring convention.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_transfer(const struct SbBettiTable *t, size_t dim, struct SbBettiTable **out);

/**
 * Number of top-dimensional faces recovered from the table alone.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_top_face_count(const struct SbBettiTable *t, size_t dim, uint64_t *out);

/**
 * Matroid on `{1,...,n}` with the given basis masks.
 *
 * # Safety
 * `bases` must point to `count` readable masks; `out` must be writable.
 */
enum SbStatus sb_matroid_new(size_t n, const uint32_t *bases, size_t count, struct SbMatroid **out);

/**
 * Matroid from basis-list text, in the facet file format.
 *
 * # Safety
 * `source` must be a nul-terminated string; `out` must be writable.
 */
enum SbStatus sb_matroid_parse(const char *source, struct SbMatroid **out);

/**
 * # Safety
 * `m` must be null or a live handle from this library.
 */
void sb_matroid_free(struct SbMatroid *m);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_matroid_rank(const struct SbMatroid *m, size_t *out);

/**
 * Ring-convention table of the independence complex.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_matroid_betti(const struct SbMatroid *m, uint64_t p, struct SbBettiTable **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_matroid_truncation(const struct SbMatroid *m, size_t i, struct SbMatroid **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_matroid_elongation(const struct SbMatroid *m, size_t i, struct SbMatroid **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum SbStatus sb_matroid_dual(const struct SbMatroid *m, struct SbMatroid **out);

/**
 * Evaluates the built-in matroid pair whose tables agree while those of
 * their elongations differ; `passed` receives the verdict.
 *
 * # Safety
 * `passed` must be writable.
 */
enum SbStatus sb_counterexample(bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SKELBETTI_H */
