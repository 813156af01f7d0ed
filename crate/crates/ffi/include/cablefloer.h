#ifndef CABLEFLOER_H
#define CABLEFLOER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum CfStatus {
  CF_STATUS_OK = 0,
  CF_STATUS_NULL_POINTER = 1,
  CF_STATUS_INVALID_ARGUMENT = 2,
  CF_STATUS_PARSE = 3,
  /**
   * Δ(1) ≠ 1, asymmetric Δ, or half-integer exponents.
   */
  CF_STATUS_BAD_POLYNOMIAL = 4,
  CF_STATUS_NOT_L_SPACE = 5,
  CF_STATUS_OFF_LATTICE = 6,
  CF_STATUS_INTERNAL = 7,
  CF_STATUS_PANIC = 8,
} CfStatus;

/**
 * An L-space knot, described by its h-function.
 */
typedef struct CfKnot CfKnot;

/**
 * A finitely presented multigraded module.
 */
typedef struct CfPresentation CfPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until the
 * next call into this library from the same thread.
 */
const char *cf_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *cf_version(void);

/**
 * Knot from its Alexander polynomial, e.g. `"t^3 - t^2 + 1 - t^-2 + t^-3"`.
 *
 * # Safety
 * `delta` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CfStatus cf_knot_from_delta(const char *delta, struct CfKnot **out);

/**
 * The torus knot `T(p, q)`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CfStatus cf_knot_torus(int64_t p, int64_t q, struct CfKnot **out);

/**
 * Overrides the twist from which cables are trusted to be L-space links.
 *
 * # Safety
 * `knot` must come from a `cf_knot_*` constructor.
 */
enum CfStatus cf_knot_set_threshold(struct CfKnot *knot, int64_t m);

/**
 * # Safety
 * `knot` must be NULL or come from a `cf_knot_*` constructor, and not be used afterwards.
 */
void cf_knot_free(struct CfKnot *knot);

/**
 * # Safety
 * `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
 */
enum CfStatus cf_knot_genus(const struct CfKnot *knot, int64_t *out);

/**
 * `h_K(s)`.
 *
 * # Safety
 * `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
 */
enum CfStatus cf_knot_h(const struct CfKnot *knot, int64_t s, int64_t *out);

/**
 * h-function of the cable `K_{n,mn}` at normalized degree `sbar[0..n]`.
 * `lspace_verified` (may be NULL) reports whether `m` is in the trusted range.
 *
 * # Safety
 * `sbar` must point to `n` integers; `out` must be valid.
 */
enum CfStatus cf_h_stab(const struct CfKnot *knot,
                        size_t n,
                        int64_t m,
                        const int64_t *sbar,
                        int64_t *out,
                        bool *lspace_verified);

/**
 * h-function of the torus link `T(n, mn)` at doubled Alexander degree `s2[0..n]`.
 *
 * # Safety
 * `s2` must point to `n` integers; `out` must be valid.
 */
enum CfStatus cf_h_torus(size_t n, int64_t m, const int64_t *s2, int64_t *out);

/**
 * Presentation of `⊕_s HFL(T(n, mn))`.
 *
 * # Safety
 * `out` must be valid.
 */
enum CfStatus cf_presentation_torus(size_t n, size_t m, struct CfPresentation **out);

/**
 * Presentation of the colored homology of `knot` on `n` strands with `count`
 * generators.
 *
 * # Safety
 * `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
 */
enum CfStatus cf_presentation_colored(const struct CfKnot *knot,
                                      size_t n,
                                      size_t count,
                                      struct CfPresentation **out);

/**
 * Presentation of `CFK(K)^{⊗n}` over the colored unknot algebra.
 *
 * # Safety
 * `knot` must come from a `cf_knot_*` constructor; `out` must be valid.
 */
enum CfStatus cf_presentation_tensor(const struct CfKnot *knot,
                                     size_t n,
                                     size_t count,
                                     struct CfPresentation **out);

/**
 * # Safety
 * `p` must be NULL or come from a `cf_presentation_*` constructor, and not be used afterwards.
 */
void cf_presentation_free(struct CfPresentation *p);

/**
 * Number of strands of the presentation.
 *
 * # Safety
 * `p` must come from a `cf_presentation_*` constructor; `out` must be valid.
 */
enum CfStatus cf_presentation_strands(const struct CfPresentation *p, size_t *out);

/**
 * Whether the presentation is exact at doubled Alexander degree `a2[0..n]`.
 *
 * # Safety
 * `p` must come from a `cf_presentation_*` constructor; `a2` must point to `n`
 * integers; `out` must be valid.
 */
enum CfStatus cf_presentation_valid_at(const struct CfPresentation *p,
                                       const int64_t *a2,
                                       size_t n,
                                       bool *out);

/**
 * `dim_F` of the module in doubled Alexander degree `a2[0..n]` and Maslov degree `maslov`.
 *
 * # Safety
 * `p` must come from a `cf_presentation_*` constructor; `a2` must point to `n`
 * integers; `out` must be valid.
 */
enum CfStatus cf_presentation_graded_dim(const struct CfPresentation *p,
                                         const int64_t *a2,
                                         size_t n,
                                         int64_t maslov,
                                         size_t *out);

/**
 * Checks the specialization identity for every `x_i` on `n` strands.
 *
 * # Safety
 * `out` must be valid.
 */
enum CfStatus cf_verify_hy(size_t n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CABLEFLOER_H */
