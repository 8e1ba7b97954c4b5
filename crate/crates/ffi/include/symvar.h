#ifndef SYMVAR_H
#define SYMVAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SymvarStatus {
  SYMVAR_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SYMVAR_STATUS_NULL_POINTER = 1,
  /**
   * Input was rejected: bad family, size, field or matrix.
   */
  SYMVAR_STATUS_INVALID_INPUT = 2,
  /**
   * The weight passed in is not special for the involution.
   */
  SYMVAR_STATUS_NOT_SPECIAL = 3,
  /**
   * The request exceeds a built-in size limit.
   */
  SYMVAR_STATUS_RESOURCE_GUARD = 4,
  /**
   * A computed object failed an internal consistency check.
   */
  SYMVAR_STATUS_INVARIANT_VIOLATION = 5,
  /**
   * An output buffer is too small.
   */
  SYMVAR_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * The library panicked; this is a bug.
   */
  SYMVAR_STATUS_PANIC = 7,
} SymvarStatus;

/**
 * An involution of a classical root system together with its root data.
 */
typedef struct SymvarInvolution SymvarInvolution;

/**
 * A root system of classical type.
 */
typedef struct SymvarRootSystem SymvarRootSystem;

/**
 * Summary of a Borel congruence census.
 */
typedef struct SymvarCensus {
  size_t orbit_count;
  size_t invariant_values;
  size_t expected_parametrizers;
  bool matches;
} SymvarCensus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *symvar_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *symvar_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void symvar_string_free(char *s);

/**
 * Builds the root system of `family` ("A", "B", "C" or "D") and `rank`.
 *
 * # Safety
 * `family` must be a NUL-terminated string; `out` must be writable.
 */
enum SymvarStatus symvar_root_system_new(const char *family,
                                         size_t rank,
                                         struct SymvarRootSystem **out);

/**
 * # Safety
 * `rs` must be null or come from [`symvar_root_system_new`].
 */
void symvar_root_system_free(struct SymvarRootSystem *rs);

/**
 * Number of positive roots.
 *
 * # Safety
 * `rs` must be a live handle; `out` must be writable.
 */
enum SymvarStatus symvar_root_system_positive_roots(const struct SymvarRootSystem *rs, size_t *out);

/**
 * Size of the Weyl orbit of the weight with fundamental-weight coefficients
 * `coeffs[0..len]`, where `len` equals the rank.
 *
 * # Safety
 * `rs` must be a live handle; `coeffs` must hold `len` values; `out` must be writable.
 */
enum SymvarStatus symvar_weyl_orbit_size(const struct SymvarRootSystem *rs,
                                         const int64_t *coeffs,
                                         size_t len,
                                         size_t *out);

/**
 * Builds an involution. `family` is one of AI, AII, AIII, CI, CII, DIII,
 * BDI; `params` holds one size, or two block sizes for AIII, CII and BDI.
 *
 * # Safety
 * `family` must be a NUL-terminated string; `params` must hold `len` values;
 * `out` must be writable.
 */
enum SymvarStatus symvar_involution_new(const char *family,
                                        const size_t *params,
                                        size_t len,
                                        struct SymvarInvolution **out);

/**
 * # Safety
 * `inv` must be null or come from [`symvar_involution_new`].
 */
void symvar_involution_free(struct SymvarInvolution *inv);

/**
 * Rank of the underlying root system.
 *
 * # Safety
 * `inv` must be a live handle; `out` must be writable.
 */
enum SymvarStatus symvar_involution_rank(const struct SymvarInvolution *inv, size_t *out);

/**
 * Number of semigroup generators of the special weights.
 *
 * # Safety
 * `inv` must be a live handle; `out` must be writable.
 */
enum SymvarStatus symvar_involution_generator_count(const struct SymvarInvolution *inv,
                                                    size_t *out);

/**
 * Writes the fundamental-weight coefficients of generator `index` into
 * `buf[0..rank]`.
 *
 * # Safety
 * `inv` must be a live handle; `buf` must have room for `len` values.
 */
enum SymvarStatus symvar_involution_generator(const struct SymvarInvolution *inv,
                                              size_t index,
                                              int64_t *buf,
                                              size_t len);

/**
 * Whether the dominant weight with fundamental coefficients `coeffs[0..len]`
 * is special for `inv`.
 *
 * # Safety
 * `inv` must be a live handle; `coeffs` must hold `len` values; `out` must be writable.
 */
enum SymvarStatus symvar_involution_is_special(const struct SymvarInvolution *inv,
                                               const int64_t *coeffs,
                                               size_t len,
                                               bool *out);

/**
 * Number of `n x n` partial permutation matrices.
 *
 * # Safety
 * `out` must be writable.
 */
enum SymvarStatus symvar_rook_count(size_t n, uint64_t *out);

/**
 * Bruhat-Chevalley order on rook elements given as row maps of length `n`:
 * entry `i` is the 1-based column of the 1 in row `i`, or 0.
 *
 * # Safety
 * `r` and `s` must hold `n` values; `out` must be writable.
 */
enum SymvarStatus symvar_bruhat_leq(const size_t *r, const size_t *s, size_t n, bool *out);

/**
 * Factors the row-major `n x n` matrix `entries` over `F_q` as `u (t r) v`.
 * `u`, `t` and `v` receive `n*n` row-major entries; `r` receives the row map
 * of the rook component.
 *
 * # Safety
 * `entries`, `u`, `t`, `v` must hold `n*n` values and `r` must hold `n`.
 */
enum SymvarStatus symvar_bruhat_factor(const int64_t *entries,
                                       size_t n,
                                       uint8_t q,
                                       uint8_t *u,
                                       uint8_t *t,
                                       size_t *r,
                                       uint8_t *v);

/**
 * Borel congruence census on `form` ("sym" or "skew") matrices of size `n`
 * over `F_q`, `q` odd.
 *
 * # Safety
 * `form` must be a NUL-terminated string; `out` must be writable.
 */
enum SymvarStatus symvar_census(const char *form, size_t n, uint8_t q, struct SymvarCensus *out);

/**
 * Full census report, with per-orbit witnesses, as a JSON string. Release it
 * with [`symvar_string_free`].
 *
 * # Safety
 * `form` must be a NUL-terminated string; `out` must be writable.
 */
enum SymvarStatus symvar_census_json(const char *form, size_t n, uint8_t q, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMVAR_H */
