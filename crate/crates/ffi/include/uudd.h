#ifndef UUDD_H
#define UUDD_H

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum UuddStatus {
  UUDD_STATUS_OK = 0,
  UUDD_STATUS_NULL_POINTER = 1,
  UUDD_STATUS_OUT_OF_RANGE = 2,
  UUDD_STATUS_BOUND_EXCEEDED = 3,
  UUDD_STATUS_INVALID_ARGUMENT = 4,
  UUDD_STATUS_NON_INTEGRAL = 5,
  UUDD_STATUS_CHECK_FAILED = 6,
  UUDD_STATUS_PANIC = 7,
} UuddStatus;

/**
 * Identity checked by [`uudd_table_verify`].
 */
typedef enum UuddIdentity {
  /**
   * `p_n(-k) = p_n(k)`
   */
  UUDD_IDENTITY_SYMMETRY = 0,
  /**
   * `p_{n+1}(k+1) - 2 p_{n+1}(k) + p_{n+1}(k-1) = 2 p_n(k)`
   */
  UUDD_IDENTITY_SECOND_DIFFERENCE = 1,
  /**
   * `(n-1) p_n(n) = n p_n(n-1)`
   */
  UUDD_IDENTITY_EDGE_RELATION = 2,
} UuddIdentity;

/**
 * Verification suite run by [`uudd_verify_suite`].
 */
typedef enum UuddSuite {
  UUDD_SUITE_LEMMAS = 0,
  UUDD_SUITE_THEOREM = 1,
  UUDD_SUITE_SEIDEL = 2,
  UUDD_SUITE_SECTION3 = 3,
  UUDD_SUITE_ALL = 4,
} UuddSuite;

/**
 * Opaque scaled bivariate generating function of `2^n p_n(k)`.
 */
typedef struct UuddPSeries UuddPSeries;

/**
 * Opaque `p_n(k)` triangle.
 */
typedef struct UuddTable UuddTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of this library as a static NUL-terminated string.
 */
const char *uudd_version(void);

/**
 * Message for the most recent failed call on this thread. Valid until the
 * next call into this library on the same thread; never null.
 */
const char *uudd_last_error_message(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must be null or a pointer obtained from this library and not yet freed.
 */
void uudd_string_free(char *s);

/**
 * Builds rows `0..=max_n` of `p_n(k)`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum UuddStatus uudd_table_build(size_t max_n, struct UuddTable **out);

/**
 * # Safety
 * `table` must be null or a handle from [`uudd_table_build`] not yet freed.
 */
void uudd_table_free(struct UuddTable *table);

/**
 * Largest `n` stored in the table, or 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a live handle.
 */
size_t uudd_table_max_n(const struct UuddTable *table);

/**
 * `p_n(k)` as a decimal string.
 *
 * # Safety
 * `table` must be a live handle and `out` valid for writes.
 */
enum UuddStatus uudd_table_get(const struct UuddTable *table, size_t n, int64_t k, char **out);

/**
 * `sum_k p_n(k)` as a decimal string.
 *
 * # Safety
 * `table` must be a live handle and `out` valid for writes.
 */
enum UuddStatus uudd_table_row_sum(const struct UuddTable *table, size_t n, char **out);

/**
 * Checks one identity over the whole table and stores the verdict in `*holds`.
 *
 * # Safety
 * `table` must be a live handle and `holds` valid for writes.
 */
enum UuddStatus uudd_table_verify(const struct UuddTable *table,
                                  enum UuddIdentity identity,
                                  bool *holds);

/**
 * Builds the scaled generating function to total degree `order`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum UuddStatus uudd_p_series_build(size_t order, struct UuddPSeries **out);

/**
 * # Safety
 * `series` must be null or a handle from [`uudd_p_series_build`] not yet freed.
 */
void uudd_p_series_free(struct UuddPSeries *series);

/**
 * `p_n(k)` read from the generating function, as a decimal string.
 *
 * # Safety
 * `series` must be a live handle and `out` valid for writes.
 */
enum UuddStatus uudd_p_series_extract(const struct UuddPSeries *series,
                                      size_t n,
                                      int64_t k,
                                      char **out);

/**
 * `V_n`, the number of up-up-or-down-down permutations of length `2n + 1`,
 * from its generating function.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum UuddStatus uudd_v(size_t n, char **out);

/**
 * Brute-force row `p_n(-n..=n)` as comma-separated decimals.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum UuddStatus uudd_brute_pnk_row(size_t n, char **out);

/**
 * Brute-force count of up-up-or-down-down permutations of odd `length`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum UuddStatus uudd_brute_uudd_count(size_t length, char **out);

/**
 * Brute-force count of `rows x cols` whirlpool permutations.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum UuddStatus uudd_brute_whirlpool(size_t rows, size_t cols, char **out);

/**
 * Brute-force count of alternating permutations of `{-m..n}` ending with 0.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum UuddStatus uudd_brute_alternating(size_t m, size_t n, char **out);

/**
 * Runs a verification suite. `passed` and `total` (each may be null) receive
 * the check counts; the status is `CheckFailed` when any check fails.
 *
 * # Safety
 * `passed` and `total` must each be null or valid for writes.
 */
enum UuddStatus uudd_verify_suite(enum UuddSuite suite,
                                  size_t n,
                                  size_t order,
                                  size_t *passed,
                                  size_t *total);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UUDD_H */
