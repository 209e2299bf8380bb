/* C interface for the anchi library. */

#ifndef ANCHI_H
#define ANCHI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes for every fallible entry point.
 */
typedef enum AnchiStatus {
  AnchiStatus_Ok = 0,
  /**
   * An argument was outside the supported domain.
   */
  AnchiStatus_InvalidArgument = 1,
  /**
   * An internal cross-check failed (method disagreement, interpolation
   * verification failure, negative chi1).
   */
  AnchiStatus_CheckFailed = 2,
  /**
   * The result does not fit the out-parameter type.
   */
  AnchiStatus_Overflow = 3,
  AnchiStatus_NullPointer = 4,
} AnchiStatus;

/**
 * Opaque quasi-polynomial handle.
 */
typedef struct AnchiQpoly AnchiQpoly;

/**
 * Verdict record for the degree-2k family with 4k^2 singularities of type
 * A_(k-1). `verdict` is 1 when the count meets the threshold.
 */
typedef struct AnchiLabsReport {
  uint32_t k;
  uint32_t degree;
  uint32_t singularity_index;
  uint64_t available;
  uint64_t required;
  uint8_t verdict;
} AnchiLabsReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * chi_loc(n, m) by the closed form. Requires n >= 1.
 */
enum AnchiStatus anchi_chi_loc(uint32_t n, uint64_t m, int64_t *out);

/**
 * chi0(n, m) by direct enumeration. Requires n >= 1.
 */
enum AnchiStatus anchi_chi0(uint32_t n, uint32_t m, uint64_t *out);

/**
 * chi1(n, m) = chi_loc - chi0. `CheckFailed` on a negative difference.
 */
enum AnchiStatus anchi_chi1(uint32_t n, uint32_t m, int64_t *out);

/**
 * Threshold count: smallest r forcing a big cotangent bundle for degree-d
 * surfaces with A_n singularities. Requires d >= 5, n >= 1.
 */
enum AnchiStatus anchi_r_min(uint32_t d, uint32_t n, uint64_t *out);

/**
 * Largest admissible number of A_n singularities on a degree-d surface.
 */
enum AnchiStatus anchi_miyaoka_max(uint32_t d, uint32_t n, uint64_t *out);

/**
 * Fill a [`AnchiLabsReport`] for the given k. Requires k >= 3 (k = 2 is
 * below the general-type degree range).
 */
enum AnchiStatus anchi_labs_check(uint32_t k, struct AnchiLabsReport *out);

/**
 * Run the cross-validation grid; `Ok` means every method agreed on every
 * cell and the tabulated generating functions matched.
 */
enum AnchiStatus anchi_validate(uint32_t n_max, uint32_t m_max);

/**
 * New quasi-polynomial handle for chi_loc(n, -).
 */
enum AnchiStatus anchi_chi_loc_qpoly_new(uint32_t n, struct AnchiQpoly **out);

/**
 * New quasi-polynomial handle for chi0(n, -). This interpolates the piece
 * counters, so construction verifies itself and can fail with
 * `CheckFailed`.
 */
enum AnchiStatus anchi_chi0_qpoly_new(uint32_t n, struct AnchiQpoly **out);

enum AnchiStatus anchi_qpoly_period(const struct AnchiQpoly *q, uint64_t *out);

enum AnchiStatus anchi_qpoly_degree(const struct AnchiQpoly *q, uint32_t *out);

/**
 * Evaluate at a non-negative integer. The quasi-polynomials built here take
 * integer values; `Overflow` reports values outside the i64 range.
 */
enum AnchiStatus anchi_qpoly_eval(const struct AnchiQpoly *q, uint64_t t, int64_t *out);

/**
 * JSON rendering of the handle (period, degree, coefficient rows). The
 * returned string must be freed with `anchi_string_free`. Returns null on a
 * null handle.
 */
char *anchi_qpoly_json(const struct AnchiQpoly *q);

/**
 * Release a handle created by one of the `*_qpoly_new` functions.
 *
 * # Safety
 * `q` must be null or a pointer previously returned by a constructor in
 * this library, and must not be used afterwards.
 */
void anchi_qpoly_free(struct AnchiQpoly *q);

/**
 * Release a string returned by `anchi_qpoly_json`.
 *
 * # Safety
 * `s` must be null or a pointer previously returned by this library, and
 * must not be used afterwards.
 */
void anchi_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ANCHI_H */
