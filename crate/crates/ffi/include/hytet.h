#ifndef HYTET_H
#define HYTET_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HytetStatus {
  HYTET_STATUS_OK = 0,
  HYTET_STATUS_NULL_POINTER = 1,
  /**
   * Non-finite or negative input.
   */
  HYTET_STATUS_DOMAIN = 2,
  /**
   * The lengths do not bound a compact tetrahedron.
   */
  HYTET_STATUS_NONEXISTENT = 3,
  /**
   * A flat configuration where the quantity is undefined.
   */
  HYTET_STATUS_DEGENERATE = 4,
  HYTET_STATUS_INCONSISTENT = 5,
  HYTET_STATUS_NUMERICAL = 6,
  HYTET_STATUS_PANIC = 7,
} HytetStatus;

/**
 * Opaque handle.
 */
typedef struct HytetTetrahedron HytetTetrahedron;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a tetrahedron from `lengths[6]`. The lengths are validated but
 * existence is not required; query it with `hytet_tetrahedron_exists`.
 *
 * # Safety
 * `lengths` must point to six readable doubles and `out` to a writable
 * pointer.
 */
enum HytetStatus hytet_tetrahedron_new(const double *lengths, struct HytetTetrahedron **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `t` must come from `hytet_tetrahedron_new` and not be used afterwards.
 */
void hytet_tetrahedron_free(struct HytetTetrahedron *t);

/**
 * Existence verdict; `degenerate` may be null.
 *
 * # Safety
 * `t` must be a live handle and `exists_out` writable.
 */
enum HytetStatus hytet_tetrahedron_exists(const struct HytetTetrahedron *t,
                                          bool *exists_out,
                                          bool *degenerate);

/**
 * Admissible interval `[l1, l2]` for `l34`.
 *
 * # Safety
 * `t` must be a live handle, `l1` and `l2` writable.
 */
enum HytetStatus hytet_tetrahedron_bounds(const struct HytetTetrahedron *t, double *l1, double *l2);

/**
 * Dihedral angles in radians, written to `out[6]` in edge order.
 *
 * # Safety
 * `t` must be a live handle and `out` must point to six writable doubles.
 */
enum HytetStatus hytet_tetrahedron_angles(const struct HytetTetrahedron *t, double *out);

/**
 * Volume by the edge integral. `tol <= 0` selects the default tolerance;
 * `error_estimate` may be null.
 *
 * # Safety
 * `t` must be a live handle and `value` writable.
 */
enum HytetStatus hytet_tetrahedron_volume(const struct HytetTetrahedron *t,
                                          double tol,
                                          double *value,
                                          double *error_estimate);

/**
 * Volume by the dihedral-angle integral.
 *
 * # Safety
 * As for `hytet_tetrahedron_volume`.
 */
enum HytetStatus hytet_tetrahedron_volume_sforza(const struct HytetTetrahedron *t,
                                                 double tol,
                                                 double *value,
                                                 double *error_estimate);

/**
 * Monte Carlo volume; `std_error` may be null. Deterministic in
 * `(seed, samples)`.
 *
 * # Safety
 * `t` must be a live handle and `value` writable.
 */
enum HytetStatus hytet_tetrahedron_volume_monte_carlo(const struct HytetTetrahedron *t,
                                                      uint64_t seed,
                                                      uint64_t samples,
                                                      double *value,
                                                      double *std_error);

/**
 * Volume of the regular tetrahedron with edge `a`.
 *
 * # Safety
 * `value` must be writable; `error_estimate` may be null.
 */
enum HytetStatus hytet_volume_regular(double a, double tol, double *value, double *error_estimate);

/**
 * Message for the last failed call on this thread; empty after a
 * success. Valid until the next call into the library on this thread.
 */
const char *hytet_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hytet_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYTET_H */
