#ifndef QHO_NODAL_H
#define QHO_NODAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum QnStatus {
  QN_STATUS_OK = 0,
  QN_STATUS_INVALID_ARGUMENT = 1,
  /*
   θ equals a critical value.
   */
  QN_STATUS_CRITICAL_THETA = 2,
  /*
   Non-finite values, failed root bracketing or similar.
   */
  QN_STATUS_NUMERICAL = 3,
  QN_STATUS_NULL_POINTER = 4,
  /*
   The output buffer is too short; the needed length was written.
   */
  QN_STATUS_BUFFER_TOO_SMALL = 5,
  /*
   A Rust panic was caught at the boundary.
   */
  QN_STATUS_INTERNAL = 6,
} QnStatus;

/*
 Opaque eigenfunction handle.
 */
typedef struct QnFamily QnFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread ("" after a success).
 The pointer stays valid until the next call on the same thread.
 */
const char *qn_last_error(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *qn_version(void);

/*
 `cosθ H_n(x) + sinθ H_n(y)` times the Gaussian, θ ∈ [0, π].

 # Safety
 `out` must be valid for a pointer write.
 */
enum QnStatus qn_family_stern(uint32_t n, double theta, struct QnFamily **out);

/*
 `H_n(x) - H_n(y)` times the Gaussian.

 # Safety
 `out` must be valid for a pointer write.
 */
enum QnStatus qn_family_difference(uint32_t n, struct QnFamily **out);

/*
 Polar mode of degree `ell` with radial index `n`; `sine` selects the
 sine angular factor.

 # Safety
 `out` must be valid for a pointer write.
 */
enum QnStatus qn_family_polar(uint32_t ell, uint32_t n, bool sine, struct QnFamily **out);

/*
 Oval family `A + aB + bC` of degree `4k` (Gaussian omitted).

 # Safety
 `out` must be valid for a pointer write.
 */
enum QnStatus qn_family_oval(uint32_t k, double epsilon, double a, double b, struct QnFamily **out);

/*
 Releases a handle; null is ignored.

 # Safety
 `f` must come from a `qn_family_*` constructor and not be used again.
 */
void qn_family_free(struct QnFamily *f);

/*
 Full eigenfunction value at `(x, y)`.

 # Safety
 `f` must be a live handle and `out` valid for a write.
 */
enum QnStatus qn_family_value(const struct QnFamily *f, double x, double y, double *out);

/*
 Polynomial factor (same zero set, no Gaussian) at `(x, y)`.

 # Safety
 `f` must be a live handle and `out` valid for a write.
 */
enum QnStatus qn_family_nodal_value(const struct QnFamily *f, double x, double y, double *out);

/*
 Counts nodal domains and zero-set components on the square window of
 half-width `half_width` sampled at `resolution²` points.

 # Safety
 `f` must be a live handle; `mu` and `components` valid for writes.
 */
enum QnStatus qn_count_domains(const struct QnFamily *f,
                               double half_width,
                               size_t resolution,
                               size_t *mu,
                               size_t *components);

/*
 Physicists' Hermite polynomial `H_n(t)`.

 # Safety
 `out` must be valid for a write.
 */
enum QnStatus qn_hermite(uint32_t n, double t, double *out);

/*
 Zeros of `H_n` in increasing order. `written` receives `n` even when
 the buffer is too small.

 # Safety
 `buf` must be valid for `len` writes and `written` for one.
 */
enum QnStatus qn_hermite_zeros(uint32_t n, double *buf, size_t len, size_t *written);

/*
 Critical values `θ(i, j)`, row-major `(n-1)×(n-1)`, in `(0, π)`.

 # Safety
 `buf` must be valid for `len` writes and `written` for one.
 */
enum QnStatus qn_critical_values(uint32_t n, double *buf, size_t len, size_t *written);

/*
 Smallest critical value `θ_c`.

 # Safety
 `out` must be valid for a write.
 */
enum QnStatus qn_theta_c(uint32_t n, double *out);

/*
 Returns `QN_STATUS_CRITICAL_THETA` if `theta` is a critical value for
 degree `n`, so the Stern zero set has a singular point.
 */
enum QnStatus qn_check_theta(uint32_t n, double theta);

/*
 Runs the two-domain verification and returns its JSON report in
 `*json` (free with `qn_string_free`); `*pass` is set to the verdict.
 `resolution` is the finest grid size (the sweep uses /4 and /2 too).

 # Safety
 `json` and `pass` must be valid for writes.
 */
enum QnStatus qn_verify_two_domains(uint32_t n,
                                    double theta,
                                    size_t resolution,
                                    char **json,
                                    bool *pass);

/*
 Releases a string returned by this library; null is ignored.

 # Safety
 `s` must come from this library and not be used again.
 */
void qn_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QHO_NODAL_H */
