#ifndef REPCYC_H
#define REPCYC_H

/* Generated with cbindgen:0.26.0 */

/* Generated by cbindgen from repcyc-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum RepcycStatus {
  REPCYC_STATUS_OK = 0,
  // Bad arguments: null pointers, malformed tags, parameter ranges.
  REPCYC_STATUS_INVALID_ARGUMENT = 1,
  // Field or length outside the supported range.
  REPCYC_STATUS_UNSUPPORTED = 2,
  // Enumeration cap or subset-visit budget exhausted.
  REPCYC_STATUS_RESOURCE_LIMIT = 3,
  // A verified claim was contradicted.
  REPCYC_STATUS_VERIFICATION_FAILED = 4,
  // Invariant violation inside the library.
  REPCYC_STATUS_INTERNAL = 5,
} RepcycStatus;

// Opaque cyclic-code handle.
typedef struct RepcycCode RepcycCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copy the calling thread's last error message into `buf` (NUL-terminated,
// truncated to `cap`). Returns the full message length in bytes, or 0 when
// no error is recorded.
//
// # Safety
// `buf` must point to `cap` writable bytes, or be null (then only the length
// is returned).
uintptr_t repcyc_last_error_message(char *buf, uintptr_t cap);

// Library version as a static string; do not free.
const char *repcyc_version(void);

// Build a family instance (tag is one of "T31".."T72") over GF(q) with
// parameter m. On success `*out` owns a new code handle.
//
// # Safety
// `tag` must be a NUL-terminated string; `out` must be a valid pointer.
enum RepcycStatus repcyc_family_build(const char *tag,
                                      uint64_t q,
                                      uint32_t m,
                                      struct RepcycCode **out);

// Build a cyclic code of length `length` over GF(q) from an ascending
// coefficient list (canonical field-element indices) of its generator.
//
// # Safety
// `coeffs` must point to `ncoeffs` readable u32 values; `out` must be valid.
enum RepcycStatus repcyc_code_from_generator(uint64_t q,
                                             uintptr_t length,
                                             const uint32_t *coeffs,
                                             uintptr_t ncoeffs,
                                             struct RepcycCode **out);

// Release a code handle. Null is a no-op.
//
// # Safety
// `code` must be a handle returned by this library and not yet freed.
void repcyc_code_free(struct RepcycCode *code);

// Field size q of the code; 0 on null.
//
// # Safety
// `code` must be a live handle or null.
uint64_t repcyc_code_q(const struct RepcycCode *code);

// Code length N; 0 on null.
//
// # Safety
// `code` must be a live handle or null.
uintptr_t repcyc_code_length(const struct RepcycCode *code);

// Code dimension k; 0 on null.
//
// # Safety
// `code` must be a live handle or null.
uintptr_t repcyc_code_dimension(const struct RepcycCode *code);

// Copy the generator's ascending coefficient list into `buf`. `*written`
// receives the coefficient count; fails with `ResourceLimit` when `cap` is
// too small (the needed size is still stored in `*written`).
//
// # Safety
// `buf` must point to `cap` writable u32 slots (may be null when cap is 0);
// `written` must be valid.
enum RepcycStatus repcyc_code_generator(const struct RepcycCode *code,
                                        uint32_t *buf,
                                        uintptr_t cap,
                                        uintptr_t *written);

// Search the minimum distance up to `wmax` (budget 0 means the default
// 10^10 subset visits). On return, `*d_low <= d`; when `*is_exact` is 1 the
// distance is exactly `*d_low`.
//
// # Safety
// `code`, `d_low` and `is_exact` must be valid pointers.
enum RepcycStatus repcyc_min_distance(const struct RepcycCode *code,
                                      uint32_t wmax,
                                      uint64_t budget,
                                      uint32_t *d_low,
                                      int32_t *is_exact);

// Distance-optimality classification of (n, k, d)_q by the implemented
// bounds; `*optimal` is 1 when certified optimal, 0 otherwise.
//
// # Safety
// `optimal` must be a valid pointer.
enum RepcycStatus repcyc_classify(uint32_t n, uint32_t k, uint32_t d, uint64_t q, int32_t *optimal);

// The coset-leader statistic for prime m: h = (2^(m-1)-1)/m and the h-th
// smallest nonzero 2-cyclotomic coset leader modulo 2^m - 1.
//
// # Safety
// `h` and `delta` must be valid pointers.
enum RepcycStatus repcyc_delta_h(uint32_t m, uint64_t *h, uint64_t *delta);

// Run a family instance's verification checks. `Ok` when every check passes,
// `VerificationFailed` when any claim is contradicted.
//
// # Safety
// `tag` must be a NUL-terminated string.
enum RepcycStatus repcyc_family_verify(const char *tag, uint64_t q, uint32_t m, uint64_t budget);

// Emit the results table as CSV ("csv"), JSON ("json") or markdown
// ("markdown") into a newly allocated string; free it with
// [`repcyc_string_free`]. With `verify` nonzero, distances are computed and
// contradicted rows yield `VerificationFailed` (the string is still
// produced).
//
// # Safety
// `format` must be a NUL-terminated string; `out` must be valid.
enum RepcycStatus repcyc_table1(const char *format, int32_t verify, char **out);

// Free a string allocated by this library. Null is a no-op.
//
// # Safety
// `s` must have been returned by a repcyc allocation-returning function and
// not yet freed.
void repcyc_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* REPCYC_H */
