#ifndef SELFDUAL_H
#define SELFDUAL_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_UTF8 = 2,
  SD_STATUS_PARSE = 3,
  SD_STATUS_UNKNOWN_CODE = 4,
  SD_STATUS_NOT_SELF_DUAL = 5,
  SD_STATUS_OUT_OF_RANGE = 6,
  SD_STATUS_RESOURCE_LIMIT = 7,
  SD_STATUS_INVALID_INPUT = 8,
  SD_STATUS_DESIGN_VIOLATION = 9,
  SD_STATUS_PANIC = 10,
} SdStatus;

/**
 * A binary linear code.
 */
typedef struct SdCode SdCode;

/**
 * A derivative `W<t>` of an exact weight enumerator.
 */
typedef struct SdDerivative SdDerivative;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on the calling thread. Valid until the next
 * failing call on that thread; never NULL.
 */
const char *sd_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sd_string_free(char *s);

/**
 * Loads a built-in code: `e8`, `c2x4`, `golay24` or `qr48`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum SdStatus sd_code_builtin(const char *name, struct SdCode **out);

/**
 * Parses a generator matrix, one row of `0`/`1` characters per line.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SdStatus sd_code_from_generator(const char *text, struct SdCode **out);

/**
 * Releases a code. NULL is ignored.
 *
 * # Safety
 * `code` must come from this library and not have been freed.
 */
void sd_code_free(struct SdCode *code);

/**
 * Length `n`, or 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t sd_code_length(const struct SdCode *code);

/**
 * Dimension, or 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t sd_code_dimension(const struct SdCode *code);

/**
 * Whether the code equals its dual; false for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
bool sd_code_is_self_dual(const struct SdCode *code);

/**
 * Computes `W<t>` by enumerating the codewords.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_derivative_compute(const struct SdCode *code, size_t t, struct SdDerivative **out);

/**
 * Computes `W<n−5>` from a design profile (`n=<n>` then `<w> <b_w>` lines).
 *
 * # Safety
 * `profile` must be a NUL-terminated string; `out` must be writable.
 */
enum SdStatus sd_derivative_from_profile(const char *profile, struct SdDerivative **out);

/**
 * Parses a derivative in text or JSON form.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SdStatus sd_derivative_parse(const char *text, struct SdDerivative **out);

/**
 * Releases a derivative. NULL is ignored.
 *
 * # Safety
 * `d` must come from this library and not have been freed.
 */
void sd_derivative_free(struct SdDerivative *d);

/**
 * Number of entries, `2^(n−t)`, or 0 for NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
size_t sd_derivative_len(const struct SdDerivative *d);

/**
 * Order `t`, or 0 for NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
size_t sd_derivative_order(const struct SdDerivative *d);

/**
 * Entry `index` as `<d>*p + <c>`; free with [`sd_string_free`].
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_derivative_entry(const struct SdDerivative *d, size_t index, char **out);

/**
 * The whole derivative in text form; free with [`sd_string_free`].
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_derivative_to_text(const struct SdDerivative *d, char **out);

/**
 * Whether the derivative is fixed by the normalized Hadamard power, and
 * whether its two halves satisfy the conjugate-mirror relation.
 *
 * # Safety
 * `d` must be a live handle; `eigen` and `halves` must be writable.
 */
enum SdStatus sd_derivative_eigencheck(const struct SdDerivative *d, bool *eigen, bool *halves);

/**
 * Evaluates the balance identity at the 1-based `coordinate`.
 *
 * # Safety
 * `code` must be a live handle; `passes` must be writable.
 */
enum SdStatus sd_balance_check(const struct SdCode *code, size_t coordinate, bool *passes);

/**
 * Balance test on a length-8 candidate `A_0..A_8` (`len` must be 9).
 * `y` receives the solved `A_{2,0}` as `num/den` or an integer, or NULL when
 * no unique value exists; free it with [`sd_string_free`].
 *
 * # Safety
 * `counts` must point to `len` readable values; `survives` and `y` must be writable.
 */
enum SdStatus sd_eliminate_length8(const uint64_t *counts, size_t len, bool *survives, char **y);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SELFDUAL_H */
