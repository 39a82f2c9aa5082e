#ifndef SOBERBENCH_H
#define SOBERBENCH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Zero is success.
 */
typedef enum {
  SB_STATUS_OK = 0,
  SB_STATUS_NULL_POINTER = 1,
  SB_STATUS_INVALID_UTF8 = 2,
  SB_STATUS_PARSE = 3,
  SB_STATUS_NOT_AN_ORDER = 4,
  SB_STATUS_INVALID_ARGUMENT = 5,
  SB_STATUS_CAP_EXCEEDED = 6,
  SB_STATUS_UNSUPPORTED = 7,
  SB_STATUS_CARRIER_TOO_LARGE = 8,
  /**
   * A theorem check failed; the report is still written.
   */
  SB_STATUS_THEOREM_FAILED = 9,
  SB_STATUS_PANIC = 10,
} SbStatus;

/**
 * Opaque space handle.
 */
typedef struct SbSpace SbSpace;

/**
 * Enumeration limits; pass NULL for the defaults.
 */
typedef struct {
  size_t carrier;
  size_t powerspace;
  size_t maps;
  size_t families;
  size_t lattice;
  size_t target_size;
} SbCaps;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The default caps.
 */
SbCaps sb_caps_default(void);

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call into the library from this thread.
 */
const char *sb_last_error_message(void);

/**
 * Parses a space in the text file format.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
SbStatus sb_space_parse(const char *text, SbSpace **out);

/**
 * A finite poset on `0..n` from `npairs` cover pairs stored as
 * `lt[2*k] < lt[2*k+1]`.
 *
 * # Safety
 * `lt` must point to `2 * npairs` values (may be NULL when `npairs` is 0);
 * `out` must be writable.
 */
SbStatus sb_space_from_covers(size_t n, const size_t *lt, size_t npairs, SbSpace **out);

/**
 * The natural numbers with the cofinite topology.
 *
 * # Safety
 * `out` must be writable.
 */
SbStatus sb_space_cofinite(SbSpace **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `space` must come from a constructor and not be freed twice.
 */
void sb_space_free(SbSpace *space);

/**
 * Number of points; `Unsupported` for the cofinite space.
 *
 * # Safety
 * `space` must be a live handle; `out` must be writable.
 */
SbStatus sb_space_size(const SbSpace *space, size_t *out);

/**
 * One flag of the classification vector, such as `"sober"`.
 *
 * # Safety
 * `space` must be a live handle, `name` a nul-terminated string, `out`
 * writable. `caps` may be NULL.
 */
SbStatus sb_classify_flag(const SbSpace *space, const SbCaps *caps, const char *name, bool *out);

/**
 * The classification vector as JSON.
 *
 * # Safety
 * `space` must be a live handle and `out` writable. `caps` may be NULL.
 */
SbStatus sb_classify_json(const SbSpace *space, const SbCaps *caps, char **out);

/**
 * Size of a named family of a finite space: `closed`, `open`,
 * `irreducible_closed`, `directed_closures`, `point_closures`, `rudin`,
 * `well_filtered_determined`, `compact_saturated` or `supercompact`.
 *
 * # Safety
 * `space` must be a live handle, `name` a nul-terminated string, `out`
 * writable. `caps` may be NULL.
 */
SbStatus sb_family_size(const SbSpace *space, const SbCaps *caps, const char *name, size_t *out);

/**
 * Runs theorem checks. `ids` is a comma-separated list or `"all"` (NULL
 * means all). Writes the number of failed checks and, if `report` is not
 * NULL, the reports as a JSON array. Returns `TheoremFailed` when some
 * check failed.
 *
 * # Safety
 * `space` must be a live handle and `failures` writable; `ids`, `caps` and
 * `report` may be NULL.
 */
SbStatus sb_verify(const SbSpace *space,
                   const SbCaps *caps,
                   const char *ids,
                   size_t *failures,
                   char **report);

/**
 * Frees a string returned by the library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void sb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOBERBENCH_H */
