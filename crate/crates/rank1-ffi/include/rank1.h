#ifndef RANK1_H
#define RANK1_H

/* Generated by cbindgen from the rank1-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum R1Status {
  R1Status_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  R1Status_NullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  R1Status_InvalidUtf8 = 2,
  /**
   * Malformed input: empty tuple, bad cut count, unparsable JSON, or an
   * undersized buffer.
   */
  R1Status_InvalidArgument = 3,
  R1Status_LengthMismatch = 4,
  R1Status_PremiseViolation = 5,
  R1Status_BeyondPrefix = 6,
  R1Status_BudgetExceeded = 7,
  R1Status_LevelOrder = 8,
  R1Status_PatternTooLong = 9,
  R1Status_TailCollapse = 10,
  R1Status_UnspecifiedTail = 11,
  R1Status_CanonicalConditionFailed = 12,
  R1Status_NoRecurringAsymmetry = 13,
  R1Status_IncompatibleRepresentations = 14,
  R1Status_VerificationFailed = 15,
} R1Status;

/**
 * Opaque parameter sequence handle.
 */
typedef struct R1ParamSpec R1ParamSpec;

/**
 * Opaque spacer tuple handle.
 */
typedef struct R1SpacerTuple R1SpacerTuple;

/**
 * Window-compatibility verdict in C layout. When `compatible` is false
 * the other fields are zero; `middle_forced` tells whether `middle_value`
 * is meaningful.
 */
typedef struct R1Compatibility {
  bool compatible;
  uint64_t offset;
  bool middle_forced;
  uint64_t middle_value;
} R1Compatibility;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Stable name of a status code, as a pointer to a static string.
 */
const char *r1_status_name(enum R1Status status);

/**
 * Builds a spacer tuple from `len` entries. The tuple must have at least
 * one entry.
 *
 * # Safety
 * `values` must point to `len` readable `uint64_t`s and `out` must be a
 * valid pointer. The returned handle is released with [`r1_tuple_free`].
 */
enum R1Status r1_tuple_new(const uint64_t *values, size_t len, struct R1SpacerTuple **out);

/**
 * Releases a tuple handle. Null is ignored.
 *
 * # Safety
 * `tuple` must be a handle returned by this library and not yet freed.
 */
void r1_tuple_free(struct R1SpacerTuple *tuple);

/**
 * Number of entries, or 0 for a null handle.
 *
 * # Safety
 * `tuple` must be null or a live handle from this library.
 */
size_t r1_tuple_len(const struct R1SpacerTuple *tuple);

/**
 * Copies the entries into `buffer`, which must hold at least
 * `r1_tuple_len` values.
 *
 * # Safety
 * `tuple` must be a live handle and `buffer` must point to `buffer_len`
 * writable `uint64_t`s.
 */
enum R1Status r1_tuple_values(const struct R1SpacerTuple *tuple,
                              uint64_t *buffer,
                              size_t buffer_len);

/**
 * The level-collapsing product `star(s2, s1)`.
 *
 * # Safety
 * `s2` and `s1` must be live handles; `out` must be a valid pointer.
 */
enum R1Status r1_star(const struct R1SpacerTuple *s2,
                      const struct R1SpacerTuple *s1,
                      struct R1SpacerTuple **out);

/**
 * The reversed tuple.
 *
 * # Safety
 * `tuple` must be a live handle; `out` must be a valid pointer.
 */
enum R1Status r1_tuple_reverse(const struct R1SpacerTuple *tuple, struct R1SpacerTuple **out);

/**
 * Whether the tuple equals its own reverse.
 *
 * # Safety
 * `tuple` must be a live handle; `out` must be a valid pointer.
 */
enum R1Status r1_tuple_is_palindrome(const struct R1SpacerTuple *tuple, bool *out);

/**
 * Whether all entries are equal.
 *
 * # Safety
 * `tuple` must be a live handle; `out` must be a valid pointer.
 */
enum R1Status r1_tuple_is_constant(const struct R1SpacerTuple *tuple, bool *out);

/**
 * Decides window compatibility of two equal-length tuples.
 *
 * # Safety
 * `s` and `s_prime` must be live handles; `out` must be a valid pointer.
 */
enum R1Status r1_compatibility(const struct R1SpacerTuple *s,
                               const struct R1SpacerTuple *s_prime,
                               struct R1Compatibility *out);

/**
 * True when the two equal-length tuples are incompatible.
 *
 * # Safety
 * `s` and `s_prime` must be live handles; `out` must be a valid pointer.
 */
enum R1Status r1_perp(const struct R1SpacerTuple *s,
                      const struct R1SpacerTuple *s_prime,
                      bool *out);

/**
 * Checks that `star(s2, s1)` is incompatible with its own reverse, given
 * a non-palindromic `s1` and a non-constant `s2`.
 *
 * # Safety
 * `s1` and `s2` must be live handles; `out` must be a valid pointer.
 */
enum R1Status r1_reversal_incompatibility(const struct R1SpacerTuple *s1,
                                          const struct R1SpacerTuple *s2,
                                          bool *out);

/**
 * Parses a parameter sequence from its JSON form:
 * `{"prefix": [{"r": 2, "s": [0]}], "tail": {"type": "periodic", "cycle": [...]}}`
 * or `{"prefix": [...], "tail": {"type": "unspecified"}}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be a valid pointer.
 * The returned handle is released with [`r1_params_free`].
 */
enum R1Status r1_params_from_json(const char *json, struct R1ParamSpec **out);

/**
 * Serializes a parameter sequence back to JSON.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer. Release
 * the string with [`r1_string_free`].
 */
enum R1Status r1_params_to_json(const struct R1ParamSpec *params, char **out);

/**
 * Releases a parameter handle. Null is ignored.
 *
 * # Safety
 * `params` must be a handle returned by this library and not yet freed.
 */
void r1_params_free(struct R1ParamSpec *params);

/**
 * Parameters of the inverse system: every spacer tuple reversed.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer.
 */
enum R1Status r1_params_invert(const struct R1ParamSpec *params, struct R1ParamSpec **out);

/**
 * Fuses prefix level `at` with its successor (see the library's
 * `collapse_level`).
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer.
 */
enum R1Status r1_params_collapse(const struct R1ParamSpec *params,
                                 uint64_t at,
                                 struct R1ParamSpec **out);

/**
 * Moves `count` cycle levels into the explicit prefix.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer.
 */
enum R1Status r1_params_unroll(const struct R1ParamSpec *params,
                               uint64_t count,
                               struct R1ParamSpec **out);

/**
 * Materializes the generating word at `level` as a NUL-terminated string
 * of `'0'` and `'1'` characters, within `budget` symbols.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer. Release
 * the string with [`r1_string_free`].
 */
enum R1Status r1_word(const struct R1ParamSpec *params,
                      uint64_t level,
                      uint64_t budget,
                      char **out);

/**
 * Length of the generating word at `level`, as a decimal string (the
 * value can exceed any fixed-width integer).
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer. Release
 * the string with [`r1_string_free`].
 */
enum R1Status r1_word_length(const struct R1ParamSpec *params, uint64_t level, char **out);

/**
 * Number of 0-symbols of the generating word at `level`, as a decimal
 * string.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer. Release
 * the string with [`r1_string_free`].
 */
enum R1Status r1_zero_count(const struct R1ParamSpec *params, uint64_t level, char **out);

/**
 * The normalizer as JSON: `{"kind":"exact","value":{"num":..,"den":..}}`
 * or `{"kind":"lower_bound",...}`.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer. Release
 * the string with [`r1_string_free`].
 */
enum R1Status r1_normalizer_json(const struct R1ParamSpec *params, char **out);

/**
 * The measure-condition report as JSON.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer. Release
 * the string with [`r1_string_free`].
 */
enum R1Status r1_conditions_json(const struct R1ParamSpec *params, char **out);

/**
 * Runs the inverse-isomorphism decision procedure and returns the
 * decision (verdict, certificate, hypothesis record) as JSON.
 *
 * # Safety
 * `params` must be a live handle; `out` must be a valid pointer. Release
 * the string with [`r1_string_free`].
 */
enum R1Status r1_decide_json(const struct R1ParamSpec *params, char **out);

/**
 * Replays a witness certificate (JSON) against the parameters. Writes
 * whether it verified; returns a non-`Ok` status only for malformed
 * input.
 *
 * # Safety
 * `params` must be a live handle, `cert_json` a NUL-terminated string,
 * and `verified` a valid pointer.
 */
enum R1Status r1_verify_certificate_json(const struct R1ParamSpec *params,
                                         const char *cert_json,
                                         bool *verified);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be a string returned by this library and not yet freed.
 */
void r1_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RANK1_H */
