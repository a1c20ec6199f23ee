#ifndef MANIN_H
#define MANIN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of a call across the C boundary.
 */
typedef enum ManinStatus {
  MANIN_STATUS_OK = 0,
  MANIN_STATUS_NULL_POINTER = 1,
  MANIN_STATUS_INVALID_UTF8 = 2,
  MANIN_STATUS_INVALID_INPUT = 3,
  MANIN_STATUS_PANIC = 4,
} ManinStatus;

/**
 * Opaque handle to a complex reductive Lie algebra.
 */
typedef struct ManinAlgebra ManinAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds `g = g_1 × … × g_k × C^center_rank` from comma-separated type names
 * such as `"A1,A2"`; an empty string gives an abelian algebra.
 *
 * # Safety
 * `types` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ManinStatus manin_algebra_new(const char *types,
                                   size_t center_rank,
                                   struct ManinAlgebra **out);

/**
 * Releases an algebra; null is ignored.
 *
 * # Safety
 * `alg` must come from [`manin_algebra_new`] and not be used afterwards.
 */
void manin_algebra_free(struct ManinAlgebra *alg);

/**
 * Complex dimension, or 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t manin_algebra_dim(const struct ManinAlgebra *alg);

/**
 * Rank (dimension of a Cartan subalgebra), or 0 for a null handle.
 *
 * # Safety
 * `alg` must be null or a live handle.
 */
size_t manin_algebra_rank(const struct ManinAlgebra *alg);

/**
 * Human-readable description, e.g. `A1xA2 + C^1`.
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer; free the result
 * with [`manin_string_free`].
 */
enum ManinStatus manin_algebra_describe(const struct ManinAlgebra *alg, char **out);

/**
 * Runs one JSON scenario and returns the JSON report.
 *
 * The call succeeds whenever a report is produced, even if the scenario
 * fails: `exit_code` then carries the runner's code (0 pass, 1 a command
 * failed, 2 parse error, 3 validation error).
 *
 * # Safety
 * `scenario_json` must be a NUL-terminated string; `report` and `exit_code`
 * must be valid pointers. Free the report with [`manin_string_free`].
 */
enum ManinStatus manin_run_scenario(const char *scenario_json,
                                    bool verbose,
                                    char **report,
                                    int32_t *exit_code);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void manin_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next call into the library on this thread.
 */
const char *manin_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MANIN_H */
