#ifndef ARRANGEMENT_LAB_H
#define ARRANGEMENT_LAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum ArrlabStatus {
  ArrlabStatus_Ok = 0,
  /**
   * I/O-level failure: malformed JSON, bad rationals, duplicate rows.
   */
  ArrlabStatus_ParseError = 1,
  /**
   * Domain failure: not essential, resonant, not generic, bounds.
   */
  ArrlabStatus_DomainError = 2,
  ArrlabStatus_NullPointer = 3,
  ArrlabStatus_InvalidUtf8 = 4,
} ArrlabStatus;

/**
 * Opaque arrangement handle.
 */
typedef struct ArrlabArrangement ArrlabArrangement;

/**
 * Opaque local-system handle.
 */
typedef struct ArrlabLocalSystem ArrlabLocalSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. Valid until the
 * next failing call; never null.
 */
const char *arrlab_last_error_message(void);

/**
 * Frees a string returned by any `_json` function.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void arrlab_string_free(char *s);

/**
 * Parses an arrangement from its JSON interchange format.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be writable.
 */
enum ArrlabStatus arrlab_arrangement_parse(const char *json, struct ArrlabArrangement **out);

/**
 * # Safety
 * `a` must come from `arrlab_arrangement_parse` and not be freed twice.
 */
void arrlab_arrangement_free(struct ArrlabArrangement *a);

uintptr_t arrlab_arrangement_dim(const struct ArrlabArrangement *a);

uintptr_t arrlab_arrangement_size(const struct ArrlabArrangement *a);

enum ArrlabStatus arrlab_arrangement_is_essential(const struct ArrlabArrangement *a, bool *out);

enum ArrlabStatus arrlab_arrangement_to_json(const struct ArrlabArrangement *a, char **out);

/**
 * Parses a local system against an arrangement (row count must match).
 *
 * # Safety
 * As for `arrlab_arrangement_parse`.
 */
enum ArrlabStatus arrlab_local_system_parse(const char *json,
                                            const struct ArrlabArrangement *a,
                                            struct ArrlabLocalSystem **out);

/**
 * # Safety
 * `l` must come from `arrlab_local_system_parse` and not be freed twice.
 */
void arrlab_local_system_free(struct ArrlabLocalSystem *l);

/**
 * Characteristic polynomial as `{"coefficients": [...], "pretty": "..."}`.
 */
enum ArrlabStatus arrlab_char_poly_json(const struct ArrlabArrangement *a, char **out);

/**
 * Flat-by-flat poset report.
 */
enum ArrlabStatus arrlab_poset_json(const struct ArrlabArrangement *a, char **out);

/**
 * Betti numbers by both routes with a match verdict.
 */
enum ArrlabStatus arrlab_betti_json(const struct ArrlabArrangement *a, char **out);

/**
 * Generic section (seeded) as an arrangement JSON file.
 */
enum ArrlabStatus arrlab_section_json(const struct ArrlabArrangement *a, uint64_t seed, char **out);

/**
 * Dense edges at infinity.
 */
enum ArrlabStatus arrlab_dense_edges_json(const struct ArrlabArrangement *a, char **out);

/**
 * Nonresonance verdict. A resonant system is a successful check: the
 * verdict lands in `out_nonresonant` and the report lists violations.
 */
enum ArrlabStatus arrlab_check_nonresonant_json(const struct ArrlabArrangement *a,
                                                const struct ArrlabLocalSystem *l,
                                                bool *out_nonresonant,
                                                char **out);

/**
 * Twisted homology dimensions; `section` selects the generic section.
 */
enum ArrlabStatus arrlab_homology_json(const struct ArrlabArrangement *a,
                                       const struct ArrlabLocalSystem *l,
                                       bool section,
                                       char **out);

/**
 * Hurewicz surjectivity certificate.
 */
enum ArrlabStatus arrlab_certify_hurewicz_json(const struct ArrlabArrangement *a,
                                               const struct ArrlabLocalSystem *l,
                                               char **out);

/**
 * Signed Euler characteristic of the generic section.
 */
enum ArrlabStatus arrlab_euler_positivity(const struct ArrlabArrangement *a,
                                          int64_t *out_value,
                                          bool *out_positive);

/**
 * Euler characteristic of the generic k-section and its positivity witness.
 */
enum ArrlabStatus arrlab_homotopy_nonvanishing(const struct ArrlabArrangement *a,
                                               uintptr_t k,
                                               int64_t *out_euler,
                                               bool *out_nonvanishing);

/**
 * Consolidated oracle run; `all_passed` false means a library bug.
 */
enum ArrlabStatus arrlab_oracle_check_json(const struct ArrlabArrangement *a,
                                           uint64_t seed,
                                           char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ARRANGEMENT_LAB_H */
