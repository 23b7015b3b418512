#ifndef FIELDSIM_H
#define FIELDSIM_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Values accepted for the `mode` parameters.
 */
typedef enum FsMode {
  FS_MODE_MMCWPA = 0,
  FS_MODE_MCWPA_LEGACY = 1,
  FS_MODE_LEVENSHTEIN = 2,
} FsMode;

typedef enum FsStatus {
  FS_STATUS_OK = 0,
  FS_STATUS_NULL_POINTER = 1,
  FS_STATUS_INVALID_UTF8 = 2,
  FS_STATUS_INVALID_MODE = 3,
  FS_STATUS_INVALID_ARGUMENT = 4,
  FS_STATUS_OUT_OF_RANGE = 5,
  FS_STATUS_BUFFER_TOO_SMALL = 6,
  FS_STATUS_PANIC = 7,
} FsStatus;

/**
 * Opaque list of near-duplicate pairs.
 */
typedef struct FsPairs FsPairs;

/**
 * Opaque ranking.
 */
typedef struct FsRanking FsRanking;

/**
 * Opaque similarity result.
 */
typedef struct FsResult FsResult;

/**
 * One window match. Positions index the subfield lists as they stood when
 * the match was made.
 */
typedef struct FsWindowMatch {
  size_t pattern_length;
  size_t x_subfield_index;
  size_t x_offset;
  size_t y_subfield_index;
  size_t y_offset;
  uint64_t ssnc_contribution;
} FsWindowMatch;

typedef struct FsRankedCandidate {
  size_t index;
  size_t rank;
  double score;
} FsRankedCandidate;

typedef struct FsPair {
  size_t i;
  size_t j;
  double score;
} FsPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *fs_status_message(uint32_t status);

const char *fs_version(void);

/**
 * Scores `x` against `y`. On success `*out` owns a new handle.
 */
enum FsStatus fs_similarity(const char *x, const char *y, uint32_t mode, struct FsResult **out);

void fs_result_free(struct FsResult *result);

/**
 * Score in `[0, 1]`; NaN for a null handle.
 */
double fs_result_score(const struct FsResult *result);

/**
 * Score truncated to four decimals, as an integer in `0..=10000`.
 */
uint32_t fs_result_score_ten_thousandths(const struct FsResult *result);

/**
 * Writes the four-decimal score (for example `0.6731`) into `buf`,
 * NUL-terminated. Needs at least 7 bytes.
 */
enum FsStatus fs_result_format_score(const struct FsResult *result, char *buf, size_t len);

uint64_t fs_result_ssnc(const struct FsResult *result);

/**
 * Unit counts of the two fields.
 */
enum FsStatus fs_result_lengths(const struct FsResult *result, size_t *n, size_t *m);

size_t fs_result_trace_len(const struct FsResult *result);

enum FsStatus fs_result_trace_get(const struct FsResult *result,
                                  size_t index,
                                  struct FsWindowMatch *out);

enum FsStatus fs_levenshtein(const char *x, const char *y, size_t *distance, double *ratio);

/**
 * Ranks `count` candidates against `query`. `top_k == 0` keeps all.
 */
enum FsStatus fs_rank(const char *query,
                      const char *const *candidates,
                      size_t count,
                      uint32_t mode,
                      size_t top_k,
                      struct FsRanking **out);

size_t fs_ranking_len(const struct FsRanking *ranking);

enum FsStatus fs_ranking_get(const struct FsRanking *ranking,
                             size_t position,
                             struct FsRankedCandidate *out);

void fs_ranking_free(struct FsRanking *ranking);

/**
 * Pairs `i < j` scoring at least `threshold` (in `[0, 1]`).
 */
enum FsStatus fs_dedup_pairs(const char *const *records,
                             size_t count,
                             uint32_t mode,
                             double threshold,
                             struct FsPairs **out);

size_t fs_pairs_len(const struct FsPairs *pairs);

enum FsStatus fs_pairs_get(const struct FsPairs *pairs, size_t position, struct FsPair *out);

void fs_pairs_free(struct FsPairs *pairs);

/**
 * Generates one string of `length` units from a weighted token table.
 * `*out` receives a string to release with [`fs_string_free`].
 */
enum FsStatus fs_generate(const char *const *tokens,
                          const double *weights,
                          size_t count,
                          size_t length,
                          uint64_t seed,
                          char **out);

void fs_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIELDSIM_H */
