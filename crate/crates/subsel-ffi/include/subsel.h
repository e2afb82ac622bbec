/* C interface to the subsel substring suffix query library. */

#ifndef SUBSEL_H
#define SUBSEL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes of every `subsel_*` call.
typedef enum SubselStatus {
  SUBSEL_STATUS_OK = 0,
  // A required pointer was null or an argument was malformed.
  SUBSEL_STATUS_INVALID_ARGUMENT = 1,
  SUBSEL_STATUS_IO = 2,
  SUBSEL_STATUS_EMPTY_TEXT = 3,
  // Positions out of bounds, i > j, or k outside [1, j-i+1].
  SUBSEL_STATUS_BAD_RANGE = 4,
  SUBSEL_STATUS_CORRUPT_INDEX = 5,
  // Output buffer too small; the required count has been written.
  SUBSEL_STATUS_BUFFER_TOO_SMALL = 6,
} SubselStatus;

// Opaque index handle.
typedef struct SubselIndex SubselIndex;

// One Lyndon factor `w^exponent`; `start` is the position of the first copy.
typedef struct SubselLyndonFactor {
  uint64_t start;
  uint64_t word_len;
  uint64_t exponent;
} SubselLyndonFactor;

// Arithmetic progression of prefix-suffix lengths.
typedef struct SubselProgression {
  uint64_t smallest;
  uint64_t diff;
  uint64_t count;
} SubselProgression;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds an index over `text[0..len]` with trade-off parameter `tau`
// (clamped to the valid range). Writes the new handle to `*out`.
//
// # Safety
// `text` must point to `len` readable bytes and `out` must be valid.
enum SubselStatus subsel_index_build(const uint8_t *text,
                                     size_t len,
                                     uint32_t tau,
                                     struct SubselIndex **out);

// Loads an index file written by `subsel_index_save_file` or the CLI.
//
// # Safety
// `path` must be a valid NUL-terminated string and `out` must be valid.
enum SubselStatus subsel_index_load_file(const char *path, struct SubselIndex **out);

// Serializes the index to `path`.
//
// # Safety
// `handle` must be a live handle and `path` a valid NUL-terminated string.
enum SubselStatus subsel_index_save_file(const struct SubselIndex *handle, const char *path);

// Releases a handle. A null handle is a no-op.
//
// # Safety
// `handle` must have been produced by this library and not yet freed.
void subsel_index_free(struct SubselIndex *handle);

// Text length of the index, or 0 for a null handle.
//
// # Safety
// `handle` must be a live handle or null.
uint64_t subsel_index_len(const struct SubselIndex *handle);

// Effective trade-off parameter of the index, or 0 for a null handle.
//
// # Safety
// `handle` must be a live handle or null.
uint32_t subsel_index_tau(const struct SubselIndex *handle);

// Minimal non-empty suffix of `T[i..j]` as (start, length).
//
// # Safety
// `handle` must be live; `start` and `len` must be writable.
enum SubselStatus subsel_min_suffix(const struct SubselIndex *handle,
                                    uint64_t i,
                                    uint64_t j,
                                    uint64_t *start,
                                    uint64_t *len);

// Maximal suffix of `T[i..j]` as (start, length).
//
// # Safety
// `handle` must be live; `start` and `len` must be writable.
enum SubselStatus subsel_max_suffix(const struct SubselIndex *handle,
                                    uint64_t i,
                                    uint64_t j,
                                    uint64_t *start,
                                    uint64_t *len);

// k-th lexicographically smallest suffix of `T[i..j]`, 1 <= k <= j-i+1.
//
// # Safety
// `handle` must be live; `start` and `len` must be writable.
enum SubselStatus subsel_select(const struct SubselIndex *handle,
                                uint64_t i,
                                uint64_t j,
                                uint64_t k,
                                uint64_t *start,
                                uint64_t *len);

// Number of suffixes of `T[i..j]` not larger than the full suffix `T[l..]`.
//
// # Safety
// `handle` must be live; `count` must be writable.
enum SubselStatus subsel_not_larger(const struct SubselIndex *handle,
                                    uint64_t i,
                                    uint64_t j,
                                    uint64_t l,
                                    uint64_t *count);

// Lyndon decomposition of `T[i..j]`. Writes up to `cap` factors to `out`
// and the total factor count to `*count`; returns `BufferTooSmall` when
// `cap` is insufficient (the count is still written, so a second call with
// a larger buffer can follow).
//
// # Safety
// `handle` must be live, `count` writable, and `out` must point to at
// least `cap` writable elements when `cap > 0`.
enum SubselStatus subsel_lyndon(const struct SubselIndex *handle,
                                uint64_t i,
                                uint64_t j,
                                struct SubselLyndonFactor *out,
                                size_t cap,
                                size_t *count);

// Prefix-suffix query: lengths lambda with `T[si..si+lambda-1] ==
// T[spj-lambda+1..spj]`, reported as increasing arithmetic progressions.
// Buffer semantics match `subsel_lyndon`.
//
// # Safety
// `handle` must be live, `count` writable, and `out` must point to at
// least `cap` writable elements when `cap > 0`.
enum SubselStatus subsel_psq(const struct SubselIndex *handle,
                             uint64_t si,
                             uint64_t sj,
                             uint64_t spi,
                             uint64_t spj,
                             struct SubselProgression *out,
                             size_t cap,
                             size_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBSEL_H */
