/* Generated by cbindgen from src/lib.rs; do not edit. */

#ifndef SANDWICH_H
#define SANDWICH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SwStatus {
  SW_STATUS_OK = 0,
  SW_STATUS_NULL_POINTER = 1,
  SW_STATUS_UTF8 = 2,
  SW_STATUS_PARSE = 3,
  SW_STATUS_OVERLAP = 4,
  SW_STATUS_RANGE = 5,
  SW_STATUS_SIZE = 6,
  SW_STATUS_BUDGET = 7,
  SW_STATUS_SIGNATURE = 8,
  SW_STATUS_NOT_BIPARTITE = 9,
  SW_STATUS_INVALID = 10,
  SW_STATUS_PANIC = 11,
} SwStatus;

typedef enum SwMethod {
  SW_METHOD_AUTO = 0,
  SW_METHOD_POLY = 1,
  SW_METHOD_SEARCH = 2,
  SW_METHOD_ORACLE = 3,
} SwMethod;

/**
 * A validated sandwich instance.
 */
typedef struct SwInstance SwInstance;

/**
 * Outcome of [`sw_solve`]: a verdict plus the completion when YES.
 */
typedef struct SwResult SwResult;

/**
 * A finite relational structure.
 */
typedef struct SwStructure SwStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *sw_last_error(void);

/**
 * Parses the `p swi` text format.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` a writable pointer.
 */
enum SwStatus sw_instance_parse(const char *src, struct SwInstance **out);

/**
 * Builds an instance from 0-based pairs stored as consecutive `u, v`
 * entries: `forced_len` and `forbidden_len` count pairs, not entries.
 *
 * # Safety
 * Each array must hold `2 * len` entries (or be null when `len` is 0) and
 * `out` must be writable.
 */
enum SwStatus sw_instance_new(uint32_t n,
                              const uint32_t *forced,
                              size_t forced_len,
                              const uint32_t *forbidden,
                              size_t forbidden_len,
                              struct SwInstance **out);

/**
 * # Safety
 * `inst` must come from this library and not be used afterwards.
 */
void sw_instance_free(struct SwInstance *inst);

/**
 * # Safety
 * `inst` must be a live handle or null.
 */
uint32_t sw_instance_vertex_count(const struct SwInstance *inst);

/**
 * Canonical `p swi` text; free with [`sw_string_free`].
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum SwStatus sw_instance_emit(const struct SwInstance *inst, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sw_string_free(char *s);

/**
 * Solves `inst` for the named class (`split`, `pqsplit:1,2`, ...). A zero
 * budget means the default. Running out of budget returns
 * [`SwStatus::Budget`].
 *
 * # Safety
 * `inst` must be a live handle, `class_name` a nul-terminated string and
 * `out` writable.
 */
enum SwStatus sw_solve(const struct SwInstance *inst,
                       const char *class_name,
                       enum SwMethod method,
                       uint64_t budget,
                       struct SwResult **out);

/**
 * # Safety
 * `res` must be a live handle or null.
 */
bool sw_result_is_yes(const struct SwResult *res);

/**
 * Number of completion edges; 0 for NO.
 *
 * # Safety
 * `res` must be a live handle or null.
 */
size_t sw_result_edge_count(const struct SwResult *res);

/**
 * Copies the completion into `buf` as 0-based `u, v` entries. `cap` is the
 * number of pairs `buf` can hold.
 *
 * # Safety
 * `res` must be a live handle and `buf` hold `2 * cap` entries.
 */
enum SwStatus sw_result_edges(const struct SwResult *res, uint32_t *buf, size_t cap);

/**
 * # Safety
 * `res` must come from this library and not be used afterwards.
 */
void sw_result_free(struct SwResult *res);

/**
 * Class membership of a graph given in the `p gr` format.
 *
 * # Safety
 * Both strings must be nul-terminated and `out` writable.
 */
enum SwStatus sw_recognize(const char *graph, const char *class_name, bool *out);

/**
 * Parses the `p fst` text format.
 *
 * # Safety
 * `src` must be nul-terminated and `out` writable.
 */
enum SwStatus sw_structure_parse(const char *src, struct SwStructure **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sw_structure_free(struct SwStructure *s);

/**
 * Whether the template has a 4-ary Siggers polymorphism.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum SwStatus sw_has_siggers(const struct SwStructure *s, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SANDWICH_H */
