/* C interface to the positroid library. Strings returned through char** are
 * owned by the caller and released with pos_string_free. */
#ifndef POSITROID_H
#define POSITROID_H

#include <stddef.h>
#include <stdint.h>

#if defined(POSITROID_BUILDING)
#define POS_API __attribute__((visibility("default")))
#else
#define POS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pos_perm pos_perm;
typedef struct pos_model pos_model;

typedef enum {
  POS_OK = 0,
  POS_ERR_PARSE = 1,
  POS_ERR_NOT_CONNECTED = 2,
  POS_ERR_INVALID_MODEL = 3,
  POS_ERR_INCONSISTENT = 4,
  POS_ERR_MISMATCH = 5,
  POS_ERR_ARGUMENT = 6,
  POS_ERR_CAP_EXCEEDED = 7,
  POS_ERR_INTERNAL = 8
} pos_status;

typedef enum { POS_FORMAT_TEXT = 0, POS_FORMAT_JSON = 1, POS_FORMAT_DOT = 2 } pos_format;

typedef enum { POS_ORDER_LEX_LEAST = 0, POS_ORDER_LEX_GREATEST = 1, POS_ORDER_RANDOM = 2 } pos_bridge_order;

POS_API const char* pos_status_name(pos_status status);
/* Message of the last failing call on this thread; "" if none. */
POS_API const char* pos_last_error(void);
POS_API void pos_string_free(char* s);

/* Permutations */
POS_API pos_status pos_perm_parse(const char* text, pos_perm** out);
POS_API void pos_perm_free(pos_perm* p);
POS_API int pos_perm_size(const pos_perm* p);
POS_API int pos_perm_is_connected(const pos_perm* p);
POS_API int pos_perm_noninversions(const pos_perm* p);
POS_API pos_status pos_perm_format(const pos_perm* p, char** out);
/* All connected decorated permutations of [n], lexicographic. Free the array
 * with pos_perm_array_free. */
POS_API pos_status pos_perm_enumerate(int n, pos_perm*** out, size_t* count);
POS_API void pos_perm_array_free(pos_perm** perms, size_t count);

POS_API pos_status pos_necklace_json(const pos_perm* p, char** out);
POS_API pos_status pos_analyze(const pos_perm* p, pos_format format, char** out);

/* Dimer models */
POS_API pos_status pos_model_realize(const pos_perm* p, pos_bridge_order order, uint64_t seed, pos_model** out);
/* Unparseable JSON is reported as POS_ERR_INVALID_MODEL. */
POS_API pos_status pos_model_from_json(const char* text, pos_model** out);
POS_API void pos_model_free(pos_model* m);
POS_API pos_status pos_model_to_json(const pos_model* m, char** out);
/* POS_OK, POS_ERR_INVALID_MODEL or POS_ERR_INCONSISTENT; *problems gets one
 * line per violation (may be NULL). */
POS_API pos_status pos_model_check(const pos_model* m, char** problems);
POS_API pos_status pos_model_permutation(const pos_model* m, pos_perm** out);

/* Oracle; the model must pass pos_model_check. */
POS_API pos_status pos_oracle_pair(const pos_model* m, int v1, int v2, int* arrow_defining, int* x, int* y);
/* all != 0 reports every ordered pair; otherwise v1, v2 (0, 0 for none).
 * relations != 0 verifies every emitted relation; a failure gives
 * POS_ERR_MISMATCH with the report still filled in. */
POS_API pos_status pos_oracle_report(const pos_model* m, int all, int v1, int v2, int relations, char** out);

typedef struct {
  pos_bridge_order order;
  uint64_t seed;
  int threads;
  /* Extra relations "LHS = RHS" checked on every permutation. */
  const char* const* extra_relations;
  size_t extra_count;
} pos_crosscheck_options;

/* JSON run report in input order. POS_ERR_MISMATCH when any check fails. */
POS_API pos_status pos_crosscheck(const pos_perm* const* perms, size_t count, const pos_crosscheck_options* opt,
                                  char** report_json);

#ifdef __cplusplus
}
#endif

#endif
