/* weylq - exact-arithmetic toolkit for Weyl group conjugacy classes,
 * adapted normal orderings, Cayley-transform data and quantum-group
 * verification suites.
 *
 * All functions return WEYLQ_OK on success.  Strings returned through out
 * parameters are heap allocated and must be released with
 * weylq_string_free().  A failing call leaves a human readable message in
 * weylq_last_error() (thread local).
 */
#ifndef WEYLQ_H
#define WEYLQ_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum weylq_status {
  WEYLQ_OK = 0,
  WEYLQ_ERR_UNSUPPORTED_TYPE = 1,
  WEYLQ_ERR_RANK_TOO_LARGE = 2,
  WEYLQ_ERR_NOT_REDUCED = 3,
  WEYLQ_ERR_WRONG_LENGTH = 4,
  WEYLQ_ERR_NOT_A_PERMUTATION = 5,
  WEYLQ_ERR_TOO_LARGE = 6,
  WEYLQ_ERR_ANTIPODAL_PAIR = 7,
  WEYLQ_ERR_NO_FIXTURE = 8,
  WEYLQ_ERR_NOT_FOUND = 9,
  WEYLQ_ERR_CONSTRUCTION_FAILED = 10,
  WEYLQ_ERR_SINGULAR_CARTER_MATRIX = 11,
  WEYLQ_ERR_IMPURE_ROOT_VECTOR = 12,
  WEYLQ_ERR_INCONSISTENT_SYSTEM = 13,
  WEYLQ_ERR_NON_UNIQUE_SOLUTION = 14,
  WEYLQ_ERR_HEIGHT_BOUND = 15,
  WEYLQ_ERR_INCOMPLETE_RELATIONS = 16,
  WEYLQ_ERR_SPECIALIZATION_SINGULAR = 17,
  WEYLQ_ERR_INVARIANT_VIOLATION = 18,
  WEYLQ_ERR_USAGE = 19,
  WEYLQ_ERR_INTERNAL = 20
} weylq_status;

/* opaque handle for a root system session */
typedef struct weylq_system weylq_system;

weylq_status weylq_system_create(const char* label, weylq_system** out);
void weylq_system_destroy(weylq_system* sys);

/* root system data as JSON (schema weylq/1) */
weylq_status weylq_system_json(const weylq_system* sys, char** out);

/* per-conjugacy-class dimension table; format is "json" or "csv" */
weylq_status weylq_classes(const weylq_system* sys, const char* format, char** out);

/* adapted normal ordering and segment for a class.  class_spec is
 * "identity", "coxeter", "w0" or a comma separated 1-based word such as
 * "1,2,1".  plane_order is "angle-desc" (default when NULL) or "angle-asc". */
weylq_status weylq_ordering(const weylq_system* sys, const char* class_spec,
                            const char* plane_order, char** out);

/* appendix fixture ordering for the longest element (B/C/D/F4/G2 series) */
weylq_status weylq_fixture(const char* label, char** out);

/* twisted commutation-relation table for the segment of a class; available
 * at relation-pipeline scale (rank <= 2 plus A3) */
weylq_status weylq_relations(const weylq_system* sys, const char* class_spec,
                             const char* plane_order, char** out);

/* verification suites; *failures receives the number of failed checks */
weylq_status weylq_verify(const weylq_system* sys, char** report_json, int* failures);

/* the sl2 module report; epsilon is "symbolic" or a rational "p/q" */
weylq_status weylq_sl2w(int max_m, int max_k, const char* epsilon, char** out);

void weylq_string_free(char* s);
const char* weylq_status_name(weylq_status status);
/* message of the last failing call on this thread; empty string otherwise */
const char* weylq_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* WEYLQ_H */
