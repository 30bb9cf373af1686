#ifndef QQ_QQ_H
#define QQ_QQ_H

/* C interface to the quantum quiver toolkit.
 *
 * Handles are opaque and owned by the caller. Every function returns a
 * qq_status; on failure qq_last_error() describes the problem (per thread).
 * Strings returned through char** are NUL-terminated UTF-8 and must be
 * released with qq_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(QQ_BUILDING_LIBRARY)
#    define QQ_API __declspec(dllexport)
#  else
#    define QQ_API __declspec(dllimport)
#  endif
#else
#  define QQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qq_quiver qq_quiver;
typedef struct qq_graph qq_graph;

typedef enum qq_status {
  QQ_OK = 0,
  QQ_ERR_INVALID_ARGUMENT = 1,
  QQ_ERR_UNKNOWN_ID = 2,
  QQ_ERR_VALIDATION = 3,
  QQ_ERR_NON_COMMUTATIVE = 4,
  QQ_ERR_PARSE = 5,
  QQ_ERR_RESOURCE = 6,
  QQ_ERR_INTERNAL = 7
} qq_status;

/* Outcome of a yes/no/unknown query. */
typedef enum qq_verdict {
  QQ_AFFIRMATIVE = 0,
  QQ_NEGATIVE = 1,
  QQ_INCONCLUSIVE = 3
} qq_verdict;

QQ_API const char* qq_last_error(void);
/* Line and column of the last parse error, 0 if the last error was not one. */
QQ_API size_t qq_last_error_line(void);
QQ_API size_t qq_last_error_column(void);
QQ_API const char* qq_status_name(qq_status status);
QQ_API void qq_string_free(char* s);

QQ_API qq_status qq_quiver_parse(const char* text, qq_quiver** out);
QQ_API qq_status qq_quiver_emit(const qq_quiver* q, char** out);
QQ_API qq_status qq_quiver_equal(const qq_quiver* a, const qq_quiver* b, int* equal);
QQ_API void qq_quiver_free(qq_quiver* q);

QQ_API qq_status qq_graph_parse(const char* text, qq_graph** out);
QQ_API qq_status qq_graph_emit(const qq_graph* g, char** out);
QQ_API void qq_graph_free(qq_graph* g);

QQ_API qq_status qq_quiver_from_graph(const qq_graph* g, qq_quiver** out);
QQ_API qq_status qq_quiver_to_graph(const qq_quiver* q, qq_graph** out);

QQ_API qq_status qq_quiver_info(const qq_quiver* q, int json, char** out);
QQ_API qq_status qq_quiver_complete(const qq_quiver* q, int json, qq_verdict* verdict,
                                    char** out);
QQ_API qq_status qq_quiver_divcheck(const qq_quiver* q, int json, qq_verdict* verdict,
                                    char** out);
QQ_API qq_status qq_quiver_weak_iso(const qq_quiver* a, const qq_quiver* b, int json,
                                    qq_verdict* verdict, char** out);
/* format: "dot" or "tikz". */
QQ_API qq_status qq_quiver_diagram(const qq_quiver* q, const char* format, char** out);
/* format: "json" or "text". */
QQ_API qq_status qq_quiver_lpa(const qq_quiver* q, const char* format, char** out);
QQ_API qq_status qq_quiver_lpa_matrix(const qq_quiver* q, char** out);
QQ_API qq_status qq_quiver_lpa_compare(const qq_quiver* q, int json, qq_verdict* verdict,
                                       char** out);
QQ_API qq_status qq_quiver_monoid(const qq_quiver* q, int json, char** out);

typedef struct qq_monoid_eq_options {
  int depth;
  int max_k;
  int max_m;
} qq_monoid_eq_options;

QQ_API qq_monoid_eq_options qq_monoid_eq_defaults(void);
QQ_API qq_status qq_quiver_monoid_eq(const qq_quiver* q, const char* lhs, const char* rhs,
                                     const qq_monoid_eq_options* options, int json,
                                     qq_verdict* verdict, char** out);
/* class_id names any vertex of the class, or NULL for every non-sink class. */
QQ_API qq_status qq_quiver_verify_witnesses(const qq_quiver* q, const char* class_id, int json,
                                       qq_verdict* verdict, char** out);

#ifdef __cplusplus
}
#endif

#endif
