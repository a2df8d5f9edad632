/* C interface to the twisted quantum double library.
 *
 * All objects are opaque handles released with their *_free function.
 * Functions return a qd_status; on failure qd_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * allocated by the library and released with qd_string_free.
 *
 * Verification is two-step: a *_checks function builds a list of named
 * clauses (nothing is evaluated yet), qd_checks_run evaluates all of them and
 * qd_checks_replay re-evaluates one clause at one witness point.
 */
#ifndef QDOUBLE_H
#define QDOUBLE_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define QD_API __attribute__((visibility("default")))
#else
#define QD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qd_status {
  QD_OK = 0,
  QD_INVALID_ARGUMENT = 1,
  QD_PARSE_ERROR = 2,
  QD_DIVISION_BY_ZERO = 3,
  QD_NOT_INVERTIBLE = 4,
  QD_BUDGET_EXCEEDED = 5,
  QD_IO_ERROR = 6,
  QD_INTERNAL = 7,
  QD_NULL_POINTER = 8
} qd_status;

typedef struct qd_group qd_group;
typedef struct qd_cocycle qd_cocycle;
typedef struct qd_double qd_double;
typedef struct qd_object qd_object;
typedef struct qd_checks qd_checks;
typedef struct qd_report qd_report;

QD_API const char* qd_version(void);
QD_API const char* qd_status_name(qd_status s);
/* Message of the last failed call on this thread ("" if none). */
QD_API const char* qd_last_error(void);
QD_API void qd_string_free(char* s);

/* Groups: "zn:4", "s:3", "d:4", "prod(zn:2,zn:2)", "trivial", or inline JSON. */
QD_API qd_status qd_group_create(const char* descriptor, qd_group** out);
QD_API void qd_group_free(qd_group* g);
QD_API int qd_group_size(const qd_group* g);
QD_API qd_status qd_group_to_json(const qd_group* g, char** out);
QD_API qd_status qd_group_checks(const qd_group* g, qd_checks** out);
/* Group axioms on a JSON table that need not define a group. */
QD_API qd_status qd_group_table_checks(const char* json_text, qd_checks** out);

/* Cocycles: "trivial", "std:zn:N:p=k", a JSON file path or inline JSON.
 * g may be NULL when the descriptor names its own group. */
QD_API qd_status qd_cocycle_create(const qd_group* g, const char* descriptor, qd_cocycle** out);
QD_API void qd_cocycle_free(qd_cocycle* c);
QD_API unsigned qd_cocycle_order(const qd_cocycle* c);
QD_API qd_status qd_cocycle_to_json(const qd_cocycle* c, char** out);
/* 3-cocycle law, full normalization, and the chi 2-cocycle law. */
QD_API qd_status qd_cocycle_checks(const qd_cocycle* c, qd_checks** out);
/* Brute force over normalized mu_root_order-valued 2-cochains. On success
 * *cohomologous is 0/1 and *witness (may be NULL) receives the 2-cochain as
 * JSON, or "null". */
QD_API qd_status qd_cocycle_compare(const qd_cocycle* a, const qd_cocycle* b, unsigned root_order, int* cohomologous,
                                    char** witness);

/* D^phi(G). mutation may be NULL or "none". The antipode is attached when it
 * verifies; see qd_double_antipode. */
QD_API qd_status qd_double_build(const qd_cocycle* c, const char* mutation, qd_double** out);
/* A quasi-Hopf algebra from a JSON dump (file path or inline JSON). */
QD_API qd_status qd_double_load(const char* path_or_json, qd_double** out);
QD_API void qd_double_free(qd_double* d);
QD_API int qd_double_dim(const qd_double* d);
QD_API qd_status qd_double_to_json(const qd_double* d, char** out);
/* *present = 1 if an antipode is attached, else 0 and *diagnostic says why. */
QD_API qd_status qd_double_antipode(const qd_double* d, int* present, char** diagnostic);
/* suite: bialgebra | antipode | quasitriangular | dpr | degeneration | all.
 * dpr and degeneration need a built double. */
QD_API qd_status qd_double_checks(const qd_double* d, const char* suite, qd_checks** out);

/* Crossed G-modules over the cocycle of a built double. */
QD_API qd_status qd_object_regular(const qd_double* d, qd_object** out);
QD_API qd_status qd_object_ideal(const qd_double* d, int s, qd_object** out);
QD_API qd_status qd_object_load(const qd_double* d, const char* path_or_json, qd_object** out);
QD_API void qd_object_free(qd_object* v);
QD_API int qd_object_dim(const qd_object* v);
QD_API qd_status qd_object_to_json(const qd_object* v, char** out);
/* command: verify | tensor | braid | hexagon | transport | all.
 * variant: standard | inverted_degree | flip_left_degree (NULL = standard). */
QD_API qd_status qd_crossed_checks(const qd_double* d, const qd_object* v, const char* command, const char* variant,
                                   qd_checks** out);

/* relations: comma list of doufh, doufg, doudelta, douR, douphi, douact, or all. */
QD_API qd_status qd_reconstruct_checks(const qd_double* d, const char* relations, qd_checks** out);

/* catalog: "default" or a catalog file; sections: comma list or NULL for all. */
QD_API qd_status qd_suite_checks(const char* catalog, const char* sections, qd_checks** out);

QD_API void qd_checks_free(qd_checks* c);
QD_API size_t qd_checks_count(const qd_checks* c);
/* Valid until the handle is freed; NULL if i is out of range. */
QD_API const char* qd_checks_name(const qd_checks* c, size_t i);
QD_API qd_status qd_checks_run(const qd_checks* c, qd_report** out);
QD_API qd_status qd_checks_replay(const qd_checks* c, const char* name, const int64_t* point, size_t len,
                                  qd_report** out);

QD_API void qd_report_free(qd_report* r);
QD_API int qd_report_passed(const qd_report* r);
QD_API size_t qd_report_size(const qd_report* r);
QD_API size_t qd_report_failures(const qd_report* r);
/* [{"name", "status", "witness": {"point", "detail"}, "note"}, ...] */
QD_API qd_status qd_report_to_json(const qd_report* r, char** out);
QD_API qd_status qd_report_to_text(const qd_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QDOUBLE_H */
