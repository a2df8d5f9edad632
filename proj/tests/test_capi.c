#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qdouble/qdouble.h"

static int failures = 0;

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) {                                                        \
      fprintf(stderr, "%s:%d: EXPECT(%s) failed\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                         \
    }                                                                     \
  } while (0)

static int run_passes(qd_checks* c) {
  qd_report* r = NULL;
  int ok;
  if (qd_checks_run(c, &r) != QD_OK) return 0;
  ok = qd_report_passed(r);
  qd_report_free(r);
  return ok;
}

int main(void) {
  qd_group* g = NULL;
  qd_group* bad = NULL;
  qd_cocycle* phi = NULL;
  qd_double* d = NULL;
  qd_double* mutant = NULL;
  qd_object* v = NULL;
  qd_checks* c = NULL;
  qd_report* r = NULL;
  char* text = NULL;
  int present = 0;

  EXPECT(strlen(qd_version()) > 0);
  EXPECT(strcmp(qd_status_name(QD_PARSE_ERROR), "parse_error") == 0);

  EXPECT(qd_group_create("zn:4", &g) == QD_OK);
  EXPECT(qd_group_size(g) == 4);
  EXPECT(qd_group_create("zn:0", &bad) != QD_OK);
  EXPECT(bad == NULL);
  EXPECT(strlen(qd_last_error()) > 0);
  EXPECT(qd_group_create(NULL, &bad) == QD_NULL_POINTER);

  EXPECT(qd_group_checks(g, &c) == QD_OK);
  EXPECT(qd_checks_count(c) > 0);
  EXPECT(run_passes(c));
  qd_checks_free(c);

  EXPECT(qd_group_table_checks("{\"size\":2,\"mul\":[[0,1],[1,1]]}", &c) == QD_OK);
  EXPECT(!run_passes(c));
  qd_checks_free(c);
  EXPECT(qd_group_table_checks("{\"size\":2,", &c) == QD_PARSE_ERROR);

  EXPECT(qd_cocycle_create(g, "std:zn:4:p=1", &phi) == QD_OK);
  EXPECT(qd_cocycle_order(phi) == 4);
  EXPECT(qd_cocycle_checks(phi, &c) == QD_OK);
  EXPECT(run_passes(c));
  qd_checks_free(c);

  EXPECT(qd_double_build(phi, NULL, &d) == QD_OK);
  EXPECT(qd_double_dim(d) == 16);
  EXPECT(qd_double_antipode(d, &present, NULL) == QD_OK);
  EXPECT(present == 1);
  EXPECT(qd_double_checks(d, "all", &c) == QD_OK);
  EXPECT(run_passes(c));
  qd_checks_free(c);

  EXPECT(qd_double_to_json(d, &text) == QD_OK);
  {
    qd_double* again = NULL;
    EXPECT(qd_double_load(text, &again) == QD_OK);
    EXPECT(qd_double_dim(again) == 16);
    qd_double_free(again);
  }
  qd_string_free(text);

  EXPECT(qd_double_build(phi, "invert_coproduct_ratio", &mutant) == QD_OK);
  EXPECT(qd_double_checks(mutant, "quasitriangular", &c) == QD_OK);
  EXPECT(qd_checks_run(c, &r) == QD_OK);
  EXPECT(!qd_report_passed(r));
  EXPECT(qd_report_failures(r) > 0);
  EXPECT(qd_report_to_text(r, &text) == QD_OK);
  EXPECT(strstr(text, "fail") != NULL);
  qd_string_free(text);
  qd_report_free(r);
  qd_checks_free(c);
  qd_double_free(mutant);
  EXPECT(qd_double_build(phi, "no_such_mutation", &mutant) == QD_INVALID_ARGUMENT);

  EXPECT(qd_object_regular(d, &v) == QD_OK);
  EXPECT(qd_object_dim(v) == 16);
  EXPECT(qd_crossed_checks(d, v, "hexagon", NULL, &c) == QD_OK);
  EXPECT(run_passes(c));
  qd_checks_free(c);
  EXPECT(qd_crossed_checks(d, v, "hexagon", "inverted_degree", &c) == QD_OK);
  EXPECT(!run_passes(c));
  qd_checks_free(c);
  qd_object_free(v);

  EXPECT(qd_reconstruct_checks(d, "doufh,douR", &c) == QD_OK);
  EXPECT(qd_checks_count(c) == 2);
  EXPECT(strcmp(qd_checks_name(c, 0), "doufh") == 0);
  EXPECT(qd_checks_name(c, 2) == NULL);
  {
    const int64_t point[2] = {0, 0};
    EXPECT(qd_checks_replay(c, "douR", point, 2, &r) == QD_OK);
    EXPECT(qd_report_passed(r));
    EXPECT(qd_report_size(r) == 1);
    EXPECT(qd_report_to_json(r, &text) == QD_OK);
    EXPECT(strstr(text, "douR") != NULL);
    qd_string_free(text);
    qd_report_free(r);
    EXPECT(qd_checks_replay(c, "nope", point, 2, &r) == QD_INVALID_ARGUMENT);
  }
  qd_checks_free(c);
  EXPECT(qd_reconstruct_checks(d, "bogus", &c) == QD_INVALID_ARGUMENT);

  EXPECT(qd_suite_checks("default", "group,cocycle", &c) == QD_OK);
  EXPECT(run_passes(c));
  qd_checks_free(c);

  qd_double_free(d);
  qd_cocycle_free(phi);
  qd_group_free(g);
  qd_group_free(NULL);

  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  printf("capi: all expectations met\n");
  return 0;
}
