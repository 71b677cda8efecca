/* The shared library's C interface, exercised from plain C. */
#include "charrig.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static charrig_complex* load(const char* name) {
  char path[4096];
  charrig_complex* x = NULL;
  snprintf(path, sizeof path, "%s/%s.json", CHARRIG_CORPUS_DIR, name);
  EXPECT(charrig_complex_load(path, &x) == CHARRIG_OK);
  return x;
}

int main(void) {
  char buf[64];
  charrig_complex* rp2 = load("rp2");
  charrig_complex* t2 = load("t2");
  charrig_complex* bad = NULL;
  charrig_report* r = NULL;
  charrig_report* r4 = NULL;
  charrig_options o;
  int pairs[2] = {1, 2};
  int degrees[1] = {2};

  EXPECT(strcmp(charrig_version(), "0.1.0") == 0);
  EXPECT(strcmp(charrig_status_name(CHARRIG_E_NOT_A_CYCLE), "not_a_cycle") == 0);
  if (!rp2 || !t2) return 1;

  EXPECT(strcmp(charrig_complex_name(rp2), "rp2") == 0);
  EXPECT(charrig_complex_dimension(rp2) == 2);
  EXPECT(charrig_complex_count(t2, 2) == 14);
  EXPECT(charrig_complex_count(t2, 3) == 0);

  EXPECT(charrig_cohomology(rp2, 2, "Z", buf, sizeof buf) == CHARRIG_OK);
  EXPECT(strcmp(buf, "Z/2") == 0);
  EXPECT(charrig_cohomology(t2, 1, "Z", buf, sizeof buf) == CHARRIG_OK);
  EXPECT(strcmp(buf, "Z^2") == 0);
  EXPECT(charrig_cohomology(t2, 1, "Z", buf, 2) == CHARRIG_E_SHAPE);
  EXPECT(charrig_cohomology(t2, 1, "R", buf, sizeof buf) == CHARRIG_E_PARSE);
  EXPECT(charrig_cohomology(t2, -1, "Z", buf, sizeof buf) == CHARRIG_E_DEGREE);

  EXPECT(charrig_complex_parse("{\"name\": \"x\", \"simplices\": [[1, 0]]}", &bad) == CHARRIG_E_PARSE);
  EXPECT(bad == NULL);
  EXPECT(strlen(charrig_last_error()) > 0);
  EXPECT(charrig_complex_load("/nonexistent/x.json", &bad) == CHARRIG_E_IO);

  charrig_options_init(&o);
  o.degree_pairs = pairs;
  o.pair_count = 1;
  EXPECT(charrig_run("ring", rp2, &o, &r) == CHARRIG_OK);
  o.threads = 4;
  EXPECT(charrig_run("ring", rp2, &o, &r4) == CHARRIG_OK);
  if (r && r4) {
    EXPECT(charrig_report_passed(r) == 1);
    EXPECT(charrig_report_failures(r) == 0);
    EXPECT(strcmp(charrig_report_hash(r), charrig_report_hash(r4)) == 0);
    EXPECT(strcmp(charrig_report_canonical(r), charrig_report_canonical(r4)) == 0);
    EXPECT(strlen(charrig_report_hash(r)) == 64);
    EXPECT(strstr(charrig_report_pretty(r), "passed") != NULL);
  }
  charrig_report_free(r);
  charrig_report_free(r4);

  charrig_options_init(&o);
  o.degrees = degrees;
  o.degree_count = 1;
  r = NULL;
  EXPECT(charrig_run("diagram", rp2, &o, &r) == CHARRIG_OK);
  EXPECT(r && charrig_report_passed(r));
  charrig_report_free(r);

  o.max_subdiv = 7;
  r = NULL;
  EXPECT(charrig_run("phi", rp2, &o, &r) == CHARRIG_E_INVALID_ARGUMENT);
  EXPECT(r == NULL);
  EXPECT(charrig_run("nope", rp2, NULL, &r) == CHARRIG_E_INVALID_ARGUMENT);
  EXPECT(charrig_run("inspect", NULL, NULL, &r) == CHARRIG_E_INVALID_ARGUMENT);

  charrig_complex_free(rp2);
  charrig_complex_free(t2);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
