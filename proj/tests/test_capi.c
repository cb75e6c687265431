/* Plain C client of the public header. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "designlab.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

int main(void) {
  dl_series* s = NULL;
  char* str = NULL;

  EXPECT(dl_eta_quotient("1:8", 8, &s) == DL_OK);
  EXPECT(dl_series_offset24(s) == 8);
  EXPECT(dl_series_prec(s) == 8);
  EXPECT(dl_series_coefficient(s, 4, &str) == DL_OK);
  EXPECT(strcmp(str, "-70/1") == 0);
  dl_free_string(str);
  EXPECT(dl_series_vanishing_json(s, 8, &str) == DL_OK);
  EXPECT(strcmp(str, "[3,7]") == 0);
  dl_free_string(str);
  EXPECT(dl_series_coefficient(s, 9, &str) == DL_INSUFFICIENT_PRECISION);
  EXPECT(strlen(dl_last_error()) > 0);

  EXPECT(dl_series_to_json(s, &str) == DL_OK);
  dl_series* back = NULL;
  EXPECT(dl_series_from_json(str, &back) == DL_OK);
  EXPECT(dl_series_offset24(back) == 8);
  dl_free_string(str);
  dl_series_free(back);
  dl_series_free(s);

  EXPECT(dl_eta_quotient("x:y", 4, &s) == DL_INVALID_ARGUMENT);
  EXPECT(dl_eta_quotient(NULL, 4, &s) == DL_INVALID_ARGUMENT);

  dl_code* c = NULL;
  EXPECT(dl_code_load("golay24", &c) == DL_OK);
  int w8[] = {8};
  EXPECT(dl_code_design_json(c, w8, 1, 5, &str) == DL_OK);
  EXPECT(contains(str, "\"lambda\":1"));
  EXPECT(contains(str, "\"schema\":\"v1\""));
  dl_free_string(str);
  int w12[] = {12};
  int odd[] = {1, 3, 5};
  EXPECT(dl_code_tset_json(c, w12, 1, odd, 3, 5, 0, &str) == DL_OK);
  EXPECT(contains(str, "\"pass\":true"));
  dl_free_string(str);
  dl_code_free(c);
  EXPECT(dl_code_load("no-such-code", &c) == DL_NOT_FOUND);

  dl_lattice* l = NULL;
  EXPECT(dl_lattice_load("A2", &l) == DL_OK);
  EXPECT(dl_lattice_design_json(l, "2", 6, 0, &str) == DL_OK);
  EXPECT(contains(str, "\"strength\":5"));
  dl_free_string(str);
  EXPECT(dl_lattice_design_json(l, "abc", 6, 0, &str) == DL_INVALID_ARGUMENT);
  dl_lattice_free(l);

  EXPECT(dl_lattice_load("E8", &l) == DL_OK);
  EXPECT(dl_lattice_theta(l, "one", 4, 0, &s) == DL_OK);
  EXPECT(dl_series_coefficient(s, 2, &str) == DL_OK);
  EXPECT(strcmp(str, "240/1") == 0);
  dl_free_string(str);
  dl_series_free(s);
  EXPECT(dl_lattice_shell(l, "4", 100, "json", &str) == DL_CAP_EXCEEDED);
  EXPECT(dl_graded_trace(l, "one", 3, &s) == DL_OK);
  EXPECT(dl_series_coefficient(s, 1, &str) == DL_OK);
  EXPECT(strcmp(str, "248/1") == 0);
  dl_free_string(str);
  dl_series_free(s);
  dl_lattice_free(l);

  EXPECT(dl_ord_criterion(4) == 1);
  EXPECT(dl_ord_criterion(2) == 0);
  EXPECT(dl_ord_criterion(0) == -1);
  EXPECT(dl_voa_strength_json(16, 4, -1, &str) == DL_OK);
  EXPECT(contains(str, "\"contested_holds\":true"));
  dl_free_string(str);
  EXPECT(dl_voa_strength_json(12, 4, -1, &str) == DL_INVALID_ARGUMENT);
  EXPECT(dl_conformal_tset_json(8, 12, &str) == DL_OK);
  EXPECT(contains(str, "\"agrees\":true"));
  dl_free_string(str);
  EXPECT(dl_remark4_json(200, &str) == DL_OK);
  EXPECT(contains(str, "\"zero_exponents\":[]"));
  dl_free_string(str);

  EXPECT(dl_set_workers(2) == DL_OK);
  EXPECT(dl_get_workers() == 2);
  EXPECT(dl_set_workers(0) == DL_OK);
  EXPECT(dl_set_fixture_dir("/nonexistent") == DL_OK);
  EXPECT(dl_lattice_load("e8_cartan", &l) == DL_IO);
  EXPECT(dl_set_fixture_dir(NULL) == DL_OK);
  EXPECT(dl_lattice_load("e8_cartan", &l) == DL_OK);
  dl_lattice_free(l);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
