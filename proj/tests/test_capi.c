/* Exercises the C interface from C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hessq/hessq.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_polys(void) {
  hessq_poly* e = NULL;
  char* s = NULL;
  EXPECT(hessq_poly_E(3, 3, NULL, &e) == HESSQ_OK);
  EXPECT(hessq_poly_render(e, HESSQ_FORMAT_TEXT, &s) == HESSQ_OK);
  EXPECT(strcmp(s, "x1*x2*x3 + x1*q23 + x3*q12 + q13") == 0);
  hessq_string_free(s);

  int homog = 0;
  int64_t deg = 0;
  EXPECT(hessq_poly_degree(e, &homog, &deg) == HESSQ_OK);
  EXPECT(homog == 1 && deg == 6);

  /* JSON round trip. */
  EXPECT(hessq_poly_render(e, HESSQ_FORMAT_JSON, &s) == HESSQ_OK);
  hessq_poly* back = NULL;
  EXPECT(hessq_poly_from_json(s, &back) == HESSQ_OK);
  EXPECT(hessq_poly_equal(e, back));
  hessq_string_free(s);
  hessq_poly_free(back);
  hessq_poly_free(e);

  hessq_poly* f = NULL;
  EXPECT(hessq_poly_F(2, 1, 2, &f) == HESSQ_OK);
  EXPECT(hessq_poly_render(f, HESSQ_FORMAT_TEXT, &s) == HESSQ_OK);
  EXPECT(strcmp(s, "-x21^2") == 0);
  hessq_string_free(s);

  /* phi(x21) = x1 at n = 2, and the inverse brings it back. */
  hessq_poly* x21 = NULL;
  EXPECT(hessq_poly_from_json("{\"terms\":[{\"exps\":{\"x21\":1},\"coeff\":\"1\"}]}", &x21) == HESSQ_OK);
  hessq_poly *img = NULL, *pre = NULL;
  EXPECT(hessq_poly_phi(x21, 2, NULL, &img) == HESSQ_OK);
  EXPECT(hessq_poly_render(img, HESSQ_FORMAT_TEXT, &s) == HESSQ_OK);
  EXPECT(strcmp(s, "x1") == 0);
  hessq_string_free(s);
  EXPECT(hessq_poly_phi_inverse(img, 2, &pre) == HESSQ_OK);
  EXPECT(hessq_poly_equal(pre, x21));
  hessq_poly_free(pre);
  hessq_poly_free(img);
  hessq_poly_free(x21);
  hessq_poly_free(f);

  hessq_poly* bad = NULL;
  EXPECT(hessq_poly_F(1, 2, 3, &bad) == HESSQ_ERR_INDEX_OUT_OF_RANGE);
  EXPECT(bad == NULL);
  EXPECT(strlen(hessq_last_error()) > 0);
  EXPECT(hessq_poly_render(NULL, HESSQ_FORMAT_TEXT, &s) == HESSQ_ERR_INVALID_ARGUMENT);
}

static void test_hessfn(void) {
  hessq_hessfn* h = NULL;
  char* s = NULL;
  EXPECT(hessq_hessfn_parse("2,3,3", &h) == HESSQ_OK);
  EXPECT(hessq_hessfn_n(h) == 3);
  EXPECT(hessq_hessfn_dimension(h) == 2);
  EXPECT(hessq_hessfn_is_indecomposable(h) == 1);
  EXPECT(hessq_hessfn_csv(h, &s) == HESSQ_OK);
  EXPECT(strcmp(s, "2,3,3") == 0);
  hessq_string_free(s);

  hessq_poly* e = NULL;
  EXPECT(hessq_poly_E(3, 3, h, &e) == HESSQ_OK);
  EXPECT(hessq_poly_render(e, HESSQ_FORMAT_TEXT, &s) == HESSQ_OK);
  EXPECT(strcmp(s, "x1*x2*x3 + x1*q23 + x3*q12") == 0);
  hessq_string_free(s);
  hessq_poly_free(e);

  EXPECT(hessq_render_jacobian(h, HESSQ_FORMAT_JSON, &s) == HESSQ_OK);
  EXPECT(strstr(s, "\"columns\"") != NULL);
  hessq_string_free(s);
  EXPECT(hessq_render_phi_images(h, HESSQ_FORMAT_TEXT, &s) == HESSQ_OK);
  EXPECT(strstr(s, "x31 = x1*x2 + q12") != NULL);
  hessq_string_free(s);
  EXPECT(hessq_render_generators(h, 0, HESSQ_FORMAT_TEXT, &s) == HESSQ_OK);
  EXPECT(strstr(s, "F(3,1)") != NULL);
  hessq_string_free(s);
  hessq_hessfn_free(h);

  hessq_hessfn* bad = NULL;
  EXPECT(hessq_hessfn_parse("3,2,3", &bad) == HESSQ_ERR_NOT_NONDECREASING);
  EXPECT(hessq_hessfn_parse("1,2,3", &bad) == HESSQ_OK);
  hessq_hessfn_free(bad);
  EXPECT(hessq_hessfn_parse("0,2,3", &bad) == HESSQ_ERR_BELOW_DIAGONAL);
}

static void test_checks(void) {
  EXPECT(hessq_check_count() == 16);
  EXPECT(hessq_check_id(hessq_check_count()) == NULL);
  int saw_main = 0;
  for (size_t k = 0; k < hessq_check_count(); ++k) {
    if (strcmp(hessq_check_id(k), "main-theorem") == 0) saw_main = 1;
    EXPECT(strlen(hessq_check_description(k)) > 0);
  }
  EXPECT(saw_main);

  hessq_report* r = NULL;
  char* s = NULL;
  EXPECT(hessq_run_check("main-theorem", "{\"n\": 3, \"h\": \"2,3,3\"}", &r) == HESSQ_OK);
  EXPECT(strcmp(hessq_report_status(r), "pass") == 0);
  EXPECT(hessq_report_exit_code(r) == 0);
  EXPECT(hessq_report_render(r, HESSQ_FORMAT_JSON, 0, &s) == HESSQ_OK);
  EXPECT(strstr(s, "membership_certificates") != NULL);
  EXPECT(strstr(s, "wall_time_ms") == NULL);
  hessq_string_free(s);
  hessq_report_free(r);

  EXPECT(hessq_run_check("xyz-identity", "{\"n\": \"5\"}", &r) == HESSQ_OK);
  EXPECT(hessq_report_exit_code(r) == 0);
  hessq_report_free(r);

  EXPECT(hessq_run_check("unknown", NULL, &r) == HESSQ_ERR_UNKNOWN_CHECK);
  EXPECT(hessq_run_check("xyz-identity", "[1]", &r) == HESSQ_ERR_INVALID_PARAMS);
  EXPECT(hessq_run_check("xyz-identity", "{\"n\": 2}", &r) == HESSQ_ERR_INVALID_PARAMS);
  EXPECT(hessq_run_check("xyz-identity", "{not json", &r) == HESSQ_ERR_INVALID_PARAMS);

  hessq_run_all_options opts;
  hessq_run_all_defaults(&opts);
  EXPECT(opts.max_n_identity == 6 && opts.max_n_groebner == 4);
  opts.max_n_identity = 3;
  opts.max_n_groebner = 2;
  opts.trials = 10;
  opts.workers = 2;
  hessq_report_list* l = NULL;
  EXPECT(hessq_run_all(&opts, &l) == HESSQ_OK);
  EXPECT(hessq_report_list_size(l) > 20);
  EXPECT(hessq_report_list_exit_code(l) == 0);
  EXPECT(hessq_report_list_get(l, hessq_report_list_size(l)) == NULL);
  EXPECT(hessq_report_list_render(l, HESSQ_FORMAT_JSON, 0, &s) == HESSQ_OK);
  EXPECT(strstr(s, "not-attempted") != NULL);
  hessq_string_free(s);
  hessq_report_list_free(l);
}

int main(void) {
  EXPECT(strcmp(hessq_status_name(HESSQ_ERR_SAMPLER_STUCK), "SamplerStuck") == 0);
  test_polys();
  test_hessfn();
  test_checks();
  if (failures) {
    fprintf(stderr, "%d C API expectations failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
