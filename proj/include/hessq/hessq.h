/* Licensed under the Apache License 2.0 (see LICENSE file).
 *
 * C interface to libhessq. Objects are opaque handles released with their
 * matching _free function. Every call that can fail returns a hessq_status;
 * the message of the most recent failure on the calling thread is available
 * from hessq_last_error(). Strings returned through char** out-parameters are
 * owned by the caller and released with hessq_string_free().
 */
#ifndef HESSQ_H
#define HESSQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HESSQ_API __declspec(dllexport)
#else
#define HESSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hessq_status {
  HESSQ_OK = 0,
  HESSQ_ERR_INVALID_ARGUMENT = 1,
  HESSQ_ERR_NON_SQUARE = 2,
  HESSQ_ERR_UNMAPPED_VARIABLE = 3,
  HESSQ_ERR_UNGRADED_VARIABLE = 4,
  HESSQ_ERR_NOT_NONDECREASING = 5,
  HESSQ_ERR_BELOW_DIAGONAL = 6,
  HESSQ_ERR_SIZE_MISMATCH = 7,
  HESSQ_ERR_INDEX_OUT_OF_RANGE = 8,
  HESSQ_ERR_UNSUPPORTED_FLAVOR = 9,
  HESSQ_ERR_DEGREE_BOUND_EXCEEDED = 10,
  HESSQ_ERR_RESOURCE_LIMIT = 11,
  HESSQ_ERR_SAMPLER_STUCK = 12,
  HESSQ_ERR_UNKNOWN_CHECK = 13,
  HESSQ_ERR_INVALID_PARAMS = 14,
  HESSQ_ERR_NOT_HOMOGENEOUS = 15,
  HESSQ_ERR_INTERNAL = 99
} hessq_status;

typedef enum hessq_format { HESSQ_FORMAT_TEXT = 0, HESSQ_FORMAT_JSON = 1, HESSQ_FORMAT_LATEX = 2 } hessq_format;

typedef struct hessq_poly hessq_poly;
typedef struct hessq_hessfn hessq_hessfn;
typedef struct hessq_report hessq_report;
typedef struct hessq_report_list hessq_report_list;

HESSQ_API const char* hessq_version(void);
HESSQ_API const char* hessq_status_name(hessq_status s);
/* Thread-local; empty string when the last call succeeded. */
HESSQ_API const char* hessq_last_error(void);
HESSQ_API void hessq_string_free(char* s);

/* Hessenberg functions. */
HESSQ_API hessq_status hessq_hessfn_parse(const char* csv, hessq_hessfn** out);
HESSQ_API hessq_status hessq_hessfn_peterson(int n, hessq_hessfn** out);
HESSQ_API hessq_status hessq_hessfn_full(int n, hessq_hessfn** out);
HESSQ_API hessq_status hessq_hessfn_h_m(int m, int n, hessq_hessfn** out);
HESSQ_API void hessq_hessfn_free(hessq_hessfn* h);
HESSQ_API int hessq_hessfn_n(const hessq_hessfn* h);
HESSQ_API int hessq_hessfn_dimension(const hessq_hessfn* h);
HESSQ_API int hessq_hessfn_is_indecomposable(const hessq_hessfn* h);
HESSQ_API hessq_status hessq_hessfn_csv(const hessq_hessfn* h, char** out);
HESSQ_API hessq_status hessq_hessfn_staircase(const hessq_hessfn* h, char** out);

/* Polynomials. h may be NULL for the unspecialized polynomial. */
HESSQ_API hessq_status hessq_poly_E(int i, int n, const hessq_hessfn* h, hessq_poly** out);
HESSQ_API hessq_status hessq_poly_E_interval(int i, int a, int b, const hessq_hessfn* h, hessq_poly** out);
HESSQ_API hessq_status hessq_poly_F(int i, int j, int n, hessq_poly** out);
HESSQ_API hessq_status hessq_poly_F_tilde(int i, int j, int m, int n, hessq_poly** out);
/* phi_h applied to p, a polynomial in the x_ij; h NULL means the full function. */
HESSQ_API hessq_status hessq_poly_phi(const hessq_poly* p, int n, const hessq_hessfn* h, hessq_poly** out);
HESSQ_API hessq_status hessq_poly_phi_inverse(const hessq_poly* p, int n, hessq_poly** out);
HESSQ_API hessq_status hessq_poly_from_json(const char* json, hessq_poly** out);
HESSQ_API void hessq_poly_free(hessq_poly* p);
HESSQ_API size_t hessq_poly_term_count(const hessq_poly* p);
HESSQ_API int hessq_poly_equal(const hessq_poly* a, const hessq_poly* b);
/* Sets *homogeneous and *degree in the grading deg x_ij = 2(i-j). */
HESSQ_API hessq_status hessq_poly_degree(const hessq_poly* p, int* homogeneous, int64_t* degree);
HESSQ_API hessq_status hessq_poly_render(const hessq_poly* p, hessq_format f, char** out);

/* Composite objects, rendered directly. */
HESSQ_API hessq_status hessq_render_jacobian(const hessq_hessfn* h, hessq_format f, char** out);
HESSQ_API hessq_status hessq_render_phi_images(const hessq_hessfn* h, hessq_format f, char** out);
HESSQ_API hessq_status hessq_render_generators(const hessq_hessfn* h, int tilde, hessq_format f, char** out);

/* Check registry. */
HESSQ_API size_t hessq_check_count(void);
HESSQ_API const char* hessq_check_id(size_t k);
HESSQ_API const char* hessq_check_description(size_t k);
/* Comma-separated parameter keys accepted by check k. */
HESSQ_API const char* hessq_check_params(size_t k);
HESSQ_API const char* hessq_check_example(size_t k);

/* params_json: a JSON object mapping parameter names to strings or
 * integers, or NULL for no parameters. */
HESSQ_API hessq_status hessq_run_check(const char* id, const char* params_json, hessq_report** out);
HESSQ_API void hessq_report_free(hessq_report* r);
/* "pass", "fail", "inconclusive" or "not-attempted". */
HESSQ_API const char* hessq_report_status(const hessq_report* r);
/* 0 pass or not-attempted, 1 fail, 2 inconclusive. */
HESSQ_API int hessq_report_exit_code(const hessq_report* r);
HESSQ_API hessq_status hessq_report_render(const hessq_report* r, hessq_format f, int include_timing, char** out);

typedef struct hessq_run_all_options {
  int max_n_identity;
  int max_n_groebner;
  uint64_t seed;
  int trials;
  unsigned workers; /* 0: hardware concurrency */
} hessq_run_all_options;

HESSQ_API void hessq_run_all_defaults(hessq_run_all_options* opts);
HESSQ_API hessq_status hessq_run_all(const hessq_run_all_options* opts, hessq_report_list** out);
HESSQ_API size_t hessq_report_list_size(const hessq_report_list* l);
/* Borrowed; valid until the list is freed. */
HESSQ_API const hessq_report* hessq_report_list_get(const hessq_report_list* l, size_t k);
HESSQ_API int hessq_report_list_exit_code(const hessq_report_list* l);
HESSQ_API hessq_status hessq_report_list_render(const hessq_report_list* l, hessq_format f, int include_timing,
                                                char** out);
HESSQ_API void hessq_report_list_free(hessq_report_list* l);

#ifdef __cplusplus
}
#endif

#endif /* HESSQ_H */
