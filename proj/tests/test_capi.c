#include <stdio.h>
#include <string.h>

#include "curvelim/curvelim.h"

static int failures = 0;

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static const char* kVessel =
    "{\"A1\": [[{\"re\": \"0\", \"im\": \"1\"}]], \"A2\": [[{\"re\": \"1\", \"im\": \"2\"}]],"
    " \"Phi\": [[\"1\"]], \"sigma1\": [[\"2\"]], \"sigma2\": [[\"4\"]], \"gamma_in\": [[\"2\"]],"
    " \"gamma_out\": [[\"2\"]]}";

static const char* kConic =
    "{\"D0\": [[1, 0], [0, 1]], \"D1\": [[1, 0], [0, -1]], \"D2\": [[0, 1], [1, 0]]}";

static void test_jobs(void) {
  size_t i, n = curvelim_command_count();
  CHECK(n == 13);
  for (i = 0; i < n; ++i) CHECK(curvelim_command_name(i) != NULL);
  CHECK(curvelim_command_name(n) == NULL);

  curvelim_job* job = NULL;
  CHECK(curvelim_job_create("no such", &job) == CURVELIM_E_INPUT);
  CHECK(strlen(curvelim_last_error()) > 0);

  CHECK(curvelim_job_create("bezout", &job) == CURVELIM_OK);
  CHECK(curvelim_job_set_tol(job, 0.0) == CURVELIM_E_INPUT);
  CHECK(curvelim_job_set_tol(job, 1e-10) == CURVELIM_OK);
  CHECK(curvelim_job_set_seed(job, 42) == CURVELIM_OK);
  CHECK(curvelim_job_run(job,
                         "{\"p\": [{\"exp\": [2], \"coeff\": 1}, {\"exp\": [0], \"coeff\": -1}],"
                         " \"q\": [{\"exp\": [2], \"coeff\": 1}, {\"exp\": [1], \"coeff\": -1}], \"n\": 2}") ==
        CURVELIM_OK);
  CHECK(strstr(curvelim_job_report(job), "\"kernel_dim\": 1") != NULL);
  char* copy = curvelim_job_report_copy(job);
  CHECK(copy != NULL && strcmp(copy, curvelim_job_report(job)) == 0);
  curvelim_string_free(copy);

  CHECK(curvelim_job_run(job, "{\"p\": ") == CURVELIM_E_INPUT);
  CHECK(strstr(curvelim_job_report(job), "input-error") != NULL);
  curvelim_job_destroy(job);
}

static void test_vessel(void) {
  curvelim_vessel* v = NULL;
  size_t h = 0, e = 0;
  int holds = 0, equal = 0;
  unsigned mask = 99;
  CHECK(curvelim_vessel_parse(kVessel, &v) == CURVELIM_OK);
  CHECK(curvelim_vessel_dims(v, &h, &e) == CURVELIM_OK && h == 1 && e == 1);
  CHECK(curvelim_vessel_check(v, &holds, &mask) == CURVELIM_OK);
  CHECK(holds == 1 && mask == 0);
  CHECK(curvelim_vessel_discriminant_equal(v, &equal) == CURVELIM_OK && equal == 1);
  curvelim_vessel_destroy(v);

  /* γin off by one: its axiom and the linkage axiom fail. */
  char bad[512];
  strcpy(bad, kVessel);
  char* g = strstr(bad, "\"gamma_in\": [[\"2\"]]");
  CHECK(g != NULL);
  if (g) g[15] = '3';
  CHECK(curvelim_vessel_parse(bad, &v) == CURVELIM_OK);
  CHECK(curvelim_vessel_check(v, &holds, &mask) == CURVELIM_OK);
  CHECK(holds == 0 && mask == ((1u << 2) | (1u << 4)));
  curvelim_vessel_destroy(v);

  CHECK(curvelim_vessel_parse("{\"A1\": 3}", &v) == CURVELIM_E_INPUT);
  CHECK(strstr(curvelim_last_error(), "at /") != NULL);
}

static void test_detrep(void) {
  curvelim_detrep* d = NULL;
  size_t m = 0, dim = 0;
  int n;
  CHECK(curvelim_detrep_parse(kConic, &d) == CURVELIM_OK);
  CHECK(curvelim_detrep_size(d, &m) == CURVELIM_OK && m == 2);
  for (n = 1; n <= 3; ++n) CHECK(curvelim_detrep_vn_dim(d, n, &dim) == CURVELIM_OK && dim == (size_t)(2 * n));
  CHECK(curvelim_detrep_vn_dim(d, 0, &dim) == CURVELIM_E_INPUT);
  curvelim_detrep_destroy(d);
  CHECK(curvelim_detrep_parse("{\"D0\": [[0]], \"D1\": [[0]], \"D2\": [[0]]}", &d) == CURVELIM_E_INPUT);
}

int main(void) {
  CHECK(strlen(curvelim_version()) > 0);
  test_jobs();
  test_vessel();
  test_detrep();
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
