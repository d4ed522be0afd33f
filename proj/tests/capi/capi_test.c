#include <matsplit/matsplit.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static void split_and_verify(void) {
  matsplit_algebra* a = NULL;
  CHECK(matsplit_algebra_generate(3, 0, 10, 7, &a) == MATSPLIT_OK);
  CHECK(matsplit_algebra_dim(a) == 9);
  CHECK(matsplit_algebra_field(a) == 0);

  matsplit_split_options opt;
  matsplit_split_options_default(&opt);
  matsplit_result* r = NULL;
  CHECK(matsplit_split(a, &opt, &r) == MATSPLIT_OK);
  CHECK(matsplit_result_norm(r) > 0);

  char* json = NULL;
  CHECK(matsplit_result_to_json(r, &json) == MATSPLIT_OK);
  int32_t valid = 0;
  char* report = NULL;
  CHECK(matsplit_verify(a, json, &valid, &report) == MATSPLIT_OK);
  CHECK(valid == 1);
  matsplit_string_free(report);
  matsplit_string_free(json);
  matsplit_result_free(r);

  char* text = NULL;
  matsplit_algebra* b = NULL;
  CHECK(matsplit_algebra_to_json(a, &text) == MATSPLIT_OK);
  CHECK(matsplit_algebra_parse(text, &b) == MATSPLIT_OK);
  CHECK(matsplit_algebra_dim(b) == 9);
  matsplit_string_free(text);
  matsplit_algebra_free(b);
  matsplit_algebra_free(a);
}

static void errors(void) {
  matsplit_algebra* a = NULL;
  CHECK(matsplit_algebra_parse("{", &a) == MATSPLIT_E_INPUT);
  CHECK(a == NULL);
  CHECK(strlen(matsplit_last_error()) > 0);
  CHECK(matsplit_algebra_parse(NULL, &a) == MATSPLIT_E_NULL_ARGUMENT);
  CHECK(matsplit_split(NULL, NULL, NULL) == MATSPLIT_E_NULL_ARGUMENT);
  CHECK(matsplit_algebra_generate(2, 5, 10, 1, &a) != MATSPLIT_OK);
  CHECK(strcmp(matsplit_status_name(MATSPLIT_E_PROMISE_VIOLATED), "promise violated") == 0);
  matsplit_algebra_free(NULL);
  matsplit_result_free(NULL);
  matsplit_string_free(NULL);
}

static void fixtures_and_lattices(void) {
  size_t count = 0;
  while (matsplit_fixture_name(count) != NULL) ++count;
  CHECK(count == 7);

  char* a2 = NULL;
  char* dual = NULL;
  char* out = NULL;
  CHECK(matsplit_fixture("A2", &a2) == MATSPLIT_OK);
  CHECK(matsplit_fixture("A2-dual", &dual) == MATSPLIT_OK);
  CHECK(matsplit_lll(a2, &out) == MATSPLIT_OK);
  matsplit_string_free(out);
  CHECK(matsplit_enumerate(a2, 1.1, 1, 0, &out) == MATSPLIT_OK);
  CHECK(strstr(out, "\"count\":3") != NULL);
  matsplit_string_free(out);
  CHECK(matsplit_tensor_pair(a2, dual, 0, 1, &out) == MATSPLIT_OK);
  CHECK(strstr(out, "\"norm2\":\"2\"") != NULL);
  matsplit_string_free(out);
  CHECK(matsplit_fixture("no-such", &out) == MATSPLIT_E_INPUT);
  matsplit_string_free(a2);
  matsplit_string_free(dual);

  char* d5 = NULL;
  CHECK(matsplit_fixture("d5-matrix", &d5) == MATSPLIT_OK);
  CHECK(matsplit_matrix_rank(d5, &out) == MATSPLIT_OK);
  CHECK(strstr(out, "\"rank\":1") != NULL);
  matsplit_string_free(out);
  matsplit_string_free(d5);

  matsplit_constants_request req;
  matsplit_constants_request_default(&req);
  req.cm = 4;
  CHECK(matsplit_constants(&req, &out) == MATSPLIT_OK);
  CHECK(strstr(out, "\"648\"") != NULL);
  matsplit_string_free(out);

  matsplit_tensor_options topt;
  matsplit_tensor_options_default(&topt);
  topt.pairs = 5;
  CHECK(matsplit_tensor_random(&topt, &out) == MATSPLIT_OK);
  CHECK(strstr(out, "\"floor_violations\":0") != NULL);
  matsplit_string_free(out);
}

int main(void) {
  CHECK(matsplit_version() != NULL);
  split_and_verify();
  errors();
  fixtures_and_lattices();
  if (failures == 0) printf("all C API checks passed\n");
  return failures == 0 ? 0 : 1;
}
