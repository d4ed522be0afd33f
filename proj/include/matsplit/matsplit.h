#ifndef MATSPLIT_MATSPLIT_H
#define MATSPLIT_MATSPLIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MATSPLIT_API __declspec(dllexport)
#else
#define MATSPLIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum matsplit_status {
  MATSPLIT_OK = 0,
  MATSPLIT_E_INPUT = 1,
  MATSPLIT_E_TYPE = 2,
  MATSPLIT_E_DIMENSION = 3,
  MATSPLIT_E_DOMAIN = 4,
  MATSPLIT_E_PRECONDITION = 5,
  MATSPLIT_E_NO_IDENTITY = 6,
  MATSPLIT_E_PROMISE_VIOLATED = 7,
  MATSPLIT_E_PRECISION = 8,
  MATSPLIT_E_FACTORING_BUDGET = 9,
  MATSPLIT_E_ENUMERATION_BUDGET = 10,
  MATSPLIT_E_ENUMERATION_EXHAUSTED = 11,
  MATSPLIT_E_INTERNAL = 12,
  MATSPLIT_E_NULL_ARGUMENT = 13,
  MATSPLIT_E_OUT_OF_MEMORY = 14
} matsplit_status;

typedef enum matsplit_engine { MATSPLIT_ENGINE_ORDERED = 0, MATSPLIT_ENGINE_BOX = 1 } matsplit_engine;

/* Opaque handles. */
typedef struct matsplit_algebra matsplit_algebra;
typedef struct matsplit_result matsplit_result;

typedef struct matsplit_split_options {
  uint64_t seed;
  uint32_t precision_bits;
  uint32_t max_precision_bits;
  uint64_t factor_budget;
  uint64_t enumeration_budget;
  matsplit_engine engine;
  int32_t dynamic_pruning;
  uint32_t threads;
} matsplit_split_options;

typedef struct matsplit_constants_request {
  uint32_t hermite_max;   /* table for n = 1..hermite_max */
  uint32_t cm;            /* 0: omit */
  uint32_t minfloor;      /* 0: omit; otherwise rmax >= 2 */
  int64_t kappa_d;        /* 0: omit */
  int64_t gammah_d;       /* 0: omit */
} matsplit_constants_request;

typedef struct matsplit_tensor_options {
  uint32_t pairs;
  uint32_t rank_max;
  int64_t entry_range;
  uint64_t seed;
  double bound_factor;    /* enumerate up to bound_factor * lambda1(L) * lambda1(M) */
  uint32_t threads;
} matsplit_tensor_options;

/* Message of the last failure on the calling thread. */
MATSPLIT_API const char* matsplit_last_error(void);
MATSPLIT_API const char* matsplit_status_name(matsplit_status status);
MATSPLIT_API const char* matsplit_version(void);
MATSPLIT_API void matsplit_string_free(char* s);

MATSPLIT_API matsplit_status matsplit_algebra_parse(const char* json, matsplit_algebra** out);
/* d = 0 (Q), 1 or 3. */
MATSPLIT_API matsplit_status matsplit_algebra_generate(uint32_t n, int64_t d, int64_t height, uint64_t seed,
                                                       matsplit_algebra** out);
MATSPLIT_API matsplit_status matsplit_algebra_to_json(const matsplit_algebra* a, char** out);
MATSPLIT_API size_t matsplit_algebra_dim(const matsplit_algebra* a);
MATSPLIT_API int64_t matsplit_algebra_field(const matsplit_algebra* a);
MATSPLIT_API void matsplit_algebra_free(matsplit_algebra* a);

MATSPLIT_API void matsplit_split_options_default(matsplit_split_options* options);
MATSPLIT_API matsplit_status matsplit_split(const matsplit_algebra* a, const matsplit_split_options* options,
                                            matsplit_result** out);
MATSPLIT_API matsplit_status matsplit_result_to_json(const matsplit_result* r, char** out);
MATSPLIT_API uint64_t matsplit_result_nodes(const matsplit_result* r);
MATSPLIT_API double matsplit_result_norm(const matsplit_result* r);
MATSPLIT_API void matsplit_result_free(matsplit_result* r);

/* Exact check of a result document against an algebra; *valid is set to 1 or 0. */
MATSPLIT_API matsplit_status matsplit_verify(const matsplit_algebra* a, const char* result_json, int32_t* valid,
                                             char** report);

MATSPLIT_API matsplit_status matsplit_order(const matsplit_algebra* a, uint64_t factor_budget, char** out);
MATSPLIT_API matsplit_status matsplit_lll(const char* lattice_json, char** out);
MATSPLIT_API matsplit_status matsplit_enumerate(const char* lattice_json, double bound, uint32_t threads,
                                                uint64_t node_budget, char** out);
/* bound <= 0 selects 1.5 * lambda1(L) * lambda1(M). */
MATSPLIT_API matsplit_status matsplit_tensor_pair(const char* left_json, const char* right_json, double bound,
                                                  uint32_t threads, char** out);
MATSPLIT_API void matsplit_tensor_options_default(matsplit_tensor_options* options);
MATSPLIT_API matsplit_status matsplit_tensor_random(const matsplit_tensor_options* options, char** out);
MATSPLIT_API void matsplit_constants_request_default(matsplit_constants_request* request);
MATSPLIT_API matsplit_status matsplit_constants(const matsplit_constants_request* request, char** out);
MATSPLIT_API matsplit_status matsplit_matrix_rank(const char* matrix_json, char** out);

/* NULL past the end. */
MATSPLIT_API const char* matsplit_fixture_name(size_t index);
MATSPLIT_API matsplit_status matsplit_fixture(const char* name, char** out);

#ifdef __cplusplus
}
#endif

#endif
