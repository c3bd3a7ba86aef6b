/* C interface to the flagpos library. All handles are opaque; every
   allocation returned through an out parameter must be released with the
   matching *_free function. Functions report failure through the status code
   and leave a message in flagpos_last_error() (per thread). */
#ifndef FLAGPOS_H
#define FLAGPOS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FLAGPOS_API __declspec(dllexport)
#else
#define FLAGPOS_API __attribute__((visibility("default")))
#endif

typedef enum flagpos_status {
  FLAGPOS_OK = 0,
  FLAGPOS_INVALID_ARGUMENT = 1,
  FLAGPOS_PARSE = 2,
  FLAGPOS_DIVISION_BY_ZERO = 3,
  FLAGPOS_DIMENSION = 4,
  FLAGPOS_DOMAIN = 5,
  FLAGPOS_CAP_EXCEEDED = 6,
  FLAGPOS_INTERNAL = 7
} flagpos_status;

typedef enum flagpos_arith_op { FLAGPOS_ADD = 0, FLAGPOS_SUB = 1, FLAGPOS_MUL = 2, FLAGPOS_DIV = 3 } flagpos_arith_op;

typedef struct flagpos_scalar flagpos_scalar;
typedef struct flagpos_matrix flagpos_matrix;
typedef struct flagpos_report flagpos_report;

FLAGPOS_API const char* flagpos_last_error(void);
FLAGPOS_API const char* flagpos_status_name(flagpos_status s);
FLAGPOS_API void flagpos_string_free(char* s);

/* scalars in Q(sqrt2); literal grammar e.g. "3", "-1/2", "1/2+3/4r2", "-2r2" */
FLAGPOS_API flagpos_status flagpos_scalar_parse(const char* text, flagpos_scalar** out);
FLAGPOS_API flagpos_status flagpos_scalar_arith(flagpos_arith_op op, const flagpos_scalar* x, const flagpos_scalar* y,
                                                flagpos_scalar** out);
FLAGPOS_API flagpos_status flagpos_scalar_sign(const flagpos_scalar* x, int* out);
FLAGPOS_API flagpos_status flagpos_scalar_render(const flagpos_scalar* x, char** out);
FLAGPOS_API void flagpos_scalar_free(flagpos_scalar* x);

/* matrices: {"rows": r, "cols": c, "entries": [[literal, ...], ...]} */
FLAGPOS_API flagpos_status flagpos_matrix_from_json(const char* json, flagpos_matrix** out);
FLAGPOS_API flagpos_status flagpos_matrix_shape(const flagpos_matrix* m, size_t* rows, size_t* cols);
FLAGPOS_API flagpos_status flagpos_matrix_get(const flagpos_matrix* m, size_t i, size_t j, flagpos_scalar** out);
FLAGPOS_API flagpos_status flagpos_pfaffian(const flagpos_matrix* m, flagpos_scalar** out);
FLAGPOS_API void flagpos_matrix_free(flagpos_matrix* m);

/* suites; system is one of 'A', 'B', 'C', 'D' */
FLAGPOS_API flagpos_status flagpos_run_verify_pinning(char system, int n, flagpos_report** out);
FLAGPOS_API flagpos_status flagpos_run_fold(char system, int n, const char* word, flagpos_report** out);
FLAGPOS_API flagpos_status flagpos_run_theorem(char system, int n, const int* K, size_t k_len, int samples,
                                               uint64_t seed, flagpos_report** out);
FLAGPOS_API flagpos_status flagpos_run_counterexample(char system, int n, const int* K, size_t k_len,
                                                      flagpos_report** out);
FLAGPOS_API flagpos_status flagpos_run_catalog(flagpos_report** out);
FLAGPOS_API flagpos_status flagpos_run_plucker(const flagpos_matrix* m, int k, flagpos_report** out);
FLAGPOS_API flagpos_status flagpos_run_pfaffian_demo(const char* t_list, flagpos_report** out);
FLAGPOS_API flagpos_status flagpos_run_weyl_distinguished(char system, int n, int exhaustive, uint64_t seed,
                                                          flagpos_report** out);

/* format: "json", "csv" or "text" */
FLAGPOS_API flagpos_status flagpos_report_render(const flagpos_report* r, const char* format, char** out);
FLAGPOS_API int flagpos_report_passed(const flagpos_report* r);
FLAGPOS_API size_t flagpos_report_check_count(const flagpos_report* r);
FLAGPOS_API size_t flagpos_report_failure_count(const flagpos_report* r);
FLAGPOS_API void flagpos_report_free(flagpos_report* r);

#ifdef __cplusplus
}
#endif

#endif
