#ifndef W0_C_H
#define W0_C_H

/* C interface to the engine. Every handle is opaque and owned by the caller
 * once returned; release it with the matching *_free / *_close function.
 * Functions returning int report a w0_status; on failure the message is
 * available from w0_last_error() on the same thread. Returned strings stay
 * valid until their owning handle is released. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define W0_API __declspec(dllexport)
#else
#define W0_API __attribute__((visibility("default")))
#endif

typedef enum w0_status {
  W0_OK = 0,
  W0_ERR_INTERNAL = 1,
  W0_ERR_PARSE = 2,
  W0_ERR_UNKNOWN_ALGEBRA = 3,
  W0_ERR_NOT_DOMINANT = 4,
  W0_ERR_GOLDEN_MISMATCH = 5,
  W0_ERR_OUT_OF_RANGE = 6,
  W0_ERR_INVALID_ARGUMENT = 7,
  W0_ERR_CONSISTENCY = 8,
  W0_ERR_TOO_LARGE = 9
} w0_status;

enum {
  W0_QUERY_WITNESS = 1, /* attach doubled-tableau witnesses */
  W0_QUERY_NO_PRUNE = 2 /* use the full branching instead of the pruned walk */
};

typedef struct w0_form w0_form;
typedef struct w0_report w0_report;
typedef struct w0_batch w0_batch;
typedef struct w0_golden w0_golden;

W0_API const char* w0_version(void);
W0_API const char* w0_last_error(void);
W0_API const char* w0_status_name(int status);

/* Real forms. Names as in "su(1,2)", "sp(2.,1,1)", "EIV", "complex:A2". */
W0_API int w0_form_open(const char* name, w0_form** out);
W0_API void w0_form_close(w0_form* form);
W0_API const char* w0_form_name(const w0_form* form);
W0_API int w0_form_rank(const w0_form* form);
W0_API int w0_form_is_complex(const w0_form* form);
/* Summary of the reduction subalgebra, or of the complex type. */
W0_API const char* w0_form_summary(const w0_form* form);

/* Single query. The weight is "fund:<labels>" (the default when no prefix
 * is given) or "eps:<coordinates>", entries separated by commas and exact
 * rationals allowed. Complex forms take two groups separated by '|'. */
W0_API int w0_query(const w0_form* form, const char* weight, unsigned flags,
                    w0_report** out);
W0_API void w0_report_free(w0_report* report);
W0_API const char* w0_report_algebra(const w0_report* report);
W0_API const char* w0_report_weight_eps(const w0_report* report);
W0_API const char* w0_report_weight_fund(const w0_report* report);
W0_API int64_t w0_report_dim(const w0_report* report);
W0_API int64_t w0_report_plus(const w0_report* report);
W0_API int64_t w0_report_minus(const w0_report* report);
/* "zero", "plus_id", "minus_id" or "mixed". */
W0_API const char* w0_report_verdict(const w0_report* report);
/* Newline-separated witness lines; empty unless requested. */
W0_API const char* w0_report_witness(const w0_report* report);

/* Batch grids: "<algebra>:fund<=N" (all fundamental coordinates in [0, N])
 * or "<algebra>:star<=N" (so(1,n) only: weights meeting the existence
 * condition with first coordinate at most N). Several grids may be joined
 * with ';'. Rows come back in a fixed order whatever the job count. */
W0_API int w0_batch_run(const char* spec, int jobs, unsigned flags, w0_batch** out);
W0_API void w0_batch_free(w0_batch* batch);
W0_API size_t w0_batch_size(const w0_batch* batch);
W0_API const w0_report* w0_batch_row(const w0_batch* batch, size_t index);

/* Golden-table verification. Scope is "all", "classical" or "exceptional";
 * golden_path may be NULL for the built-in tables. Each row is one form
 * instance, checked against its table row and for its strongly orthogonal
 * set. Returns W0_ERR_GOLDEN_MISMATCH (with the handle still filled in)
 * when any row fails. */
W0_API int w0_golden_run(const char* scope, const char* golden_path, int jobs,
                         w0_golden** out);
W0_API void w0_golden_free(w0_golden* golden);
W0_API size_t w0_golden_size(const w0_golden* golden);
W0_API const char* w0_golden_form(const w0_golden* golden, size_t index);
W0_API const char* w0_golden_row_id(const w0_golden* golden, size_t index);
/* 1 pass, 0 fail, -1 not covered by the tables. */
W0_API int w0_golden_table_status(const w0_golden* golden, size_t index);
W0_API int w0_golden_ortho_status(const w0_golden* golden, size_t index);
W0_API const char* w0_golden_detail(const w0_golden* golden, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* W0_C_H */
