/* C interface to the xroute library. */
#ifndef XROUTE_XROUTE_H
#define XROUTE_XROUTE_H

#include <stddef.h>
#include <stdint.h>

#if defined(XROUTE_BUILDING)
#define XR_API __attribute__((visibility("default")))
#else
#define XR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct xr_graph xr_graph;
typedef struct xr_perm xr_perm;
typedef struct xr_schedule xr_schedule;
typedef struct xr_report xr_report;

/* Status values double as the command-line exit codes. */
typedef enum xr_status {
  XR_OK = 0,
  XR_E_ARGUMENT = 1,    /* bad argument, internal error */
  XR_E_PARSE = 2,       /* malformed or structurally invalid input */
  XR_E_INFEASIBLE = 3,  /* infeasible parameters, instance too large */
  XR_E_PARTITION = 4,
  XR_E_ROUTING = 5,
  XR_E_MISMATCH = 6,    /* schedule does not realize the permutation */
  XR_E_IO = 7,
  XR_E_EXCEEDS_CAP = 8
} xr_status;

typedef enum xr_format { XR_FORMAT_TEXT = 0, XR_FORMAT_JSON = 1 } xr_format;

/* Message of the last failure on the calling thread; "" when none. */
XR_API const char* xr_last_error(void);
XR_API const char* xr_status_name(xr_status status);
XR_API const char* xr_version(void);
/* Strings returned through char** out-parameters. */
XR_API void xr_string_free(char* s);

/* kind: "random-regular" (a = n, b = d), "cycle" (a = n), "complete" (a = n),
   "hypercube" (a = dimension). seed only affects random-regular. */
XR_API xr_status xr_graph_generate(const char* kind, size_t a, size_t b, uint64_t seed,
                                   xr_graph** out);
XR_API xr_status xr_graph_parse(const char* text, xr_graph** out);
XR_API xr_status xr_graph_load(const char* path, xr_graph** out);
XR_API xr_status xr_graph_text(const xr_graph* g, char** out);
XR_API xr_status xr_graph_save(const xr_graph* g, const char* path);
XR_API size_t xr_graph_n(const xr_graph* g);
XR_API size_t xr_graph_degree(const xr_graph* g);
/* max_iter = 0 picks ceil(10 n ln n). converged may be NULL. */
XR_API xr_status xr_graph_lambda(const xr_graph* g, double tol, size_t max_iter, uint64_t seed,
                                 double* lambda, int* converged);
XR_API xr_status xr_graph_diameter(const xr_graph* g, size_t* out);
XR_API void xr_graph_free(xr_graph* g);

XR_API xr_status xr_perm_parse(const char* text, xr_perm** out);
XR_API xr_status xr_perm_load(const char* path, xr_perm** out);
XR_API xr_status xr_perm_identity(size_t n, xr_perm** out);
XR_API xr_status xr_perm_random(size_t n, uint64_t seed, xr_perm** out);
XR_API xr_status xr_perm_text(const xr_perm* p, char** out);
XR_API xr_status xr_perm_save(const xr_perm* p, const char* path);
XR_API size_t xr_perm_size(const xr_perm* p);
XR_API void xr_perm_free(xr_perm* p);

typedef struct xr_route_options {
  double epsilon;          /* batch fraction, default 1/72 */
  size_t growth;           /* 0: max(2, floor(d / lambda)) */
  size_t k;                /* 0: smallest k with growth^k >= frontier target */
  size_t frontier_target;  /* 0: max(floor(epsilon n), ceil(sqrt(4 n / d))) */
  size_t capacity;         /* 0: max(2, floor(3 epsilon n)) */
  size_t path_retries;     /* per path, default 4 */
  double beta;             /* partition threshold fraction, default 1/3 */
  size_t max_resamples;    /* 0: 100 n */
  uint64_t seed;
  double lambda_hat;       /* <= 0: estimate by power iteration */
  int direct_swaps;        /* route adjacent pairs in one round, default 1 */
} xr_route_options;

XR_API void xr_route_options_init(xr_route_options* options);
XR_API xr_status xr_route(const xr_graph* g, const xr_perm* p, const xr_route_options* options,
                          xr_report** out);
XR_API size_t xr_report_rounds(const xr_report* r);
XR_API int xr_report_verified(const xr_report* r);
XR_API xr_status xr_report_text(const xr_report* r, char** out);
/* Copy of the routed schedule; free with xr_schedule_free. */
XR_API xr_status xr_report_schedule(const xr_report* r, xr_schedule** out);
XR_API void xr_report_free(xr_report* r);

/* Either format; the JSON form may carry the hash of its graph. */
XR_API xr_status xr_schedule_parse(const char* text, xr_schedule** out);
XR_API xr_status xr_schedule_load(const char* path, xr_schedule** out);
/* g supplies the hash for XR_FORMAT_JSON and may be NULL for text. */
XR_API xr_status xr_schedule_text(const xr_schedule* s, const xr_graph* g, xr_format format,
                                  char** out);
XR_API xr_status xr_schedule_save(const xr_schedule* s, const xr_graph* g, xr_format format,
                                  const char* path);
XR_API size_t xr_schedule_rounds(const xr_schedule* s);
XR_API void xr_schedule_free(xr_schedule* s);

/* Re-simulates s on g. XR_OK iff the final configuration realizes p.
   An invalid matching yields XR_E_MISMATCH with its 1-based round stored in
   *bad_round (0 otherwise); bad_round may be NULL. */
XR_API xr_status xr_verify(const xr_graph* g, const xr_perm* p, const xr_schedule* s,
                           size_t* bad_round);

XR_API xr_status xr_rt_exact(const xr_graph* g, const xr_perm* p, size_t cap, size_t* out);
XR_API xr_status xr_rt_lower_bound(const xr_graph* g, const xr_perm* p, size_t* out);

/* Runs a JSON bench spec and returns the CSV. timing = 0 zeroes wall_ms. */
XR_API xr_status xr_bench_run(const char* spec_json, unsigned jobs, int timing, char** csv);

#ifdef __cplusplus
}
#endif

#endif
