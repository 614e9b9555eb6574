#ifndef SJK_SJK_H
#define SJK_SJK_H

/*
 * C interface to the Siegel-Jacobi toolkit.
 *
 * Every call that can fail returns an sjk_status and records a message in
 * its context (sjk_last_error). Strings returned through char** outputs are
 * heap-allocated and must be released with sjk_string_free. Handles are
 * immutable once created; a context must not be used from two threads at
 * the same time, but distinct contexts are independent.
 *
 * Complex buffers are interleaved (re, im) pairs in row-major order; real
 * buffers are row-major.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SJK_BUILDING)
#    define SJK_API __declspec(dllexport)
#  else
#    define SJK_API __declspec(dllimport)
#  endif
#else
#  define SJK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sjk_status {
  SJK_OK = 0,
  SJK_VERIFY_FAILED = 1,
  SJK_INVALID_ARGUMENT = 2,
  SJK_DIMENSION = 3,
  SJK_DOMAIN = 4,
  SJK_CONDITIONING = 5,
  SJK_NUMERIC = 6,
  SJK_CONSISTENCY = 7,
  SJK_RANGE = 8,
  SJK_INTERNAL = 9
} sjk_status;

typedef struct sjk_context sjk_context;
typedef struct sjk_jacobi sjk_jacobi;
typedef struct sjk_siegel_jacobi_point sjk_siegel_jacobi_point;
typedef struct sjk_disk_jacobi_point sjk_disk_jacobi_point;

SJK_API const char* sjk_version(void);
SJK_API const char* sjk_status_name(sjk_status status);
/* Process exit code for a status: 0 ok, 1 verification failure or internal
 * inconsistency, 2 usage, 3 domain/range, 4 conditioning/numeric. */
SJK_API int sjk_exit_code(sjk_status status);

SJK_API sjk_context* sjk_context_create(void);
SJK_API void sjk_context_destroy(sjk_context* ctx);
/* Message of the last failed call on ctx, "" when none. Valid until the next
 * call on ctx. */
SJK_API const char* sjk_last_error(const sjk_context* ctx);
/* Pass a negative value to keep a field unchanged. */
SJK_API sjk_status sjk_context_set_tolerance(sjk_context* ctx, double algebraic_rel,
                                             double fd_first_rel, double fd_second_rel,
                                             double pd_min_eig);
/* Debug re-validation of group and point invariants; process-wide. */
SJK_API void sjk_set_validation(int enabled);

SJK_API void sjk_string_free(char* s);

/* --- Jacobi group elements (M, (lambda, mu; kappa)) --------------------- */

/* m: 2g x 2g; lambda, mu: h x g; kappa: h x h (all real, row-major).
 * lambda, mu and kappa may be NULL for zero blocks. */
SJK_API sjk_status sjk_jacobi_create(sjk_context* ctx, int g, int h, const double* m,
                                     const double* lambda, const double* mu,
                                     const double* kappa, sjk_jacobi** out);
SJK_API sjk_status sjk_jacobi_identity(sjk_context* ctx, int g, int h, sjk_jacobi** out);
SJK_API sjk_status sjk_jacobi_sample(sjk_context* ctx, int g, int h, uint64_t seed,
                                     double scale, sjk_jacobi** out);
SJK_API sjk_status sjk_jacobi_mul(sjk_context* ctx, const sjk_jacobi* a, const sjk_jacobi* b,
                                  sjk_jacobi** out);
SJK_API sjk_status sjk_jacobi_inv(sjk_context* ctx, const sjk_jacobi* a, sjk_jacobi** out);
/* Any output buffer may be NULL. */
SJK_API sjk_status sjk_jacobi_get(sjk_context* ctx, const sjk_jacobi* a, int* g, int* h,
                                  double* m, double* lambda, double* mu, double* kappa);
SJK_API void sjk_jacobi_destroy(sjk_jacobi* a);

/* --- points --------------------------------------------------------------- */

/* omega: g x g complex symmetric with Im positive definite; z: h x g complex,
 * NULL for zero. */
SJK_API sjk_status sjk_siegel_jacobi_point_create(sjk_context* ctx, int g, int h,
                                                  const double* omega, const double* z,
                                                  sjk_siegel_jacobi_point** out);
SJK_API sjk_status sjk_siegel_jacobi_point_get(sjk_context* ctx,
                                               const sjk_siegel_jacobi_point* p, int* g,
                                               int* h, double* omega, double* z);
SJK_API void sjk_siegel_jacobi_point_destroy(sjk_siegel_jacobi_point* p);

/* w: g x g complex symmetric with I - w conj(w) positive definite; eta: h x g,
 * NULL for zero. */
SJK_API sjk_status sjk_disk_jacobi_point_create(sjk_context* ctx, int g, int h,
                                                const double* w, const double* eta,
                                                sjk_disk_jacobi_point** out);
SJK_API sjk_status sjk_disk_jacobi_point_sample(sjk_context* ctx, int g, int h,
                                                uint64_t seed, double scale,
                                                sjk_disk_jacobi_point** out);
SJK_API sjk_status sjk_disk_jacobi_point_get(sjk_context* ctx,
                                             const sjk_disk_jacobi_point* p, int* g, int* h,
                                             double* w, double* eta);
SJK_API void sjk_disk_jacobi_point_destroy(sjk_disk_jacobi_point* p);

/* --- maps and actions ----------------------------------------------------- */

SJK_API sjk_status sjk_partial_cayley(sjk_context* ctx, const sjk_disk_jacobi_point* p,
                                      sjk_siegel_jacobi_point** out);
SJK_API sjk_status sjk_partial_cayley_inv(sjk_context* ctx,
                                          const sjk_siegel_jacobi_point* p,
                                          sjk_disk_jacobi_point** out);
SJK_API sjk_status sjk_act_jacobi(sjk_context* ctx, const sjk_jacobi* a,
                                  const sjk_siegel_jacobi_point* p,
                                  sjk_siegel_jacobi_point** out);
/* Acts by the disk-model image of a on p. */
SJK_API sjk_status sjk_act_jacobi_disk(sjk_context* ctx, const sjk_jacobi* a,
                                       const sjk_disk_jacobi_point* p,
                                       sjk_disk_jacobi_point** out);
/* Relative residual of a.(partial Cayley of p) against the partial Cayley
 * image of the disk-model action on p. */
SJK_API sjk_status sjk_compatibility_residual(sjk_context* ctx, const sjk_jacobi* a,
                                              const sjk_disk_jacobi_point* p,
                                              double* residual);

/* --- JSON commands ---------------------------------------------------------- */

SJK_API sjk_status sjk_cmd_transform(sjk_context* ctx, const char* map,
                                     const char* input_json, const char* element_json,
                                     char** out);
SJK_API sjk_status sjk_cmd_sample(sjk_context* ctx, const char* kind, int g, int h,
                                  uint64_t seed, double scale, char** out);
SJK_API sjk_status sjk_cmd_metric(sjk_context* ctx, const char* space, const char* input_json,
                                  double a, double b, char** out);
SJK_API sjk_status sjk_cmd_laplacian(sjk_context* ctx, const char* space, const char* field,
                                     const char* input_json, double a, double b, char** out);
SJK_API sjk_status sjk_cmd_decompose(sjk_context* ctx, const char* element_json,
                                     const char* input_json, char** out);
/* index_json may be NULL (zero index matrix); rep is "det:k" or "std". */
SJK_API sjk_status sjk_cmd_jfactor(sjk_context* ctx, const char* index_json, const char* rep,
                                   const char* element_json, const char* input_json,
                                   char** out);

typedef struct sjk_verify_options {
  const char* suite;
  int g;
  int h;
  int trials;
  uint64_t seed;
  double tol;  /* <= 0 keeps the per-check defaults */
  int threads; /* 0 = hardware concurrency */
} sjk_verify_options;

/* Writes the report in every case the suite ran; returns SJK_VERIFY_FAILED
 * when it did not pass. */
SJK_API sjk_status sjk_cmd_verify(sjk_context* ctx, const sjk_verify_options* opts,
                                  char** out);

#ifdef __cplusplus
}
#endif

#endif /* SJK_SJK_H */
