#ifndef HODGEKIT_HODGEKIT_H
#define HODGEKIT_HODGEKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HODGEKIT_BUILDING)
#    define HK_API __declspec(dllexport)
#  else
#    define HK_API __declspec(dllimport)
#  endif
#else
#  define HK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Exact computations with Jacobian rings of projective hypersurfaces over
 * GF(p): Hilbert functions, primitive Hodge numbers, Koszul exactness of
 * linear systems, the sweeping-out criteria and Yukawa chains.
 *
 * Every fallible call returns an hk_status; on failure hk_last_error()
 * describes the problem for the calling thread. Strings handed out by the
 * library are released with hk_string_free. Handles are immutable after
 * creation and may be shared between threads. */

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_INVALID_ARGUMENT = 1,
  HK_ERR_PARSE = 2,
  HK_ERR_NOT_SMOOTH = 3,
  HK_ERR_SIZE_BUDGET = 4,
  HK_ERR_PARAMETER_TOO_LARGE = 5,
  HK_ERR_DEGREE_MISMATCH = 6,
  HK_ERR_MODULUS_MISMATCH = 7,
  HK_ERR_NOT_CONTAINED = 8,
  HK_ERR_SAMPLING = 9,
  HK_ERR_UNDEFINED_LEVEL = 10,
  HK_ERR_INTERNAL = 11
} hk_status;

typedef enum hk_format { HK_FORMAT_JSON = 0, HK_FORMAT_CSV = 1, HK_FORMAT_TABLE = 2 } hk_format;

typedef struct hk_context hk_context;
typedef struct hk_polynomial hk_polynomial;
typedef struct hk_jacobian hk_jacobian;
typedef struct hk_subspace hk_subspace;

/* Provenance attached to reports. source may be NULL. */
typedef struct hk_meta {
  const char* source;
  uint64_t seed;
  int has_seed;
} hk_meta;

HK_API const char* hk_version(void);
HK_API const char* hk_status_string(hk_status status);
/* Message of the last failure on this thread; "" if none. */
HK_API const char* hk_last_error(void);
HK_API void hk_string_free(char* s);

/* ---- context ---------------------------------------------------------- */

/* prime: a prime below 2^31, 0 for the default. cell_budget: limit on stored
 * matrix entries per computation, 0 for the default. */
HK_API hk_status hk_context_create(uint32_t prime, uint64_t cell_budget, hk_context** out);
HK_API void hk_context_destroy(hk_context* ctx);
HK_API uint32_t hk_context_prime(const hk_context* ctx);
HK_API uint64_t hk_default_cell_budget(void);
HK_API uint32_t hk_default_prime(void);
HK_API uint32_t hk_cross_check_prime(void);

/* ---- polynomials ------------------------------------------------------ */

/* Terms like "x0^4 + 3*x1^4 - x0*x1*x2^2" in variables x0..x{nvars-1}. */
HK_API hk_status hk_polynomial_parse(const hk_context* ctx, const char* text, int nvars,
                                     hk_polynomial** out);
HK_API hk_status hk_polynomial_fermat(const hk_context* ctx, int nvars, int degree,
                                      hk_polynomial** out);
/* Smooth form of the given degree in d+2 variables drawn from the seed. */
HK_API hk_status hk_polynomial_random_smooth(const hk_context* ctx, int d, int degree,
                                             uint64_t seed, hk_polynomial** out);
HK_API hk_status hk_polynomial_to_string(const hk_polynomial* f, char** out);
HK_API void hk_polynomial_destroy(hk_polynomial* f);

/* ---- Jacobian rings --------------------------------------------------- */

HK_API hk_status hk_jacobian_create(const hk_context* ctx, const hk_polynomial* f,
                                    hk_jacobian** out);
HK_API void hk_jacobian_destroy(hk_jacobian* ring);
HK_API hk_status hk_jacobian_dimension(const hk_jacobian* ring, int* d, int* degree);
HK_API hk_status hk_jacobian_socle_degree(const hk_jacobian* ring, int* out);
HK_API hk_status hk_jacobian_hilbert(const hk_jacobian* ring, int k, uint64_t* out);
HK_API hk_status hk_jacobian_is_smooth(const hk_jacobian* ring, int* out);
/* h^{d-p,p}_prim for p = 0..d into out[p]; *count receives d+1. Fails with
 * HK_ERR_INVALID_ARGUMENT if capacity is too small. */
HK_API hk_status hk_jacobian_hodge_numbers(const hk_jacobian* ring, uint64_t* out,
                                           size_t capacity, size_t* count);
HK_API hk_status hk_jacobian_hodge_level(const hk_jacobian* ring, int* out);

/* ---- subspaces of S^k ------------------------------------------------- */

HK_API hk_status hk_subspace_full(const hk_context* ctx, int nvars, int degree,
                                  hk_subspace** out);
/* J_f^k */
HK_API hk_status hk_subspace_jacobian_piece(const hk_jacobian* ring, int k, hk_subspace** out);
HK_API hk_status hk_subspace_random(const hk_context* ctx, int nvars, int degree, size_t codim,
                                    uint64_t seed, hk_subspace** out);
/* Random V with base ⊆ V and the given codimension. */
HK_API hk_status hk_subspace_random_containing(const hk_context* ctx, const hk_subspace* base,
                                               size_t codim, uint64_t seed, hk_subspace** out);
HK_API hk_status hk_subspace_dims(const hk_subspace* v, int* nvars, int* degree, size_t* dim,
                                  size_t* ambient);
HK_API hk_status hk_subspace_contains(const hk_subspace* big, const hk_subspace* small, int* out);
HK_API void hk_subspace_destroy(hk_subspace* v);

/* ---- linear systems --------------------------------------------------- */

/* Least m <= m_max with S^{m-N} W = S^m into *degree, or -1. m_max <= 0
 * selects n(N-1)+1. */
HK_API hk_status hk_bpf_check(const hk_context* ctx, const hk_subspace* w, int m_max,
                              int* degree);

typedef struct hk_koszul_result {
  size_t rank_in;
  size_t kernel_out;
  size_t defect;
  int exact;
} hk_koszul_result;

/* Middle exactness of M^a ⊗ Λ^{s+1}W -> M^{a+N} ⊗ Λ^s W -> M^{a+2N} ⊗ Λ^{s-1}W
 * with M = S when ring is NULL, else M = R_f. */
HK_API hk_status hk_koszul_middle(const hk_context* ctx, const hk_jacobian* ring,
                                  const hk_subspace* w, int a, int s, hk_koszul_result* out);

/* ---- criteria --------------------------------------------------------- */

typedef struct hk_criterion_result {
  int gamma;
  int64_t ineq1_slack;
  int64_t ineq2_slack;
  int pass;
  int degree_hypothesis;
} hk_criterion_result;

HK_API hk_status hk_criterion(int d, int N, int r, int C, hk_criterion_result* out);
HK_API hk_status hk_genus_threshold(int d, int g, int* n_min, int* closed_form);
HK_API hk_status hk_per_i_monotonicity(int d, int N, int r, int C, int* out);

/* ---- Yukawa ----------------------------------------------------------- */

HK_API hk_status hk_socle_pairing_rank(const hk_jacobian* ring, const hk_subspace* a,
                                       const hk_subspace* b, size_t* out);
HK_API hk_status hk_yukawa_nonvanishing(const hk_jacobian* ring, const hk_subspace* k, int* out);

/* ---- reports (JSON, CSV or aligned text) ------------------------------ */

HK_API hk_status hk_report_hodge(const hk_jacobian* ring, const hk_meta* meta, hk_format format,
                                 char** out);
HK_API hk_status hk_report_hilbert(const hk_jacobian* ring, int k_max, const hk_meta* meta,
                                   hk_format format, char** out);

typedef struct hk_green_params {
  int n;
  int N;
  const int* codims;
  size_t codim_count;
  int a_min;
  int a_max;
  int s_max;
  int trials;
  uint64_t seed;
} hk_green_params;

/* *in_bound_defects counts cells with a >= s + codim that are not exact. */
HK_API hk_status hk_report_green_scan(const hk_context* ctx, const hk_green_params* params,
                                      hk_format format, char** out, size_t* in_bound_defects,
                                      size_t* sampling_failures);
/* ring NULL: M = S at degree a. Otherwise M = R_f with a = -d-2+N*a_or_p. */
HK_API hk_status hk_report_koszul(const hk_context* ctx, const hk_jacobian* ring,
                                  const hk_subspace* w, int a_or_p, int s, const hk_meta* meta,
                                  hk_format format, char** out, int* exact);
HK_API hk_status hk_report_sweep(int d, int N, int r, int C, hk_format format, char** out,
                                 int* pass);
/* Rows r = 1..d at N = d+2, C = r(r+1)/2. *all_pass: every 2 <= r <= d passes. */
HK_API hk_status hk_report_sweep_abelian(int d, hk_format format, char** out, int* all_pass);
/* r = 1, C = 3g-3 (g >= 2) or 1 (g = 1). */
HK_API hk_status hk_report_sweep_genus(int d, int g, int N, hk_format format, char** out,
                                       int* pass);
HK_API hk_status hk_report_genus_threshold(int d, int g, hk_format format, char** out,
                                           int* matches);
HK_API hk_status hk_report_yukawa_chain(const hk_jacobian* ring, const hk_subspace* k,
                                        const hk_meta* meta, hk_format format, char** out,
                                        int* all_ok);
HK_API hk_status hk_report_bpf(const hk_context* ctx, const hk_subspace* w, int m_max,
                               const hk_meta* meta, hk_format format, char** out, int* verified);

#ifdef __cplusplus
}
#endif

#endif
