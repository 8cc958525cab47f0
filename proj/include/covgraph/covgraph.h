// Copyright 2026 The covgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface of libcovgraph.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a covgraph_status; on failure a message is
 * available from covgraph_last_error() on the calling thread. Strings
 * returned through char** are owned by the caller and released with
 * covgraph_string_free(). A NULL tolerance pointer selects the defaults.
 *
 * Complex data is exchanged as interleaved (re, im) doubles in row-major
 * order.
 */

#ifndef COVGRAPH_H
#define COVGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COVGRAPH_API __declspec(dllexport)
#else
#define COVGRAPH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covgraph_status {
  COVGRAPH_OK = 0,
  COVGRAPH_ERR_DIMENSION = 1,
  COVGRAPH_ERR_PRECONDITION = 2,
  COVGRAPH_ERR_NUMERICAL = 3,
  COVGRAPH_ERR_RANK = 4,
  COVGRAPH_ERR_INPUT = 5,
  COVGRAPH_ERR_NULL_ARGUMENT = 6,
  COVGRAPH_ERR_INTERNAL = 7
} covgraph_status;

typedef enum covgraph_format { COVGRAPH_FORMAT_JSON = 0, COVGRAPH_FORMAT_TEXT = 1 } covgraph_format;

typedef struct covgraph_tolerance {
  double eq_tol;
  double eig_tol;
  double degeneracy_tol;
} covgraph_tolerance;

/* Projection-family parameters; z3 is derived. */
typedef struct covgraph_qparams {
  double tau;
  double z1;
  double z2;
  double z4;
  int k;
} covgraph_qparams;

typedef struct covgraph_matrix covgraph_matrix;
typedef struct covgraph_rep covgraph_rep;
typedef struct covgraph_graph covgraph_graph;
typedef struct covgraph_verdict covgraph_verdict;

/* ---- library ---------------------------------------------------------- */

COVGRAPH_API const char* covgraph_version(void);
COVGRAPH_API const char* covgraph_report_schema(void);
COVGRAPH_API const char* covgraph_status_name(covgraph_status status);
COVGRAPH_API const char* covgraph_last_error(void);
COVGRAPH_API void covgraph_string_free(char* s);
COVGRAPH_API void covgraph_doubles_free(double* values);

COVGRAPH_API covgraph_tolerance covgraph_tolerance_default(void);
/* eq_tol from *flag when non-NULL, else from env_value (e.g. the COVGRAPH_TOL
 * variable) when non-NULL and non-empty, else the default. */
COVGRAPH_API covgraph_status covgraph_tolerance_resolve(const char* env_value, const double* flag,
                                                        covgraph_tolerance* out);

/* ---- matrices --------------------------------------------------------- */

COVGRAPH_API covgraph_status covgraph_matrix_create(size_t rows, size_t cols, const double* re_im,
                                                    covgraph_matrix** out);
COVGRAPH_API covgraph_status covgraph_matrix_from_json(const char* text, covgraph_matrix** out);
COVGRAPH_API covgraph_status covgraph_matrix_to_json(const covgraph_matrix* m, char** out);
COVGRAPH_API void covgraph_matrix_free(covgraph_matrix* m);

COVGRAPH_API size_t covgraph_matrix_rows(const covgraph_matrix* m);
COVGRAPH_API size_t covgraph_matrix_cols(const covgraph_matrix* m);
COVGRAPH_API covgraph_status covgraph_matrix_get(const covgraph_matrix* m, size_t i, size_t j,
                                                 double* re, double* im);
/* Copies 2 * rows * cols doubles; capacity is counted in doubles. */
COVGRAPH_API covgraph_status covgraph_matrix_copy_data(const covgraph_matrix* m, double* re_im,
                                                       size_t capacity);

COVGRAPH_API covgraph_status covgraph_matrix_is_projection(const covgraph_matrix* m,
                                                           const covgraph_tolerance* tol,
                                                           int* result);
COVGRAPH_API covgraph_status covgraph_hs_inner(const covgraph_matrix* a, const covgraph_matrix* b,
                                               double* re, double* im);
/* eigenvalues must hold rows(a) doubles; eigenvectors may be NULL. */
COVGRAPH_API covgraph_status covgraph_eig_hermitian(const covgraph_matrix* a,
                                                    const covgraph_tolerance* tol,
                                                    double* eigenvalues,
                                                    covgraph_matrix** eigenvectors);
/* coefficients must hold min(dim_a, dim_b) doubles. */
COVGRAPH_API covgraph_status covgraph_schmidt(const covgraph_matrix* v, size_t dim_a, size_t dim_b,
                                              const covgraph_tolerance* tol, double* coefficients,
                                              double* entropy_bits);

/* ---- circle representations ------------------------------------------- */

COVGRAPH_API covgraph_status covgraph_rep_create(const int* freqs,
                                                 const covgraph_matrix* const* projections,
                                                 size_t count, covgraph_rep** out);
COVGRAPH_API covgraph_status covgraph_rep_from_json(const char* text, covgraph_rep** out);
COVGRAPH_API covgraph_status covgraph_rep_to_json(const covgraph_rep* rep, char** out);
COVGRAPH_API covgraph_status covgraph_rep_two_block(const covgraph_matrix* p_plus,
                                                    const covgraph_tolerance* tol,
                                                    covgraph_rep** out);
COVGRAPH_API covgraph_status covgraph_rep_bell(size_t d, covgraph_rep** out);
COVGRAPH_API void covgraph_rep_free(covgraph_rep* rep);

COVGRAPH_API size_t covgraph_rep_dim(const covgraph_rep* rep);
COVGRAPH_API size_t covgraph_rep_size(const covgraph_rep* rep);
COVGRAPH_API covgraph_status covgraph_rep_projection(const covgraph_rep* rep, size_t index,
                                                     int* freq, covgraph_matrix** out);
/* *valid is set to 1 or 0; report_json (optional) receives the violations. */
COVGRAPH_API covgraph_status covgraph_rep_validate(const covgraph_rep* rep,
                                                   const covgraph_tolerance* tol, int* valid,
                                                   char** report_json);
COVGRAPH_API covgraph_status covgraph_rep_evaluate(const covgraph_rep* rep, double phi,
                                                   const covgraph_tolerance* tol,
                                                   covgraph_matrix** out);
COVGRAPH_API covgraph_status covgraph_rep_pinch(const covgraph_rep* rep, const covgraph_matrix* a,
                                                covgraph_matrix** out);
COVGRAPH_API covgraph_status covgraph_rep_haar_average(const covgraph_rep* rep,
                                                       const covgraph_matrix* a,
                                                       size_t n_samples, covgraph_matrix** out);

/* ---- operator graphs -------------------------------------------------- */

COVGRAPH_API covgraph_status covgraph_graph_orbit_analytic(const covgraph_rep* rep,
                                                           const covgraph_matrix* seed,
                                                           const covgraph_tolerance* tol,
                                                           int allow_general_seed,
                                                           covgraph_graph** out);
COVGRAPH_API covgraph_status covgraph_graph_orbit_sampled(const covgraph_rep* rep,
                                                          const covgraph_matrix* seed,
                                                          size_t n_samples,
                                                          const covgraph_tolerance* tol,
                                                          covgraph_graph** out);
COVGRAPH_API void covgraph_graph_free(covgraph_graph* graph);

COVGRAPH_API size_t covgraph_graph_dimension(const covgraph_graph* graph);
COVGRAPH_API covgraph_status covgraph_graph_basis(const covgraph_graph* graph, size_t index,
                                                  covgraph_matrix** out);
COVGRAPH_API covgraph_status covgraph_graph_is_operator_system(const covgraph_graph* graph,
                                                               const covgraph_tolerance* tol,
                                                               int* contains_identity,
                                                               int* adjoint_closed);
/* *found is 0 when no h with G0 = h F0^dagger exists. */
COVGRAPH_API covgraph_status covgraph_find_adjoint_ratio(const covgraph_rep* rep,
                                                         const covgraph_matrix* seed,
                                                         const covgraph_tolerance* tol, int* found,
                                                         double* re, double* im);

/* ---- anticliques ------------------------------------------------------ */

COVGRAPH_API covgraph_status covgraph_verify_anticlique(const covgraph_matrix* p,
                                                        const covgraph_graph* graph,
                                                        const covgraph_tolerance* tol,
                                                        covgraph_verdict** out);
COVGRAPH_API void covgraph_verdict_free(covgraph_verdict* verdict);
COVGRAPH_API int covgraph_verdict_passed(const covgraph_verdict* verdict);
COVGRAPH_API double covgraph_verdict_max_residual(const covgraph_verdict* verdict);
COVGRAPH_API size_t covgraph_verdict_code_dimension(const covgraph_verdict* verdict);
COVGRAPH_API size_t covgraph_verdict_constant_count(const covgraph_verdict* verdict);
COVGRAPH_API covgraph_status covgraph_verdict_constant(const covgraph_verdict* verdict,
                                                       size_t index, double* re, double* im);

/* ---- constructions ---------------------------------------------------- */

/* z1 + z4 - z2 + pi + 2 pi k */
COVGRAPH_API double covgraph_qparams_z3(const covgraph_qparams* params);
COVGRAPH_API covgraph_status covgraph_build_q(const covgraph_qparams* params,
                                              covgraph_matrix** out);
COVGRAPH_API covgraph_status covgraph_bell_state(size_t d, size_t s, size_t n,
                                                 covgraph_matrix** out);
COVGRAPH_API covgraph_status covgraph_q_j(size_t d, size_t j, covgraph_matrix** out);

/* ---- commands ----------------------------------------------------------
 * Each writes a report (JSON per schema covgraph-report/1, or text) and an
 * exit code: 0 all assertions hold, 1 an assertion failed, 2 input error.
 * On input errors the status is non-OK, *exit_code is 2 and *report is
 * NULL. */

COVGRAPH_API covgraph_status covgraph_run_demo4(const covgraph_qparams* params,
                                                const covgraph_tolerance* tol,
                                                covgraph_format format, char** report,
                                                int* exit_code);
COVGRAPH_API covgraph_status covgraph_run_bell(size_t d, size_t j, const covgraph_tolerance* tol,
                                               covgraph_format format, char** report,
                                               int* exit_code);
/* samples = 0 skips the sampled cross-check. */
COVGRAPH_API covgraph_status covgraph_run_verify(const char* rep_json, const char* seed_json,
                                                 const char* projection_json, size_t samples,
                                                 int allow_general_seed,
                                                 const covgraph_tolerance* tol,
                                                 covgraph_format format, char** report,
                                                 int* exit_code);
COVGRAPH_API covgraph_status covgraph_run_scan(const double* taus, size_t count, uint64_t seed,
                                               const covgraph_tolerance* tol,
                                               covgraph_format format, char** report,
                                               int* exit_code);

COVGRAPH_API covgraph_status covgraph_parse_angle(const char* text, double* out);
/* *values is released with covgraph_doubles_free. */
COVGRAPH_API covgraph_status covgraph_parse_grid(const char* spec, double** values, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* COVGRAPH_H */
