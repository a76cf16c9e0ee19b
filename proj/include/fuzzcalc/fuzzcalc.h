/*   Copyright 2026 The fuzzcalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

/* C interface of the fuzzcalc shared library.
 *
 * All objects are opaque handles owned by the caller and released with
 * the matching *_free function. Functions return FC_OK on success or a
 * negative error code; fc_last_error(ctx) holds the message of the most
 * recent failure on that context. Mathematical nonexistence is never an
 * error: it is reported through fc_result_verdict.
 *
 * Handles are immutable after creation and safe to share across threads;
 * the context is the exception (it carries the error slot and config)
 * and must not be used from two threads at once.
 */

#ifndef FUZZCALC_H
#define FUZZCALC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

typedef enum fc_status {
    FC_OK = 0,
    FC_ERR_INVALID_ARG = -1,
    FC_ERR_INVALID_SHAPE = -2,
    FC_ERR_DOMAIN = -3,
    FC_ERR_PARSE = -4,
    FC_ERR_ARITY = -5,
    FC_ERR_UNSUPPORTED = -6,
    FC_ERR_INTERNAL = -7
} fc_status;

typedef struct fc_context fc_context;
typedef struct fc_number fc_number;
typedef struct fc_expr fc_expr;
typedef struct fc_result fc_result;

/* ---- context & configuration ---- */

FC_API fc_context* fc_context_new(void);
FC_API void fc_context_free(fc_context* ctx);

/* Message of the last failed call on this context ("" if none). The
 * pointer stays valid until the next call on the context. */
FC_API const char* fc_last_error(const fc_context* ctx);

FC_API fc_status fc_set_grid_size(fc_context* ctx, int levels);
FC_API fc_status fc_set_limit_params(fc_context* ctx, double h0, double shrink, int max_iters,
                                     double tol);
FC_API int fc_grid_size(const fc_context* ctx);

/* ---- fuzzy numbers ---- */

FC_API fc_status fc_number_parse(fc_context* ctx, const char* literal, fc_number** out);
FC_API fc_status fc_number_triangular(fc_context* ctx, double a1, double a, double a2,
                                      fc_number** out);
FC_API fc_status fc_number_trapezoidal(fc_context* ctx, double a1, double a2, double a3,
                                       double a4, fc_number** out);
FC_API fc_status fc_number_crisp(fc_context* ctx, double v, fc_number** out);
FC_API void fc_number_free(fc_number* n);

FC_API fc_status fc_number_membership(fc_context* ctx, const fc_number* n, double r,
                                      double* out);
FC_API fc_status fc_number_alpha_cut(fc_context* ctx, const fc_number* n, double alpha,
                                     double* lower, double* upper);
/* JSON of the number; free with fc_string_free. */
FC_API fc_status fc_number_to_json(fc_context* ctx, const fc_number* n, char** out);
/* Compact form such as "tfn(0, 1, 2)". */
FC_API fc_status fc_number_to_text(fc_context* ctx, const fc_number* n, char** out);

FC_API fc_status fc_add(fc_context* ctx, const fc_number* a, const fc_number* b, fc_number** out);
FC_API fc_status fc_scalar_mul(fc_context* ctx, double l, const fc_number* a, fc_number** out);
FC_API fc_status fc_distance(fc_context* ctx, const fc_number* a, const fc_number* b,
                             double* out);

/* ---- differences ----
 * kind: "standard", "h" or "gh". For "standard" the result always
 * exists; for "h"/"gh" the result carries the existence certificate. */
FC_API fc_status fc_diff(fc_context* ctx, const char* kind, const fc_number* a,
                         const fc_number* b, fc_result** out);

/* ---- expressions ---- */

/* arity <= 0 infers the arity from the largest variable index. */
FC_API fc_status fc_expr_parse(fc_context* ctx, const char* text, int arity, fc_expr** out);
FC_API void fc_expr_free(fc_expr* e);
FC_API int fc_expr_arity(const fc_expr* e);
FC_API fc_status fc_expr_eval(fc_context* ctx, const fc_expr* e, const double* x, int n,
                              fc_number** out);

/* ---- derivatives ----
 * mode: "h" or "gh". var: 1-based coordinate, or 0 for the default
 * (the single variable, or the full multivariable check). order >= 1;
 * order 2 without var on a multivariable expression produces the
 * second-order existence map. */
FC_API fc_status fc_derive(fc_context* ctx, const fc_expr* e, const char* mode, const double* x,
                           int n, int order, int var, fc_result** out);

/* ---- scans & fixtures ---- */

/* lo/hi: per-variable bounds (n entries each). modes: bitmask 1 = H,
 * 2 = gH, 4 = second order. */
FC_API fc_status fc_scan(fc_context* ctx, const char* expr_text, const double* lo,
                         const double* hi, int n, int samples_per_axis, int modes,
                         fc_result** out);
FC_API fc_status fc_run_fixtures(fc_context* ctx, fc_result** out);

/* Level-curve CSV (columns x, alpha, lower, upper) for a one-variable
 * expression. */
FC_API fc_status fc_level_curves_csv(fc_context* ctx, const fc_expr* e, double lo, double hi,
                                     int samples, char** out);
/* Alpha-profile CSV (columns alpha, lower, upper) of a number. */
FC_API fc_status fc_number_profile_csv(fc_context* ctx, const fc_number* n, char** out);

/* ---- results ---- */

/* 1 = exists / differentiable / all fixtures pass; 0 otherwise. */
FC_API int fc_result_verdict(const fc_result* r);
FC_API fc_status fc_result_to_json(fc_context* ctx, const fc_result* r, char** out);
FC_API void fc_result_free(fc_result* r);

FC_API void fc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
