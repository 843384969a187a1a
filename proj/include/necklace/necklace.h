/*
   Copyright 2026 The necklace authors

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

/*
 * C interface to libnecklace.
 *
 * Every fallible call returns an nk_status. On failure a human readable
 * message is available from nk_last_error() on the same thread until the
 * next failing call. Objects are opaque handles released with their
 * matching *_free function; freeing NULL is a no-op. Strings returned as
 * `const char*` belong to the handle they came from and stay valid until
 * that handle is freed. Strings returned through `char**` belong to the
 * caller and are released with nk_string_free.
 *
 * Exact integers cross the boundary as decimal strings. Finite field
 * elements cross as packed integers: the element c_0 + c_1 t + ... of
 * F_p[t]/(modulus) is passed as c_0 + c_1 p + c_2 p^2 + ...
 */

#ifndef NECKLACE_H
#define NECKLACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NECKLACE_BUILDING)
#define NK_API __declspec(dllexport)
#else
#define NK_API __declspec(dllimport)
#endif
#else
#define NK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nk_status {
    NK_OK = 0,
    NK_ERR_INVALID_ARGUMENT = 1,
    NK_ERR_NOT_PRIME = 2,
    NK_ERR_BUDGET_EXCEEDED = 3,
    NK_ERR_OUTSIDE_CONVERGENCE = 4,
    NK_ERR_DEGREE_MISMATCH = 5,
    NK_ERR_INTERNAL = 6,
    NK_ERR_OUT_OF_MEMORY = 7
} nk_status;

typedef enum nk_method { NK_METHOD_RECURSIVE = 0, NK_METHOD_DIRECT = 1 } nk_method;

typedef enum nk_irreducibility_test { NK_TEST_TRIAL = 0, NK_TEST_RABIN = 1 } nk_irreducibility_test;

/* 2^24, used wherever a budget argument is 0 */
#define NK_DEFAULT_ENUMERATION_BUDGET ((uint64_t)1 << 24)

NK_API const char* nk_version(void);
NK_API const char* nk_status_name(nk_status status);
NK_API const char* nk_last_error(void);
NK_API void nk_string_free(char* s);

/* ---- integer primitives ------------------------------------------------ */

NK_API nk_status nk_mobius(uint64_t n, int* out);

/* Writes up to `capacity` divisors of n in ascending order and the total
 * number of divisors to *count. Pass out = NULL to query the count. */
NK_API nk_status nk_divisors(uint64_t n, uint64_t* out, size_t capacity, size_t* count);

/* N(a, n) as a decimal string. */
NK_API nk_status nk_necklace_count(uint64_t a, uint64_t n, char** out);

typedef struct nk_table nk_table;

NK_API nk_status nk_table_build(uint64_t a, uint64_t degree, nk_table** out);
NK_API void nk_table_free(nk_table* table);
NK_API uint64_t nk_table_base(const nk_table* table);
NK_API uint64_t nk_table_degree(const nk_table* table);
/* N(a, n) for 1 <= n <= degree, NULL otherwise. */
NK_API const char* nk_table_value(const nk_table* table, uint64_t n);
NK_API const char* nk_table_json(const nk_table* table);

/* ---- truncated power series -------------------------------------------- */

typedef struct nk_series nk_series;

NK_API nk_status nk_series_from_coefficients(const char* const* coefficients, size_t count, nk_series** out);
NK_API nk_status nk_series_mul(const nk_series* x, const nk_series* y, nk_series** out);
/* (1 - z^n)^e mod z^(degree+1), e a decimal integer. */
NK_API nk_status nk_series_binomial_factor(uint64_t n, const char* e, uint64_t degree, nk_series** out);
/* prod_{n<=degree} (1 - z^n)^N(a,n). */
NK_API nk_status nk_expand_necklace(uint64_t a, uint64_t degree, nk_method method, nk_series** out);
/* prod_{n<=count} (1 - z^n)^e(n) for decimal exponents e(1..count). */
NK_API nk_status nk_expand_exponents(const char* const* exponents, size_t count, nk_method method, nk_series** out);
NK_API void nk_series_free(nk_series* s);
NK_API uint64_t nk_series_degree(const nk_series* s);
NK_API const char* nk_series_coefficient(const nk_series* s, uint64_t j);
NK_API int nk_series_equal(const nk_series* x, const nk_series* y);
NK_API nk_status nk_series_eval(const nk_series* s, double re, double im, double* out_re, double* out_im);
NK_API const char* nk_series_json(const nk_series* s);

/* ---- finite fields ------------------------------------------------------ */

typedef struct nk_field nk_field;
typedef struct nk_poly nk_poly;

NK_API nk_status nk_field_build(uint64_t p, uint64_t k, nk_field** out);
/* Explicit monic modulus over F_p, lowest degree first. */
NK_API nk_status nk_field_with_modulus(uint64_t p, const uint32_t* modulus, size_t length, nk_field** out);
NK_API void nk_field_free(nk_field* field);
NK_API uint32_t nk_field_p(const nk_field* field);
NK_API uint32_t nk_field_k(const nk_field* field);
NK_API uint32_t nk_field_q(const nk_field* field);
NK_API const char* nk_field_json(const nk_field* field);

/* Monic polynomial from packed coefficients, lowest degree first. */
NK_API nk_status nk_poly_create(const nk_field* field, const uint32_t* coefficients, size_t length, nk_poly** out);
NK_API void nk_poly_free(nk_poly* poly);
NK_API uint64_t nk_poly_degree(const nk_poly* poly);
NK_API const char* nk_poly_string(const nk_poly* poly);
NK_API const char* nk_poly_json(const nk_poly* poly);
NK_API nk_status nk_poly_is_irreducible(const nk_poly* poly, nk_irreducibility_test test, int* out);

/* Called once per polynomial with its packed coefficients (degree + 1
 * entries). A nonzero return stops the walk early. */
typedef int (*nk_poly_visitor)(const uint32_t* coefficients, size_t length, void* user);

/* Visits monic polynomials of degree n with ranks in [first, last) in
 * lexicographic order, constant term most significant. last = UINT64_MAX
 * means q^n. */
NK_API nk_status nk_enumerate_monic(const nk_field* field, uint64_t n, uint64_t budget, uint64_t first, uint64_t last,
                                    nk_poly_visitor visit, void* user);

NK_API nk_status nk_count_irreducibles(const nk_field* field, uint64_t n, nk_irreducibility_test test,
                                       uint64_t budget, unsigned workers, uint64_t* out);
NK_API nk_status nk_count_irreducibles_json(const nk_field* field, uint64_t n, nk_irreducibility_test test,
                                            uint64_t budget, unsigned workers, char** out);

/* ---- identity checks ---------------------------------------------------- */

typedef struct nk_symbolic_report nk_symbolic_report;
typedef struct nk_numeric_report nk_numeric_report;
typedef struct nk_bridge_report nk_bridge_report;

NK_API nk_status nk_verify_symbolic(uint64_t a, uint64_t degree, int cross_check, nk_symbolic_report** out);
NK_API void nk_symbolic_report_free(nk_symbolic_report* report);
NK_API int nk_symbolic_report_pass(const nk_symbolic_report* report);
NK_API const char* nk_symbolic_report_json(const nk_symbolic_report* report);

/* Upper bound on the log of the omitted factors n > degree for |z| <= rho. */
NK_API nk_status nk_tail_log_bound(uint64_t a, double rho, uint64_t degree, double* out);

NK_API nk_status nk_verify_numeric(uint64_t a, double re, double im, uint64_t degree, nk_numeric_report** out);
NK_API void nk_numeric_report_free(nk_numeric_report* report);
NK_API int nk_numeric_report_pass(const nk_numeric_report* report);
NK_API double nk_numeric_report_residual(const nk_numeric_report* report);
NK_API double nk_numeric_report_tail_bound(const nk_numeric_report* report);
NK_API double nk_numeric_report_float_slack(const nk_numeric_report* report);
NK_API const char* nk_numeric_report_json(const nk_numeric_report* report);

NK_API nk_status nk_verify_bridge(uint64_t p, uint64_t k, uint64_t n_max, nk_irreducibility_test test, uint64_t budget,
                                  unsigned workers, nk_bridge_report** out);
NK_API void nk_bridge_report_free(nk_bridge_report* report);
NK_API int nk_bridge_report_pass(const nk_bridge_report* report);
NK_API const char* nk_bridge_report_json(const nk_bridge_report* report);

#ifdef __cplusplus
}
#endif

#endif
