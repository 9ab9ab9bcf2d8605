/* Copyright 2026 the nilmetric authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libnilmetric: exact arithmetic in the integer Heisenberg
 * and unitriangular matrix groups, metric estimates, collection to normal
 * form, exact word-length oracles, short-word synthesis, and distortion
 * experiments.
 *
 * Conventions:
 *  - every function returns an nm_status; NM_OK is 0
 *  - outputs are written through pointers, valid only on NM_OK
 *  - strings returned through char** are heap-allocated; release them with
 *    nm_string_free
 *  - opaque handles are released with their matching nm_*_free; freeing
 *    NULL is a no-op
 *  - nm_last_error() describes the most recent failure in the calling
 *    thread
 *  - unbounded integers cross the boundary as decimal strings
 */

#ifndef NILMETRIC_H
#define NILMETRIC_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(NM_BUILDING_SHARED)
#    define NM_API __declspec(dllexport)
#  else
#    define NM_API __declspec(dllimport)
#  endif
#else
#  define NM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nm_status {
    NM_OK = 0,
    NM_ERROR_INVALID_ARGUMENT = 1,  /* bad dimension, generator, span, embedding */
    NM_ERROR_DIMENSION_MISMATCH = 2,
    NM_ERROR_NOT_IN_SUBGROUP = 3,
    NM_ERROR_PARSE = 4,
    NM_ERROR_RESOURCE_LIMIT = 5,
    NM_ERROR_BAD_HANDLE = 6,
    NM_ERROR_INTERNAL = 7
} nm_status;

typedef struct nm_element nm_element;
typedef struct nm_word nm_word;
typedef struct nm_trace nm_trace;
typedef struct nm_ball nm_ball;
typedef struct nm_embedding nm_embedding;
typedef struct nm_profile nm_profile;

NM_API const char* nm_version(void);
NM_API const char* nm_status_name(nm_status s);
NM_API const char* nm_last_error(void);
NM_API void nm_string_free(char* s);

/* ---- group elements -------------------------------------------------- */

NM_API nm_status nm_element_identity(int dim, nm_element** out);
NM_API nm_status nm_element_generator(int dim, int i, int j, const char* exp, nm_element** out);
/* {"dim":3,"entries":[[1,3,9]]}; values may be integers or decimal strings */
NM_API nm_status nm_element_from_json(const char* json, nm_element** out);
NM_API nm_status nm_element_to_json(const nm_element* x, char** out);
NM_API nm_status nm_element_clone(const nm_element* x, nm_element** out);
NM_API void nm_element_free(nm_element* x);

NM_API nm_status nm_element_dim(const nm_element* x, int* out);
NM_API nm_status nm_element_entry(const nm_element* x, int i, int j, char** out);
NM_API nm_status nm_element_equal(const nm_element* a, const nm_element* b, int* out);
NM_API nm_status nm_element_is_identity(const nm_element* x, int* out);

NM_API nm_status nm_element_multiply(const nm_element* a, const nm_element* b, nm_element** out);
NM_API nm_status nm_element_inverse(const nm_element* x, nm_element** out);
NM_API nm_status nm_element_pow(const nm_element* x, const char* exp, nm_element** out);

/* word of the normal form, letters in decreasing generator order */
NM_API nm_status nm_element_normal_form_word(const nm_element* x, nm_word** out);

/* Heisenberg coordinates of a dim = k+2 element in the Heisenberg pattern:
 * {"k":2,"a":[...],"b":[...],"p":...}; NM_ERROR_NOT_IN_SUBGROUP otherwise */
NM_API nm_status nm_element_to_heisenberg_json(const nm_element* x, int k, char** out);
NM_API nm_status nm_element_from_heisenberg_json(const char* json, nm_element** out);

/* ---- words ------------------------------------------------------------ */

/* Tokens `a[i,j]^e` separated by whitespace, `^e` optional. With heis_k > 0
 * (and dim == heis_k + 2) the aliases `a_i`, `b_i`, `c` are accepted too. */
NM_API nm_status nm_word_parse(const char* text, int dim, int heis_k, nm_word** out);
NM_API nm_status nm_word_format(const nm_word* w, int heis_k, char** out);
NM_API void nm_word_free(nm_word* w);

NM_API nm_status nm_word_length(const nm_word* w, char** out); /* sum |exp| */
NM_API nm_status nm_word_letter_count(const nm_word* w, int64_t* out);
NM_API nm_status nm_word_letter(const nm_word* w, int64_t index, int* i, int* j, char** exp);
NM_API nm_status nm_word_evaluate(const nm_word* w, int dim, nm_element** out);

/* ---- collection -------------------------------------------------------- */

NM_API nm_status nm_collect(const nm_word* w, int dim, nm_trace** out);
NM_API void nm_trace_free(nm_trace* t);
NM_API nm_status nm_trace_result_word(const nm_trace* t, nm_word** out);
NM_API nm_status nm_trace_input_length(const nm_trace* t, char** out);
NM_API nm_status nm_trace_swap_count(const nm_trace* t, char** out);
NM_API nm_status nm_trace_max_count(const nm_trace* t, int i, int j, char** out);
/* CSV: i,j,span,max_count,result_exponent */
NM_API nm_status nm_trace_csv(const nm_trace* t, char** out);

/* ---- metric estimates --------------------------------------------------- */

/* floor(m^(1/k)), exact */
NM_API nm_status nm_integer_kth_root(const char* m, int k, char** out);

/* sum |m_ij|^(1/(j-i)); terms_json (optional) maps each term to its value */
NM_API nm_status nm_estimate_t(const nm_element* x, double* value, char** terms_json);
/* exact integer surrogate: sum of floor roots */
NM_API nm_status nm_estimate_t_floor(const nm_element* x, char** out);
/* sum |n_i| + sum |m_j| + sqrt|p| for an element in the Heisenberg pattern */
NM_API nm_status nm_estimate_h(const nm_element* x, int k, double* value, char** terms_json);

/* Sandwich constants E/C - D <= ||x|| <= C E + D verified over the whole
 * BFS ball. gens: "full", "first", or "i,j;i,j;...". heis_k > 0 switches to
 * the Heisenberg estimate. budget 0 means the library default. Returns a
 * JSON report: {"rows":[{"D":..,"C":..,"witness_lower":{...},
 * "witness_upper":{...}},...],"best":{"C":..,"D":..}} */
NM_API nm_status nm_calibrate(int dim, const char* gens, int radius, int heis_k,
                              int64_t budget, char** report_json);
/* same sweep over a ball that is already computed */
NM_API nm_status nm_calibrate_ball(const nm_ball* b, int heis_k, char** report_json);

/* ---- word synthesis ------------------------------------------------------ */

/* minimal decompositions; parts as a JSON array of decimal strings */
NM_API nm_status nm_four_squares(const char* p, char** parts_json);
NM_API nm_status nm_waring_decompose(const char* m, int k, int64_t cap, char** parts_json);

/* expanded iterated commutator evaluating to sign * q^(j-i) at (i,j) */
NM_API nm_status nm_commutator_word(int i, int j, const char* q, int sign, int dim, nm_word** out);

NM_API nm_status nm_short_word(const nm_element* x, nm_word** out);
/* Heisenberg variant; x must be in the pattern for rank k */
NM_API nm_status nm_short_word_h(const nm_element* x, int k, nm_word** out);

/* ---- exact metric --------------------------------------------------------- */

NM_API nm_status nm_ball_compute(int dim, const char* gens, int radius, int64_t budget,
                                 nm_ball** out);
NM_API void nm_ball_free(nm_ball* b);
NM_API nm_status nm_ball_dim(const nm_ball* b, int* out);
NM_API nm_status nm_ball_radius(const nm_ball* b, int* out);
NM_API nm_status nm_ball_size(const nm_ball* b, int64_t* out);
NM_API nm_status nm_ball_sphere_size(const nm_ball* b, int radius, int64_t* out);
/* in_ball is 0 when the element lies beyond the radius (length untouched) */
NM_API nm_status nm_ball_exact_length(const nm_ball* b, const nm_element* x, int64_t* length,
                                      int* in_ball);
/* geodesic witness word recorded by the search */
NM_API nm_status nm_ball_witness(const nm_ball* b, const nm_element* x, nm_word** out);
/* NILBALL1 line-oriented file format */
NM_API nm_status nm_ball_write(const nm_ball* b, const char* path);
NM_API nm_status nm_ball_read(const char* path, nm_ball** out);

/* ---- distortion ------------------------------------------------------------ */

/* kind: "heis-subset" (k, l, subset "1,3,.."), "heis-in-T" (k),
 * "corner" (k, l), "block" (k, l, param = a), "composed" (k, l, param = r) */
NM_API nm_status nm_embedding_create(const char* kind, int k, int l, int param,
                                     const char* subset, nm_embedding** out);
NM_API void nm_embedding_free(nm_embedding* e);
NM_API nm_status nm_embedding_describe(const nm_embedding* e, char** out);
NM_API nm_status nm_embedding_predicted_exponent(const nm_embedding* e, double* out);
NM_API nm_status nm_embedding_apply(const nm_embedding* e, const nm_element* x, nm_element** out);

/* span j - i of the smallest normal-form generator of x (x != identity) */
NM_API nm_status nm_cyclic_exponent_t(const nm_element* x, int* out);

NM_API nm_status nm_distortion_profile(const nm_embedding* e, int64_t n_max, int perturb_count,
                                       uint64_t seed, nm_profile** out);
/* profile of the cyclic subgroup generated by x against the T estimate */
NM_API nm_status nm_cyclic_profile(const nm_element* x, int64_t n_max, nm_profile** out);
NM_API void nm_profile_free(nm_profile* p);
NM_API nm_status nm_profile_description(const nm_profile* p, char** out);
NM_API nm_status nm_profile_fitted_exponent(const nm_profile* p, double* out);
NM_API nm_status nm_profile_predicted_exponent(const nm_profile* p, double* out);
NM_API nm_status nm_profile_sample_count(const nm_profile* p, int* out);
/* missing samples report max_inner = -1 */
NM_API nm_status nm_profile_sample(const nm_profile* p, int index, double* n, double* max_inner);
/* columns n,max_inner_estimate,log_n,log_max with a description header */
NM_API nm_status nm_profile_csv(const nm_profile* p, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NILMETRIC_H */
